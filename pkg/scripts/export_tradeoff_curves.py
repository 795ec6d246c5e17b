#!/usr/bin/env python3
"""Export the occupancy-vs-objectives comparison curves (weekly vs biweekly
testing) as plot-ready CSV.

Usage: python scripts/export_tradeoff_curves.py [out.csv] [--beta-u 0.04]
"""

import argparse
import csv

from occupareto.scenarios import figure3_curves


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("out", nargs="?", default="results/tradeoff_curves.csv")
    parser.add_argument("--beta-u", type=float, default=0.04)
    args = parser.parse_args()

    curves = figure3_curves(beta_u=args.beta_u)
    import os
    os.makedirs(os.path.dirname(args.out) or ".", exist_ok=True)
    with open(args.out, "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["tau", "occup", "expected_infections", "productivity_normalized"])
        for tau, series in curves.items():
            for i in range(len(series["occup"])):
                writer.writerow([tau, repr(float(series["occup"][i])),
                                 repr(float(series["infections"][i])),
                                 repr(float(series["productivity_normalized"][i]))])
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
