#!/usr/bin/env python3
"""Run the 15-row experiment design grid and write the CSV artifacts.

Usage: python scripts/run_design_grid.py [out_dir]
"""

import sys

from occupareto.scenarios import TABLE2, run_all


def main() -> None:
    out_dir = sys.argv[1] if len(sys.argv) > 1 else "results/design_grid"
    results = run_all(TABLE2, out_dir=out_dir)
    for res in results:
        occ = "-" if res.intersection_occup is None else f"{res.intersection_occup:.3f}"
        tp = ("-" if res.productivity_at_intersection is None
              else f"{res.productivity_at_intersection:.3f}")
        print(f"{res.config.id}: background={res.background_risk:.3f} "
              f"intersection occup={occ} productivity={tp}")
    print(f"wrote artifacts to {out_dir}/")


if __name__ == "__main__":
    main()
