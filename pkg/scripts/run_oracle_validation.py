#!/usr/bin/env python3
"""Validate the closed-form recursion against the agent-based simulator.

Runs the fixed six-setting manifest (three transmission rates each, 100 runs,
29 days) and writes a JSON report. Pass --convergence to add the slow
100-vs-1000-run comparison across seed batches.

Usage: python scripts/run_oracle_validation.py [report.json] [--convergence]
"""

import json
import sys

from occupareto.scenarios import VALIDATION_MANIFEST, convergence_report, run_validation


def main() -> None:
    args = [a for a in sys.argv[1:] if a != "--convergence"]
    path = args[0] if args else "validation_report.json"
    report = run_validation(VALIDATION_MANIFEST)
    if "--convergence" in sys.argv:
        report["convergence"] = convergence_report()
    with open(path, "w") as f:
        json.dump(report, f, indent=2)
        f.write("\n")
    for row in report["rows"]:
        print(f"setting {row['setting']} kappa={row['kappa']:>4} occ={row['occup']} "
              f"n_v={row['n_v']:>2} beta_u={row['beta_u']:.2f}: MAPE {row['mape']:.3f}")
    print(f"worst MAPE {report['worst_mape']:.3f} "
          f"(threshold {report['threshold']}): "
          f"{'PASS' if report['passed'] else 'FAIL'}")
    print(f"report written to {path}")
    sys.exit(0 if report["passed"] else 3)


if __name__ == "__main__":
    main()
