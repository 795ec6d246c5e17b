#!/usr/bin/env python3
"""Record real service responses + engine interpolations for the dashboard's
cross-check tests.

Captures, for design-grid rows a/b/l/o: the verbatim /api/pareto response,
the engine's background-risk intersection, and the productivity-target
what-if for row (b). The dashboard's test suite asserts that its own
interpolation reproduces these numbers to 3 decimal places.

Usage: python scripts/export_ui_fixtures.py [frontend/src/fixtures/scenarios.json]
"""

import json
import os
import sys

from fastapi.testclient import TestClient

from occupareto.api import create_app
from occupareto.scenarios import TABLE2, run_scenario, scenario_params, whatif_productivity_target


def main() -> None:
    out = sys.argv[1] if len(sys.argv) > 1 else "frontend/src/fixtures/scenarios.json"
    client = TestClient(create_app())
    by_id = {c.id: c for c in TABLE2}
    fixtures = {}
    for sid in ("a", "b", "l", "o"):
        cfg = by_id[sid]
        params = scenario_params(cfg)
        body = {
            "n": params.n, "n_v": params.n_v, "beta_u": params.beta_u,
            "beta_v": params.beta_v, "prod": params.prod, "tau": params.tau,
            "contact_base": params.contact_base, "contact_slope": params.contact_slope,
            "incidence_7day": params.incidence_7day,
            "occupancy_threshold": params.occupancy_threshold,
        }
        response = client.post("/api/pareto", json=body)
        response.raise_for_status()
        result = run_scenario(cfg)
        fixtures[sid] = {
            "request": body,
            "response": response.json(),
            "expected": {
                "background_risk": result.background_risk,
                "intersection_occup": result.intersection_occup,
                "productivity_at_intersection": result.productivity_at_intersection,
            },
        }
    occ_b, risk_b = whatif_productivity_target(by_id["b"], 0.70)
    fixtures["whatif_b"] = {"target": 0.70, "occup": occ_b, "risk": risk_b}

    os.makedirs(os.path.dirname(out), exist_ok=True)
    with open(out, "w") as f:
        json.dump(fixtures, f, indent=1)
        f.write("\n")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
