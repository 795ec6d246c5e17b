import numpy as np
import pytest
from fastapi.testclient import TestClient

import occupareto
from occupareto import OrganizationParams, pareto_sweep, trajectory_two_group
from occupareto.api import create_app
from occupareto.pipeline import ObjectivePipeline


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


SCENARIO_A = {
    "n": 100, "n_v": 50, "beta_u": 0.04, "beta_v": 0.008, "prod": 0.6,
    "tau": 7, "contact_base": 5.0, "contact_slope": 0.10, "incidence_7day": 500.0,
}


class TestHealth:
    def test_ok_with_version(self, client):
        r = client.get("/api/health")
        assert r.status_code == 200
        body = r.json()
        assert body["status"] == "ok"
        assert body["engine_version"] == occupareto.__version__

    def test_repeated_calls_identical(self, client):
        assert client.get("/api/health").json() == client.get("/api/health").json()


class TestPareto:
    def test_scenario_a_contains_intersection_neighborhood(self, client):
        r = client.post("/api/pareto", json=SCENARIO_A)
        assert r.status_code == 200
        body = r.json()
        occs = np.array([p["occup"] for p in body["frontier"]])
        infs = np.array([p["expected_infections"] for p in body["frontier"]])
        bg = body["background_risk"]
        i = int(np.argmax(infs >= bg))
        f = (bg - infs[i - 1]) / (infs[i] - infs[i - 1])
        crossing = occs[i - 1] + f * (occs[i] - occs[i - 1])
        assert crossing == pytest.approx(0.64, abs=0.07)
        assert body["metadata"]["engine_version"] == occupareto.__version__
        assert body["metadata"]["pipeline"] == "workplace-risk"

    def test_disease_free_single_point_under_orgwide_arrival_estimator(self, client):
        payload = dict(SCENARIO_A, beta_u=0.0, beta_v=0.0, pipeline="cumulative")
        r = client.post("/api/pareto", json=payload)
        assert r.status_code == 200
        frontier = r.json()["frontier"]
        assert len(frontier) == 1
        assert frontier[0]["occup"] == 1.0

    def test_matches_library_frontier(self, client):
        r = client.post("/api/pareto", json=SCENARIO_A)
        params = OrganizationParams(**{k: v for k, v in SCENARIO_A.items()})
        frontier = pareto_sweep(params)
        got = r.json()["frontier"]
        assert len(got) == len(frontier)
        for row, p in zip(got, frontier.points):
            assert row["occup"] == p.occup
            assert row["expected_infections"] == p.expected_infections
            assert row["total_productivity"] == p.total_productivity

    def test_deterministic_responses(self, client):
        a = client.post("/api/pareto", json=SCENARIO_A).json()
        b = client.post("/api/pareto", json=SCENARIO_A).json()
        assert a == b

    def test_echoes_validated_params(self, client):
        r = client.post("/api/pareto", json=SCENARIO_A)
        assert r.json()["params"]["n"] == 100
        assert r.json()["params"]["occupancy_threshold"] == 0.0


class TestTrajectory:
    def test_empty_workplace_flat_series(self, client):
        r = client.post("/api/trajectory", json=dict(SCENARIO_A, occup=0.0, horizon=10))
        assert r.status_code == 200
        body = r.json()
        assert body["expected_infected"] == [1.0] * 11

    def test_unvaccinated_matches_single_group(self, client):
        payload = dict(SCENARIO_A, n_v=0, occup=1.0, horizon=10)
        r = client.post("/api/trajectory", json=payload)
        body = r.json()
        from occupareto import trajectory_single_group
        params = OrganizationParams(**{k: v for k, v in SCENARIO_A.items()} | {"n_v": 0})
        one = trajectory_single_group(
            100, 0.04, params.contact_base + params.contact_slope * 100, 1.0, 10
        )
        assert body["expected_infected"] == [float(x) for x in one.expected_infected]

    def test_matches_library_trajectory(self, client):
        payload = dict(SCENARIO_A, occup=0.5, horizon=14)
        r = client.post("/api/trajectory", json=payload)
        params = OrganizationParams(**SCENARIO_A)
        traj = trajectory_two_group(params, 0.5, 14)
        assert r.json()["p_u"] == [float(x) for x in traj.p_u]
        assert r.json()["p_v"] == [float(x) for x in traj.p_v]


class TestErrors:
    def test_invariant_violation_400_names_field(self, client):
        r = client.post("/api/pareto", json=dict(SCENARIO_A, n=1))
        assert r.status_code == 400
        assert "n" in str(r.json()["detail"])

    def test_type_error_400_with_field_messages(self, client):
        r = client.post("/api/pareto", json=dict(SCENARIO_A, tau="often"))
        assert r.status_code == 400
        detail = r.json()["detail"]
        assert any(item["field"] == "tau" for item in detail)

    def test_prod_at_least_one_422_with_trivial_optimum(self, client):
        r = client.post("/api/pareto", json=dict(SCENARIO_A, prod=1.0))
        assert r.status_code == 422
        assert "occup = 0" in r.json()["detail"]

    def test_beta_ordering_400(self, client):
        r = client.post("/api/pareto", json=dict(SCENARIO_A, beta_v=0.5))
        assert r.status_code == 400


def test_cross_surface_equality_cli_vs_api(capsys, client):
    """The HTTP frontier and the CLI frontier agree number-for-number."""
    import csv as csv_mod
    import io

    from occupareto.cli import main

    code = main(["pareto", "--n", "100", "--nv", "50", "--beta-u", "0.04",
                 "--beta-v", "0.008", "--prod", "0.6", "--tau", "7",
                 "--contact-base", "5", "--contact-slope", "0.10",
                 "--incidence", "500"])
    out = capsys.readouterr().out
    assert code == 0
    rows = list(csv_mod.DictReader(io.StringIO(out)))
    api_rows = client.post("/api/pareto", json=SCENARIO_A).json()["frontier"]
    assert len(rows) == len(api_rows)
    for cli_row, api_row in zip(rows, api_rows):
        assert float(cli_row["occup"]) == api_row["occup"]
        assert float(cli_row["expected_infections"]) == api_row["expected_infections"]
        assert float(cli_row["total_productivity"]) == api_row["total_productivity"]
