import csv
import io
import json
import os

import numpy as np
import pytest

from occupareto import OrganizationParams, trajectory_two_group
from occupareto.cli import main
from occupareto.scenarios import TABLE2, run_scenario


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestTrajectory:
    def test_zero_transmission_columns(self, capsys):
        code, out, _ = run_cli(capsys, "trajectory", "--n", "150", "--beta-u", "0",
                               "--beta-v", "0", "--horizon", "10")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 11
        assert all(float(r["p_u"]) == 0.0 for r in rows)
        assert all(float(r["expected_infected"]) == 1.0 for r in rows)

    def test_single_employee_exits_2_citing_invariant(self, capsys):
        code, _, err = run_cli(capsys, "trajectory", "--n", "1")
        assert code == 2
        assert "n-1" in err or "n must be" in err

    def test_columns_match_library_call(self, capsys):
        args = ["trajectory", "--n", "150", "--nv", "75", "--beta-u", "0.10",
                "--beta-v", "0.015", "--contact-base", "10", "--contact-slope", "0",
                "--occup", "1.0", "--horizon", "29"]
        code, out, _ = run_cli(capsys, *args)
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        params = OrganizationParams(n=150, n_v=75, beta_u=0.10, beta_v=0.015,
                                    contact_base=10.0, contact_slope=0.0)
        traj = trajectory_two_group(params, 1.0, 29)
        for t, row in enumerate(rows):
            assert float(row["p_u"]) == float(traj.p_u[t])
            assert float(row["p_v"]) == float(traj.p_v[t])
            assert float(row["expected_infected"]) == float(traj.expected_infected[t])


class TestPareto:
    def scenario_a_argv(self):
        return ["pareto", "--n", "100", "--nv", "50", "--beta-u", "0.04",
                "--beta-v", "0.008", "--prod", "0.6", "--tau", "7",
                "--contact-base", "5", "--contact-slope", "0.10",
                "--incidence", "500"]

    def test_scenario_a_intersection_row(self, capsys):
        code, out, err = run_cli(capsys, *self.scenario_a_argv())
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        background = float(err.split("background_risk=")[1])
        occs = np.array([float(r["occup"]) for r in rows])
        infs = np.array([float(r["expected_infections"]) for r in rows])
        i = int(np.argmax(infs >= background))
        f = (background - infs[i - 1]) / (infs[i] - infs[i - 1])
        crossing = occs[i - 1] + f * (occs[i] - occs[i - 1])
        assert crossing == pytest.approx(0.64, abs=0.07)

    def test_threshold_one_single_row(self, capsys):
        code, out, _ = run_cli(capsys, "pareto", "--n", "50",
                               "--occupancy-threshold", "1.0")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 1
        assert float(rows[0]["occup"]) == 1.0

    def test_output_round_trips_to_identical_frontier(self, capsys):
        code, out, _ = run_cli(capsys, *self.scenario_a_argv())
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        frontier = run_scenario(TABLE2[0]).frontier
        assert len(rows) == len(frontier)
        for row, p in zip(rows, frontier.points):
            assert float(row["occup"]) == p.occup
            assert float(row["expected_infections"]) == p.expected_infections
            assert float(row["total_productivity"]) == p.total_productivity
            assert float(row["tau_bar"]) == p.tau_bar
            assert int(row["present_count"]) == p.present_count


class TestValidate:
    def test_zero_beta_manifest_overridden_smoke(self, capsys, tmp_path, monkeypatch):
        # patched manifest with beta 0 gives MAPE exactly 0
        import occupareto.cli as cli_mod
        manifest = dict(cli_mod.VALIDATION_MANIFEST)
        manifest["beta_u"] = [0.0]
        manifest["settings"] = [{"id": "a", "kappa": 10.0, "occup": 1.0, "n_v": 0}]
        manifest["runs"] = 3
        monkeypatch.setattr(cli_mod, "VALIDATION_MANIFEST", manifest)
        report_path = tmp_path / "report.json"
        code, out, _ = run_cli(capsys, "validate", "--report", str(report_path))
        assert code == 0
        report = json.loads(report_path.read_text())
        assert report["sections"][0]["rows"][0]["mape"] == 0.0

    def test_reduced_runs_are_report_only(self, capsys, tmp_path):
        report_path = tmp_path / "report.json"
        code, _, _ = run_cli(capsys, "validate", "--runs", "1", "--seed", "42",
                             "--report", str(report_path))
        assert code == 0      # 1-run rows never gate the exit code
        report = json.loads(report_path.read_text())
        assert len(report["sections"]) == 1
        assert all(r["runs"] == 1 for r in report["sections"][0]["rows"])

    def test_two_sections_when_runs_repeated(self, capsys, tmp_path):
        report_path = tmp_path / "report.json"
        code, _, _ = run_cli(capsys, "validate", "--runs", "1", "--runs", "2",
                             "--seed", "42", "--report", str(report_path))
        assert code == 0
        report = json.loads(report_path.read_text())
        assert [s["rows"][0]["runs"] for s in report["sections"]] == [1, 2]


class TestScenarios:
    def test_default_table_writes_fifteen_files(self, capsys, tmp_path):
        code, out, _ = run_cli(capsys, "scenarios", "--out", str(tmp_path))
        assert code == 0
        files = os.listdir(tmp_path)
        assert sum(f.startswith("scenario_") for f in files) == 15
        assert out.count("scenario ") == 15

    def test_missing_table_file_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "scenarios", "--table", "/nonexistent.csv")
        assert code == 2
        assert "error" in err

    def test_summary_row_matches_library(self, capsys, tmp_path):
        code, out, _ = run_cli(capsys, "scenarios", "--out", str(tmp_path))
        assert code == 0
        line_o = next(l for l in out.splitlines() if l.startswith("scenario o:"))
        res = run_scenario(next(c for c in TABLE2 if c.id == "o"))
        assert f"{res.intersection_occup:.4f}" in line_o
        assert f"{res.productivity_at_intersection:.4f}" in line_o

    def test_custom_table(self, capsys, tmp_path):
        table = tmp_path / "table.csv"
        table.write_text(
            "id,tau,prod,vaccination_rate,contact_level,beta_u\n"
            "z,7,0.6,0.5,Low,0.04\n"
        )
        code, out, _ = run_cli(capsys, "scenarios", "--table", str(table))
        assert code == 0
        assert out.count("scenario ") == 1
