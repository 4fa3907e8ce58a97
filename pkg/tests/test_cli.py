"""End-to-end command-line runs and exit-code conventions."""

import csv
import json

import pytest

from prefattach.cli import main


def _read_csv(path):
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


class TestSimulate:
    def test_writes_the_three_result_files(self, tmp_path):
        out = tmp_path / "res"
        code = main(
            [
                "simulate",
                "--law", "det:1",
                "--n", "500",
                "--reps", "2",
                "--seed", "5",
                "--out", str(out),
            ]
        )
        assert code == 0
        rows = _read_csv(out / "degree_distribution.csv")
        pooled_vertices = sum(int(r["count"]) for r in rows)
        assert pooled_vertices == 2 * 502
        assert (out / "trajectories.csv").exists()
        assert (out / "max_degree.csv").exists()

    def test_same_seed_gives_identical_files(self, tmp_path):
        args = ["simulate", "--law", "geom:0.5", "--n", "200", "--seed", "9"]
        a, b = tmp_path / "a", tmp_path / "b"
        assert main(args + ["--out", str(a)]) == 0
        assert main(args + ["--out", str(b)]) == 0
        for name in ("degree_distribution.csv", "trajectories.csv", "max_degree.csv"):
            assert (a / name).read_text() == (b / name).read_text()


class TestEmbed:
    def test_writes_event_times_and_pooled_distribution(self, tmp_path):
        out = tmp_path / "res"
        code = main(
            ["embed", "--law", "det:1", "--n", "300", "--reps", "2", "--out", str(out)]
        )
        assert code == 0
        rows = _read_csv(out / "tau.csv")
        assert len(rows) == 300
        assert float(rows[0]["tau"]) > 0
        dd = _read_csv(out / "degree_distribution.csv")
        assert sum(int(r["count"]) for r in dd) == 2 * 302


class TestTheory:
    def test_emits_the_spectrum_with_the_closed_form_column(self, tmp_path):
        out = tmp_path / "res"
        code = main(["theory", "--law", "det:1", "--jmax", "50", "--out", str(out)])
        assert code == 0
        rows = _read_csv(out / "pi.csv")
        assert len(rows) == 50
        assert float(rows[0]["pi_recursive"]) == pytest.approx(2 / 3, abs=1e-9)
        assert float(rows[0]["pi_explicit_or_blank"]) == pytest.approx(2 / 3, abs=1e-9)

    def test_closed_form_column_is_blank_for_non_fixed_laws(self, tmp_path):
        out = tmp_path / "res"
        assert main(["theory", "--law", "geom:0.5", "--jmax", "30", "--out", str(out)]) == 0
        rows = _read_csv(out / "pi.csv")
        assert all(r["pi_explicit_or_blank"] == "" for r in rows)


class TestAnalyze:
    def test_writes_simulation_files_plus_the_summary(self, tmp_path):
        out = tmp_path / "res"
        code = main(
            [
                "analyze",
                "--law", "det:1",
                "--n", "5000",
                "--reps", "2",
                "--seed", "3",
                "--out", str(out),
            ]
        )
        assert code == 0
        summary = json.loads((out / "analysis.json").read_text())
        assert summary["tv_core"] < 0.05
        assert summary["theta"] == pytest.approx(0.5)
        assert summary["tail_fit"]["slope"] < -2.0
        assert len(summary["runs"]) == 2
        assert all("max_tail_oscillation" in r for r in summary["runs"])
        assert (out / "degree_distribution.csv").exists()


class TestVerify:
    def test_theory_profile_passes_and_writes_a_report(self, tmp_path, capsys):
        out = tmp_path / "res"
        code = main(["verify", "--profile", "theory", "--out", str(out)])
        assert code == 0
        report = json.loads((out / "report.json").read_text())
        assert report["pass"] is True
        assert len(report["checks"]) == 4
        printed = capsys.readouterr().out
        assert printed.count("PASS") == 4

    def test_unreachable_threshold_turns_the_exit_code(self, tmp_path):
        out = tmp_path / "res"
        code = main(
            [
                "verify",
                "--profile", "theory",
                "--threshold", "explicit-spectrum-crosscheck=0",
                "--out", str(out),
            ]
        )
        assert code == 1
        report = json.loads((out / "report.json").read_text())
        assert report["pass"] is False


class TestUsageErrors:
    def test_bad_law_string_exits_with_usage_code(self, tmp_path, capsys):
        code = main(["simulate", "--law", "foo:1", "--out", str(tmp_path)])
        assert code == 2
        assert capsys.readouterr().err.strip() != ""

    def test_unknown_subcommand_is_an_argparse_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2

    def test_bad_threshold_syntax_is_a_usage_error(self, tmp_path):
        code = main(
            ["verify", "--profile", "theory", "--threshold", "nocolon", "--out", str(tmp_path)]
        )
        assert code == 2
