"""Command-line behavior: output shapes, exit codes, determinism."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from routhkit import __version__
from routhkit.cli import main, render_json

GOLDEN_DIR = Path(__file__).parent / "golden"


def run_cli(capsys, *argv) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAnalyze:
    def test_quartic_eps_row(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "--coeffs", "1,0,0,0,1",
                               "--policy", "eps-row")
        assert code == 1
        assert "sign changes: 2" in out
        assert "verdict: Unstable" in out
        assert "ZeroRow" in out

    def test_json_document_keys(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "--coeffs", "1,0,0,0,1",
                               "--policy", "eps-row", "--json")
        doc = json.loads(out)
        assert list(doc) == ["input", "policy", "array", "events", "signs",
                             "sign_changes", "rhp_count", "verdict", "oracle",
                             "version"]
        assert doc["signs"] == ["+", "+", "-", "+", "+"]
        assert doc["sign_changes"] == 2
        assert doc["rhp_count"] == 2
        assert doc["verdict"] == "Unstable"
        assert doc["oracle"] is None
        assert doc["version"] == __version__
        assert doc["input"] == {"degree": 4,
                                "coefficients": ["1", "0", "0", "0", "1"]}

    def test_exit_code_stable(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "--coeffs", "1,2,1")
        assert code == 0
        assert "verdict: Stable" in out

    def test_exit_code_marginal(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "--coeffs", "1,0,1")
        assert code == 2
        assert "verdict: MarginalOrSymmetric" in out

    def test_oracle_agreement(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "--coeffs", "1,0,-7,-6",
                               "--oracle", "--json")
        assert code == 1
        doc = json.loads(out)
        assert doc["rhp_count"] == 1
        assert doc["oracle"]["agreement"] is True
        assert doc["oracle"]["rhp"] == 1

    def test_data_error(self, capsys):
        code, _, err = run_cli(capsys, "analyze", "--coeffs", "spam")
        assert code == 65
        assert "error" in err

    def test_policy_unsupported_is_data_error(self, capsys):
        code, _, err = run_cli(capsys, "analyze", "--coeffs", "1,0,0,0,1",
                               "--policy", "single-eps")
        assert code == 65
        assert "single-eps" in err

    def test_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["analyze", "--nonsense"])
        assert exc.value.code == 64
        capsys.readouterr()

    def test_term_form_input(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "--coeffs", "s^4 + 1",
                               "--policy", "eps-row", "--json")
        assert json.loads(out)["sign_changes"] == 2

    def test_negative_leading_coefficient(self, capsys):
        # leading dash needs the = form, then the sign flip is recorded
        code, out, _ = run_cli(capsys, "analyze", "--coeffs=-1,-2,-1",
                               "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["verdict"] == "Stable"
        assert [e["kind"] for e in doc["events"]] == ["LeadingSignFlip"]


class TestCompare:
    def test_quartic_rows(self, capsys):
        code, out, _ = run_cli(capsys, "compare", "--coeffs", "1,0,0,0,1",
                               "--json")
        assert code == 0
        doc = json.loads(out)
        by_policy = {row["policy"]: row for row in doc["policies"]}
        assert by_policy["single-eps"]["supported"] is False
        assert by_policy["single-eps"]["verdict"] == "Undetermined"
        assert by_policy["eps-row"]["sign_changes"] == 2
        assert by_policy["derivative"]["sign_changes"] == 2
        assert doc["oracle"]["rhp"] == 2
        assert by_policy["eps-row"]["agrees_with_oracle"] is True

    def test_stable_polynomial_all_policies(self, capsys):
        code, out, _ = run_cli(capsys, "compare", "--coeffs", "1,2,1", "--json")
        assert code == 0
        doc = json.loads(out)
        assert all(row["sign_changes"] == 0 for row in doc["policies"])
        assert doc["oracle"]["rhp"] == 0

    def test_cubic_all_policies_agree(self, capsys):
        code, out, _ = run_cli(capsys, "compare", "--coeffs", "1,0,-7,-6")
        assert code == 0
        assert out.count("Unstable") == 3

    def test_table_mentions_unsupported(self, capsys):
        _, out, _ = run_cli(capsys, "compare", "--coeffs", "1,0,0,0,1")
        assert "PolicyUnsupported" in out
        assert "Undetermined" in out


class TestCorpus:
    def test_small_run_agrees(self, capsys):
        code, out, _ = run_cli(capsys, "corpus", "--count", "25",
                               "--max-degree", "6", "--seed", "11", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["agreements"] == 25
        assert doc["disagreements"] == []

    def test_single_minimal_case(self, capsys):
        code, out, _ = run_cli(capsys, "corpus", "--count", "1",
                               "--max-degree", "2", "--seed", "0")
        assert code == 0
        assert "agreement: 1/1" in out

    def test_lhp_only_all_stable(self, capsys):
        code, out, _ = run_cli(capsys, "corpus", "--count", "40",
                               "--max-degree", "7", "--seed", "5",
                               "--lhp-only", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["verdicts"] == {"Stable": 40}
        assert doc["events"] == {}

    def test_deterministic_for_fixed_seed(self, capsys):
        _, first, _ = run_cli(capsys, "corpus", "--count", "30",
                              "--max-degree", "8", "--seed", "123", "--json")
        _, second, _ = run_cli(capsys, "corpus", "--count", "30",
                               "--max-degree", "8", "--seed", "123", "--json")
        assert first == second

    def test_different_seeds_differ(self, capsys):
        _, first, _ = run_cli(capsys, "corpus", "--count", "30",
                              "--max-degree", "8", "--seed", "1", "--json")
        _, second, _ = run_cli(capsys, "corpus", "--count", "30",
                               "--max-degree", "8", "--seed", "2", "--json")
        assert first != second


class TestSweep:
    def test_cubic_gain_interval(self, capsys):
        code, out, _ = run_cli(capsys, "sweep", "--coeffs", "1,3,3,K",
                               "--range", "0:12", "--steps", "1200", "--json")
        assert code == 0
        doc = json.loads(out)
        assert len(doc["intervals"]) == 1
        lo = eval_fraction(doc["intervals"][0]["lo"])
        hi = eval_fraction(doc["intervals"][0]["hi"])
        step = 12 / 1199
        assert abs(lo - 0) <= step
        assert abs(hi - 9) <= step

    def test_linear_positive_gain(self, capsys):
        # negative lower bound needs the = form so argparse keeps the value
        _, out, _ = run_cli(capsys, "sweep", "--coeffs", "1,K",
                            "--range=-1:1", "--steps", "200", "--json")
        doc = json.loads(out)
        assert len(doc["intervals"]) == 1
        lo = eval_fraction(doc["intervals"][0]["lo"])
        hi = eval_fraction(doc["intervals"][0]["hi"])
        assert 0 < lo <= 2 / 199
        assert hi == 1

    def test_never_stable(self, capsys):
        _, out, _ = run_cli(capsys, "sweep", "--coeffs", "1,0,K",
                            "--range", "0:1", "--steps", "10", "--json")
        assert json.loads(out)["intervals"] == []

    def test_missing_parameter(self, capsys):
        code, _, err = run_cli(capsys, "sweep", "--coeffs", "1,2,3",
                               "--range", "0:1", "--steps", "5")
        assert code == 65
        assert "K" in err

    def test_multiple_parameters(self, capsys):
        code, _, _ = run_cli(capsys, "sweep", "--coeffs", "K,1,K",
                             "--range", "0:1", "--steps", "5")
        assert code == 65

    def test_bad_range_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["sweep", "--coeffs", "1,K", "--range", "oops",
                  "--steps", "5"])
        assert exc.value.code == 64
        capsys.readouterr()

    def test_samples_on_request(self, capsys):
        _, out, _ = run_cli(capsys, "sweep", "--coeffs", "1,K",
                            "--range", "0:1", "--steps", "3", "--samples",
                            "--json")
        doc = json.loads(out)
        assert [s["verdict"] for s in doc["samples"]] == \
            ["MarginalOrSymmetric", "Stable", "Stable"]


class TestMachineOutput:
    def test_round_trip_is_byte_identical(self, capsys):
        for argv in (["analyze", "--coeffs", "1,0,0,0,1", "--policy",
                      "eps-row", "--json"],
                     ["compare", "--coeffs", "1,2,1", "--json"],
                     ["sweep", "--coeffs", "1,K", "--range", "0:1",
                      "--steps", "5", "--json"],
                     ["corpus", "--count", "5", "--max-degree", "4",
                      "--seed", "9", "--json"]):
            main(argv)
            out = capsys.readouterr().out
            assert render_json(json.loads(out)) == out

    def test_golden_file(self, capsys):
        golden = (GOLDEN_DIR / "analyze_quartic_eps_row.json").read_text()
        for _ in range(2):
            code, out, _ = run_cli(capsys, "analyze", "--coeffs", "1,0,0,0,1",
                                   "--policy", "eps-row", "--json")
            assert code == 1
            assert out == golden


def eval_fraction(text: str) -> float:
    if "/" in text:
        num, den = text.split("/")
        return int(num) / int(den)
    return float(text)
