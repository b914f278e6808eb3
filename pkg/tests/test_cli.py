"""CLI subcommands: output schemas, determinism and exit codes."""

import io
import json

import pytest

from groupcensus import cli
from groupcensus.report import CheckResult, VerificationReport


def run_cli(*argv):
    out = io.StringIO()
    code = cli.run(list(argv), out=out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run_cli(*argv, "--format", "json")
    return code, json.loads(text)


def test_analyze_text():
    code, text = run_cli("analyze", "Q8")
    assert code == 0
    assert "delta: 3" in text
    assert "sigma: (4,4,4)" in text


def test_analyze_json():
    code, payload = run_json("analyze", "sd(C3 x C3, C2, inv)")
    assert code == 0
    assert payload["census"]["delta"] == 4
    assert payload["census"]["sigma"] == [3, 3, 3, 3]
    assert set(payload["census"]) == {"order", "n_d", "cyclic_count",
                                      "delta", "sigma"}


def test_analyze_parse_error_is_usage_error():
    code, _ = run_cli("analyze", "C100")
    assert code == 2
    code, _ = run_cli("analyze", "notagroup")
    assert code == 2


def test_candidates_counts():
    for delta, expected in [(1, 3), (4, 27), (5, 49)]:
        code, payload = run_json("candidates", "--delta", str(delta))
        assert code == 0
        assert payload["count"] == expected


def test_candidates_latex_caption():
    code, text = run_cli("candidates", "--delta", "4", "--format", "latex")
    assert code == 0
    assert "\\caption{Table for $\\Delta(G)=4$}" in text
    assert "none" in text  # the 1+1+1+1 partition row


def test_exclude_sections():
    code, payload = run_json("exclude", "--delta", "5")
    assert code == 0
    assert payload["counts"] == {"candidates": 49, "excluded": 47,
                                 "survivors": 2}
    assert payload["survivors"] == [[3, 4, 4, 4, 6], [7]]
    rules = {tuple(e["signature"]): e["recorded_rule"]
             for e in payload["exclusions"]}
    assert rules[(4, 4, 5)] == "pattern_445"


def test_exclude_latex_has_both_tables():
    code, text = run_cli("exclude", "--delta", "2", "--format", "latex")
    assert code == 0
    assert "Exclusion table for $\\Delta(G)=2$" in text
    assert "Revised table for $\\Delta(G)=2$" in text


def test_verify_all_passes():
    code, payload = run_json("verify", "--all")
    assert code == 0
    assert payload["pass"] is True
    assert len(payload["claims"]) == 25
    assert set(payload) == {"claims", "sweep", "properties", "pass"}


def test_verify_single_delta():
    code, text = run_cli("verify", "--delta", "3")
    assert code == 0
    assert text.strip().endswith("PASS")


def test_verify_failure_exit_code(monkeypatch):
    failing = VerificationReport(
        sweep=[CheckResult("stub", False, "synthetic failure")])
    monkeypatch.setattr(cli, "verify_all", lambda: failing)
    code, text = run_cli("verify", "--all")
    assert code == 1
    assert "FAIL" in text


def test_catalog_search():
    code, payload = run_json("catalog", "--max-order", "24", "--delta", "2")
    assert code == 0
    assert {e["label"] for e in payload} == {"C6", "C4xC2", "D12", "D8xC2"}
    code, payload = run_json("catalog", "--max-order", "16",
                             "--sigma", "4,4,4,4")
    assert {e["label"] for e in payload} == {"C4xC2xC2", "(C2xC2):C4",
                                             "Q8:C2"}


def test_catalog_bounds_error():
    code, _ = run_cli("catalog", "--max-order", "25")
    assert code == 2


def test_explore_json():
    code, payload = run_json("explore", "--delta", "6")
    assert code == 0
    sigs = {tuple(s["signature"]) for s in payload["survivors"]}
    assert (4, 4, 4, 4, 4, 4) in sigs
    assert (5, 10) in sigs
    witnesses = {w["label"]: w["delta"] for s in payload["survivors"]
                 for w in s["witnesses"]}
    assert witnesses["Q8xC2"] == 6
    assert witnesses["C10"] == 6
    assert witnesses["D20"] == 6


def test_usage_errors():
    assert run_cli("frobnicate")[0] == 2
    assert run_cli("candidates")[0] == 2
    assert run_cli("verify")[0] == 2
    assert run_cli("candidates", "--delta", "4", "--format", "yaml")[0] == 2


@pytest.mark.parametrize("argv", [
    ("analyze", "D8 x C2"),
    ("candidates", "--delta", "5", "--format", "latex"),
    ("exclude", "--delta", "4"),
    ("catalog", "--max-order", "16"),
    ("explore", "--delta", "6"),
    ("verify", "--all", "--format", "json"),
])
def test_output_is_deterministic(argv):
    assert run_cli(*argv) == run_cli(*argv)
