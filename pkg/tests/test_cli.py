"""Command-line surface: envelopes, subcommands, exit codes, and formats.

Every subcommand wraps its report in the same envelope: schema_version,
tool, version, command, input echo, elapsed_ms, report.  Exit codes:
0 success, 1 violation found (verify/search), 2 usage or parse error,
3 resource ceiling.
"""

import json
from fractions import Fraction

import pytest

from sumstruct import __version__
from sumstruct.cli import main
from sumstruct.intset import IntSet
from sumstruct.search import FrontierResult, SearchRecord
from sumstruct.verify import SweepSummary


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out), err


ENVELOPE_KEYS = {
    "schema_version", "tool", "version", "command", "input", "elapsed_ms", "report",
}


# --- analyze -----------------------------------------------------------------

def test_analyze_interval_plus_two_points(capsys):
    code, env, _ = run_json(capsys, "analyze", "0-12,45,57")
    assert code == 0
    assert set(env) == ENVELOPE_KEYS
    assert env["schema_version"] == 1
    assert env["tool"] == "sumstruct"
    assert env["version"] == __version__
    assert env["command"] == "analyze"
    assert env["input"]["set"] == "0-12,45,57"
    report = env["report"]
    assert report["stats"]["k"] == 15
    assert report["stats"]["b3"] == 11
    assert report["bp"]["total_length"] == 26
    assert len(report["residues"]) == 6
    assert report["residues"][0]["modulus"] == 1
    assert report["triangle"]["kind"] in {"forward", "backward", "neither"}
    assert set(report["verdicts"]) == {"freiman_small_b", "3k3", "main"}


def test_analyze_interval(capsys):
    code, env, _ = run_json(capsys, "analyze", "0-4")
    assert code == 0
    report = env["report"]
    assert report["stats"]["b3"] == -3
    assert report["ap"]["length"] == 5
    assert report["verdicts"]["main"]["applicable"] is False


def test_analyze_three_blocks(capsys):
    code, env, _ = run_json(capsys, "analyze", "0,1,2,20-22,40-42")
    assert code == 0
    assert env["report"]["bp"] is None
    assert env["report"]["ap"]["length"] == 43


def test_analyze_parse_error_exits_2(capsys):
    code, out, err = run(capsys, "analyze", "5-3")
    assert code == 2
    assert "offset" in err


def test_analyze_bad_theta_exits_2(capsys):
    code, _, err = run(capsys, "analyze", "0-9", "--theta", "0.3")
    assert code == 2
    assert "margin" in err


def test_analyze_pretty_from_same_envelope(capsys):
    code, out, _ = run(capsys, "analyze", "0-4", "--pretty")
    assert code == 0
    assert "command: analyze" in out
    assert "k: 5" in out
    # default output is the pretty form
    code, out2, _ = run(capsys, "analyze", "0-4")
    assert "command: analyze" in out2


# --- cover ---------------------------------------------------------------------

def test_cover_reports_both_covers(capsys):
    code, env, _ = run_json(capsys, "cover", "0-12,45,57")
    assert code == 0
    report = env["report"]
    assert report["ap"]["length"] == 58
    assert report["bp"]["total_length"] == 26
    assert report["bp_within_budget"] is None  # no budget requested


def test_cover_budget(capsys):
    code, env, _ = run_json(capsys, "cover", "0-12,45,57", "--bp-budget", "26")
    assert env["report"]["bp_within_budget"]["total_length"] <= 26
    code, env, _ = run_json(capsys, "cover", "0-12,45,57", "--bp-budget", "25")
    assert env["report"]["bp_within_budget"] is None


# --- iso -------------------------------------------------------------------------

def test_iso_check_translate(capsys):
    code, env, _ = run_json(capsys, "iso", "check", "0,1,3", "10,11,13")
    assert code == 0
    assert env["report"]["isomorphic"] is True
    assert env["report"]["phi"] == [[0, 10], [1, 11], [3, 13]]


def test_iso_check_negative(capsys):
    code, env, _ = run_json(capsys, "iso", "check", "0,1,2", "0,1,3")
    assert code == 0
    assert env["report"]["isomorphic"] is False


def test_iso_check_planar(capsys):
    code, env, _ = run_json(capsys, "iso", "check", "(0,0);(1,0);(0,1)", "0,1,10")
    assert code == 0
    assert env["report"]["isomorphic"] is True


def test_iso_check_explicit_phi(capsys):
    # 0+2 = 1+1 on the source; the twisted pairing sends those sums to
    # 10+11 != 12+12, so it cannot be an isomorphism.
    code, env, _ = run_json(
        capsys, "iso", "check", "0,1,2", "10,11,12", "--phi", "10,12,11"
    )
    assert code == 0
    assert env["report"]["isomorphic"] is False
    # the order-preserving pairing of the same two sets is fine
    code, env, _ = run_json(capsys, "iso", "check", "0,1,2", "10,11,12")
    assert env["report"]["isomorphic"] is True


def test_iso_rank(capsys):
    code, env, _ = run_json(
        capsys, "iso", "rank",
        "--x0", "0", "--x1", "1", "--x2", "10", "--b1", "3", "--b2", "2",
    )
    assert code == 0
    assert env["report"]["rank"] == 2
    assert env["report"]["proper"] is True

    code, env, _ = run_json(
        capsys, "iso", "rank",
        "--x0", "0", "--x1", "1", "--x2", "2", "--b1", "3", "--b2", "2",
    )
    assert env["report"]["rank"] is None
    assert env["report"]["proper"] is False


def test_iso_embed(capsys):
    code, env, _ = run_json(capsys, "iso", "embed", "0,1,2,3,12,13,14")
    assert code == 0
    report = env["report"]
    assert report["planar"] == "(0,0);(0,1);(1,0);(1,1);(2,0);(2,1);(3,0)"
    assert report["isomorphic"] is True
    assert report["bp"]["total_length"] == 7


def test_iso_embed_without_bp(capsys):
    code, env, _ = run_json(capsys, "iso", "embed", "0,1,2,20-22,40-42")
    assert code == 0
    assert env["report"]["bp"] is None
    assert env["report"]["planar"] is None


# --- verify ------------------------------------------------------------------------

def test_verify_span8(capsys):
    code, env, _ = run_json(capsys, "verify", "--max-span", "8")
    assert code == 0
    summaries = env["report"]["summaries"]
    assert [s["claim"] for s in summaries] == ["freiman_small_b", "3k3", "main"]
    assert summaries[0]["applicable"] == 46
    assert summaries[0]["holds"] == 46
    assert all(s["violations"] == [] for s in summaries)


def test_verify_claim_subset(capsys):
    code, env, _ = run_json(
        capsys, "verify", "--max-span", "8", "--claims", "freiman_small_b"
    )
    assert code == 0
    assert len(env["report"]["summaries"]) == 1


def test_verify_bad_claim_exits_2(capsys):
    code, _, err = run(capsys, "verify", "--max-span", "8", "--claims", "nope")
    assert code == 2


def test_verify_resource_ceiling_exits_3(capsys, monkeypatch):
    monkeypatch.setattr("sumstruct.verify.SWEEP_SET_CAP", 10)
    code, _, err = run(capsys, "verify", "--max-span", "10")
    assert code == 3
    assert "cap" in err


def test_verify_violation_exits_1(capsys, monkeypatch):
    fake = {
        "main": SweepSummary(
            max_span=8, claim="main", applicable=1, holds=0,
            violations=({"set": "0,9", "k": 2, "b": 0, "ap_len": 10, "bp_len": None},),
        )
    }
    monkeypatch.setattr("sumstruct.cli.sweep", lambda **kw: fake)
    code, env, _ = run_json(capsys, "verify", "--max-span", "8", "--claims", "main")
    assert code == 1
    assert env["report"]["summaries"][0]["violations"]


# --- search --------------------------------------------------------------------------

def test_search_exhaustive(capsys):
    code, env, _ = run_json(capsys, "search", "--k", "4", "--max-span", "12")
    assert code == 0
    report = env["report"]
    assert report["exhaustive"] is True
    assert len(report["records"]) == 9
    assert report["records"][0]["set"] == "0-1,4,11"
    assert all(r["applicable"] is False for r in report["records"])


def test_search_jsonl_stream(capsys):
    code, out, _ = run(capsys, "search", "--k", "4", "--max-span", "12", "--jsonl")
    assert code == 0
    lines = [json.loads(line) for line in out.strip().splitlines()]
    *records, tail = lines
    assert all("set" in r and "b" in r for r in records)
    assert tail["exhaustive"] is True
    assert tail["records"] == len(records)


def test_search_counterexample_exits_1(capsys, monkeypatch):
    record = SearchRecord(
        set=IntSet([0, 1, 9]), k=3, b=0, ap_len=10, bp_len=None,
        ratio=Fraction(2, 1), frontier=True, applicable=True,
    )
    fake = FrontierResult(k=3, max_span=9, records=(record,), exhaustive=True, nodes=5)
    monkeypatch.setattr("sumstruct.cli.frontier_search", lambda **kw: fake)
    code, env, _ = run_json(capsys, "search", "--k", "3", "--max-span", "9")
    assert code == 1


def test_search_histogram(capsys):
    code, env, _ = run_json(capsys, "search", "--histogram", "--max-span", "6")
    assert code == 0
    buckets = env["report"]["buckets"]
    assert buckets[0]["lo"] == "1.5"
    assert sum(b["structured"] for b in buckets) == 33


def test_search_histogram_csv(capsys):
    code, out, _ = run(capsys, "search", "--histogram", "--max-span", "6", "--csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "lo,structured,unstructured"
    assert len(lines) == 11
    assert lines[1].startswith("1.5,")


def test_search_csv_requires_histogram(capsys):
    code, _, err = run(capsys, "search", "--k", "4", "--max-span", "10", "--csv")
    assert code == 2


def test_search_requires_k_or_histogram(capsys):
    code, _, err = run(capsys, "search", "--max-span", "10")
    assert code == 2


# --- examples ---------------------------------------------------------------------------

def test_examples_table(capsys):
    code, env, _ = run_json(capsys, "examples", "--max-span", "120")
    assert code == 0
    report = env["report"]
    assert report["all_ok"] is True
    families = {row["family"] for row in report["rows"]}
    assert families == {"ex12", "ex15", "ex16"}
    for row in report["rows"]:
        assert row["b"] == row["expected_b"]
        assert row["ok"] is True
    # spot-check one identity per family
    ex15 = [r for r in report["rows"] if r["family"] == "ex15"]
    assert all(r["expected_b"] == 11 for r in ex15)
    ex12 = [r for r in report["rows"] if r["family"] == "ex12"]
    assert all(r["expected_b"] == r["params"]["a"] - 2 for r in ex12)


# --- misc -------------------------------------------------------------------------------

def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert __version__ in capsys.readouterr().out


def test_unknown_command_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
