"""Command-line surface: outputs, exit codes, JSON round trips, determinism."""

from __future__ import annotations

import json

import pytest

from pvanish import cli
from pvanish.vanishing import VanishReport


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# single evaluations
# ---------------------------------------------------------------------------


def test_char_text(capsys):
    code, out, _ = run(capsys, "char", "--alpha", "3,3,2", "--beta", "4,2,1,1")
    assert code == 0
    assert out.strip() == "-2"


def test_char_json(capsys):
    code, out, _ = run(
        capsys, "char", "--alpha", "(4,2,1^3)", "--beta", "9", "--json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload == {
        "schema_version": 1,
        "alpha": [4, 2, 1, 1, 1],
        "beta": [9],
        "value": 0,
    }


def test_char_more_examples(capsys):
    assert run(capsys, "char", "--alpha", "5", "--beta", "3,2")[1].strip() == "1"
    assert run(capsys, "char", "--alpha", "1,1,1", "--beta", "3")[1].strip() == "1"


def test_degree(capsys):
    code, out, _ = run(capsys, "degree", "--alpha", "3,3,2")
    assert code == 0 and out.strip() == "42"


# ---------------------------------------------------------------------------
# partition surgery
# ---------------------------------------------------------------------------


def test_decompose_compose_roundtrip(capsys):
    code, out, _ = run(capsys, "decompose", "--alpha", "4", "--r", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["core"] == [] and payload["weight"] == 2

    quotient = ";".join(
        "(" + (",".join(str(c) for c in q) or "0") + ")" for q in payload["quotient"]
    )
    code, out, _ = run(
        capsys, "compose", "--core", "0", "--quotient", quotient, "--r", "2"
    )
    assert code == 0
    assert out.strip() == "(4)"


def test_decompose_text(capsys):
    code, out, _ = run(capsys, "decompose", "--alpha", "2,1", "--r", "2")
    assert code == 0
    assert "core: (2,1)" in out
    assert "weight: 0" in out


def test_core_and_quotient_commands(capsys):
    code, out, _ = run(capsys, "core", "--alpha", "4", "--r", "2")
    assert code == 0 and out.strip() == "(0)"
    code, out, _ = run(capsys, "quotient", "--alpha", "4", "--r", "2")
    assert code == 0 and out.strip() == "(0);(2)"


def test_padic_json(capsys):
    code, out, _ = run(capsys, "padic", "--n", "10", "--p", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["digits"] == [0, 1, 0, 1]
    assert payload["p_power_partition"] == [8, 2]
    assert payload["schema_version"] == 1


# ---------------------------------------------------------------------------
# vanishing sweeps
# ---------------------------------------------------------------------------


def entry_lines(out: str) -> list[str]:
    return [l for l in out.splitlines() if l.startswith("  n=")]


def test_vanishing_text_small_sweep(capsys):
    code, out, _ = run(capsys, "vanishing", "--p", "2", "--n", "0..7")
    assert code == 0
    assert "(11 classes)" in out
    assert len(entry_lines(out)) == 11
    assert sum(1 for l in entry_lines(out) if l.endswith("*")) == 3


def test_vanishing_json_matches_text(capsys):
    code, text_out, _ = run(capsys, "vanishing", "--p", "3", "--n", "0..8")
    assert code == 0
    code, json_out, _ = run(capsys, "vanishing", "--p", "3", "--n", "0..8", "--json")
    assert code == 0
    payload = json.loads(json_out)
    assert payload["schema_version"] == 1
    assert payload["total_vanishing"] == 24
    entries = [e for r in payload["reports"] for e in r["vanishing"]]
    assert len(entries) == len(entry_lines(text_out)) == 24
    flagged_text = sum(1 for l in entry_lines(text_out) if l.endswith("*"))
    flagged_json = sum(1 for e in entries if not e["p_adic_type"])
    assert flagged_text == flagged_json == 8


def test_vanishing_single_n(capsys):
    code, out, _ = run(capsys, "vanishing", "--p", "3", "--n", "8")
    assert code == 0
    assert "(6 classes)" in out


def test_vanishing_with_audit(capsys):
    code, out, _ = run(capsys, "vanishing", "--p", "2", "--n", "0..6", "--audit")
    assert code == 0
    assert "structure: pass" in out


def test_vanishing_conjecture_mode(capsys):
    code, out, _ = run(
        capsys, "vanishing", "--p", "5", "--n", "10", "--check-conjecture"
    )
    assert code == 0
    assert "no counterexample found" in out


def test_vanishing_deterministic(capsys):
    first = run(capsys, "vanishing", "--p", "2", "--n", "0..7", "--json")[1]
    second = run(capsys, "vanishing", "--p", "2", "--n", "0..7", "--json")[1]
    assert first == second


def test_vanishing_worker_pool(capsys):
    pooled = run(capsys, "vanishing", "--p", "2", "--n", "0..7", "--workers", "2")[1]
    sequential = run(capsys, "vanishing", "--p", "2", "--n", "0..7")[1]
    assert pooled == sequential


def test_vanishing_env_worker_default(capsys, monkeypatch):
    monkeypatch.setenv("PVANISH_WORKERS", "2")
    code, out, _ = run(capsys, "vanishing", "--p", "2", "--n", "0..5")
    assert code == 0
    monkeypatch.setenv("PVANISH_WORKERS", "zero")
    code, _, err = run(capsys, "vanishing", "--p", "2", "--n", "0..5")
    assert code == 2
    assert "PVANISH_WORKERS" in err


# ---------------------------------------------------------------------------
# exit codes
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "argv",
    [
        ("char", "--alpha", "3,1", "--beta", "3"),  # size mismatch
        ("char", "--alpha", "x", "--beta", "1"),  # unparsable
        ("padic", "--n", "10", "--p", "4"),  # not prime
        ("vanishing", "--p", "2", "--n", "18"),  # over the sweep limit
        ("vanishing", "--p", "2", "--n", "7..3"),  # backwards range
        ("vanishing", "--p", "2", "--n", "5", "--workers", "2", "--cache", "shared"),
        ("vanishing", "--p", "2,3", "--n", "5"),  # one prime only
        ("vanishing", "--p", "2", "--n", "5", "--check-conjecture"),  # p too small
        ("compose", "--core", "2", "--quotient", "(0);(0)", "--r", "2"),  # not a core
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.strip()


def test_argparse_errors_exit_2(capsys):
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "verify", "--suite", "nonsense")[0] == 2
    assert run(capsys)[0] == 2


def test_help_exits_0(capsys):
    assert run(capsys, "--help")[0] == 0


def test_counterexample_exit_1(capsys, monkeypatch):
    # plumbing check only: force one counterexample through the report path
    def fake_report(ctx, *, limit=None, workers=1, audit=False):
        return VanishReport(
            n=ctx.n,
            p=ctx.p,
            vanishing=[],
            audits={},
            counterexamples=[{"kind": "classifier_disagreement", "beta": [ctx.n]}],
        )

    monkeypatch.setattr(cli, "list_p_vanishing", fake_report)
    code, out, _ = run(capsys, "vanishing", "--p", "2", "--n", "4")
    assert code == 1
    assert "COUNTEREXAMPLE" in out


# ---------------------------------------------------------------------------
# verify command
# ---------------------------------------------------------------------------


def test_verify_suite_text(capsys):
    code, out, _ = run(
        capsys, "verify", "--suite", "equivalence", "--p", "2", "--max-n", "8"
    )
    assert code == 0
    assert "pass" in out
    assert "0 failed" in out


def test_verify_suite_json(capsys):
    code, out, _ = run(
        capsys, "verify", "--suite", "orthogonality", "--max-n", "6", "--json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["schema_version"] == 1
    assert payload["failed"] == 0
    assert payload["suites"][0]["name"] == "orthogonality"
    assert payload["suites"][0]["violations"] == []


def test_verify_split_classifier(capsys):
    code, out, _ = run(
        capsys, "verify", "--suite", "split-classifier", "--p", "2,3", "--max-n", "10"
    )
    assert code == 0
    assert "split-classifier" in out


def test_verify_failure_exits_1(capsys, monkeypatch):
    from pvanish.verify import SuiteResult

    def fake_suite(name, config):
        return SuiteResult(name="equivalence", checks=1, violations=[{"fake": True}])

    monkeypatch.setattr(cli, "_run_suite", fake_suite)
    code, out, _ = run(capsys, "verify", "--suite", "equivalence")
    assert code == 1
    assert "FAIL" in out
