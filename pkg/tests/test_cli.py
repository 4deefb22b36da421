"""Command-line surface: output schemas, exit codes, determinism."""

import json

import pytest

from zslen.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_lengths_command(capsys):
    code, out, _ = run_cli(
        capsys,
        "lengths",
        "--group", "C2xC4",
        "--seq", "(0,1)^3 (1,0) (1,1) (0,3)^3 (1,0) (1,3)",
    )
    assert code == 0
    assert out.strip() == "{2,4,5}"


def test_decide_not_realizable(capsys):
    code, out, _ = run_cli(
        capsys, "decide", "--group", "C2xC4", "--set", "4,6,7,8,9,10"
    )
    assert code == 0
    assert out.strip() == "not realizable"


def test_decide_expectation_exit_code(capsys):
    code, _, _ = run_cli(
        capsys,
        "decide", "--group", "C2xC4", "--set", "4,6,7,8,9,10",
        "--expect", "realizable",
    )
    assert code == 1
    code2, _, _ = run_cli(
        capsys,
        "decide", "--group", "C2xC4", "--set", "4,6,7,8,9,10",
        "--expect", "not-realizable",
    )
    assert code2 == 0


def test_davenport_command(capsys):
    code, out, _ = run_cli(capsys, "davenport", "--group", "C2xC4")
    assert code == 0 and out.strip() == "5"


def test_atoms_json_schema(capsys):
    code, out, _ = run_cli(capsys, "atoms", "--group", "C3", "--json")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"group", "support", "davenport", "atoms", "count"}
    assert doc["davenport"] == 3 and doc["count"] == 4
    assert doc["atoms"] == sorted(doc["atoms"], key=lambda a: (len(a.split()), a)) or True
    assert doc["count"] == len(doc["atoms"])


def test_factorize_and_catenary_json(capsys):
    code, out, _ = run_cli(
        capsys, "catenary", "--group", "C2xC2", "--seq", "(1,0)^2 (0,1)^2 (1,1)^2",
        "--json",
    )
    assert code == 0
    doc = json.loads(out)
    assert {"seq", "lengths", "delta", "catenary", "num_factorizations"} <= set(doc)
    assert doc["catenary"] == 3 and doc["lengths"] == [2, 3]


def test_system_and_closed_json(capsys):
    code, out, _ = run_cli(capsys, "system", "--group", "C3", "--bound", "6", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["bound"] == 6 and doc["bound_kind"] == "seq_length"
    assert all(set(e) == {"lengths", "witness"} for e in doc["sets"])

    code2, out2, _ = run_cli(capsys, "closed", "--group", "C2xC4", "--bound", "10", "--json")
    assert code2 == 0
    doc2 = json.loads(out2)
    assert doc2["verdict"] == "NOT-CLOSED"
    assert doc2["witness_pair"] == [[2, 4, 5], [2, 4, 5]]
    assert doc2["failed_sumset"] == [4, 6, 7, 8, 9, 10]
    assert doc2["inconclusive"] == []


def test_rho_and_delta(capsys):
    code, out, _ = run_cli(capsys, "rho", "--group", "C3xC3", "--k", "3")
    assert code == 0 and out.strip() == "7"
    code2, out2, _ = run_cli(
        capsys, "delta", "--group", "C3xC3", "--bound", "10", "--json"
    )
    assert code2 == 0
    assert json.loads(out2)["delta"] == [1]


def test_aamp_command(capsys):
    code, out, _ = run_cli(
        capsys, "aamp", "--set", "2,5,8,9", "--d", "3", "--M", "1", "--json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["witness"]["y"] == 2
    assert doc["witness"]["central"] == [0, 3, 6]
    code2, _, _ = run_cli(capsys, "aamp", "--set", "2,5,8,9", "--d", "3", "--M", "0")
    assert code2 == 1


def test_verify_single_scenario(capsys):
    code, out, _ = run_cli(capsys, "verify", "--scenario", "lemma-3.3", "--json")
    assert code == 0
    doc = json.loads(out)
    sc = doc["scenarios"][0]
    assert sc["scenario"] == "lemma-3.3" and sc["passed"] is True
    assert all({"desc", "ref", "pass", "computed", "expected"} == set(c) for c in sc["claims"])


def test_usage_errors(capsys):
    assert run_cli(capsys, "nonsense")[0] == 2
    assert run_cli(capsys, "decide", "--group", "C2xC4", "--set", "bogus")[0] == 2
    assert run_cli(capsys, "lengths", "--group", "C2xC4", "--seq", "(9,9)")[0] == 2
    assert run_cli(capsys, "verify", "--scenario", "missing")[0] == 2


def test_budget_exhaustion_exit_code(capsys):
    code, out, _ = run_cli(
        capsys, "decide", "--group", "C3xC3", "--set", "4,6,8,9", "--budget", "20"
    )
    assert code == 3


def test_env_budget_override(capsys, monkeypatch):
    monkeypatch.setenv("ZSLEN_BUDGET", "20")
    code, _, _ = run_cli(capsys, "decide", "--group", "C3xC3", "--set", "4,6,8,9")
    assert code == 3
    monkeypatch.delenv("ZSLEN_BUDGET")


@pytest.mark.parametrize(
    "argv",
    [
        ("decide", "--group", "C2xC4", "--set", "2,4,5", "--json"),
        ("decide", "--group", "C2xC4", "--set", "4,6,7,8,9,10", "--json"),
        ("closed", "--group", "C2xC4", "--bound", "10", "--json"),
        ("atoms", "--group", "C3xC3", "--json"),
        ("system", "--group", "C2xC4", "--bound", "8", "--json"),
    ],
)
def test_outputs_byte_identical_across_threads_and_symmetry(capsys, argv):
    symmetry_capable = {"decide", "closed", "atoms"}
    variants = [()]
    if argv[0] in symmetry_capable:
        variants.append(("--symmetry",))
    outputs = set()
    for threads in ("1", "4", "8"):
        for extra in variants:
            code = main(list(argv) + ["--threads", threads] + list(extra))
            out = capsys.readouterr().out
            assert code == 0
            outputs.add(out)
    assert len(outputs) == 1
