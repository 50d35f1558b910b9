"""Command-line interface: exit codes, text output, JSON payloads."""

import json

import pytest

from qfold import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_char_folded_fundamental(capsys):
    code, out, _ = run(capsys, "char", "F", "--flavor", "folded-t",
                       "--algebra", "B2", "--monomial", "Y[1;1]")
    assert code == 0
    lines = [l for l in out.splitlines() if l and not l.startswith("#")]
    assert len(lines) == 5
    assert "# distinct=5 total=6" in out


def test_char_json_payload(capsys):
    code, out, _ = run(capsys, "char", "F", "--flavor", "standard-q",
                       "--algebra", "A2", "--monomial", "Y[1;1]", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["format_version"] == cli.FORMAT_VERSION
    assert len(payload["terms"]) == 3


def test_malformed_monomial_exits_2(capsys):
    code, _, err = run(capsys, "char", "F", "--flavor", "standard-q",
                       "--algebra", "A2", "--monomial", "Y[1;1")
    assert code == 2
    assert err.strip()


def test_unknown_algebra_exits_2(capsys):
    code, _, err = run(capsys, "algebra", "Z9")
    assert code == 2


def test_algebra_text(capsys):
    code, out, _ = run(capsys, "algebra", "G2")
    assert code == 0
    assert "G2" in out


def test_fold_lemma(capsys):
    code, out, _ = run(capsys, "fold", "lemma", "--algebra", "C2")
    assert code == 0


def test_interp_with_specializations(capsys):
    code, out, _ = run(capsys, "interp", "F", "--algebra", "C2",
                       "--node", "1", "--specialize", "all")
    assert code == 0
    for key in ("Pi_q", "Pi_t", "Pibar_t", "Pi_t_prime", "Pibar_q"):
        assert key in out


def test_crystal_closure(capsys):
    code, out, _ = run(capsys, "crystal", "closure", "--algebra", "C2",
                       "--monomial", "Y[2;1]")
    assert code == 0
    lines = [l for l in out.splitlines() if l and not l.startswith("#")]
    assert len(lines) == 5


def test_crystal_conjcrys(capsys):
    code, out, _ = run(capsys, "crystal", "conjcrys", "--algebra", "C2",
                       "--node", "2")
    assert code == 0


def test_bae_fold_certified(capsys):
    code, out, _ = run(capsys, "bae", "fold", "--algebra", "B2",
                       "--counts", "1,1,1")
    assert code == 0
    assert "CERTIFIED" in out


def test_bae_solve_gaudin(capsys):
    data = json.dumps({"points": [0, 1], "pairings": {"1": [1, 1]},
                       "twist": {"1": 2}})
    code, out, _ = run(capsys, "bae", "solve", "--kind", "gaudin",
                       "--algebra", "A1", "--counts", "1",
                       "--gaudin", data, "--seeds", "10")
    assert code == 0


def test_verify_corpus_filter(capsys):
    code, out, _ = run(capsys, "verify-corpus", "--filter", "funex")
    assert code == 0
    assert out.count("PASS") == 5


def test_verify_corpus_empty_filter_match(capsys):
    code, out, _ = run(capsys, "verify-corpus", "--filter", "zzz")
    assert code == 0
    assert "0 selected" in out


def test_verify_corpus_json(capsys):
    code, out, _ = run(capsys, "verify-corpus", "--filter", "crystal",
                       "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["format_version"] == cli.FORMAT_VERSION
    assert payload["ok"]
    assert all(case["ok"] for case in payload["results"])
