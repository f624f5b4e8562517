import json

import pytest

from surface_braids.cli import main

TORUS = ["--surface", "or", "--genus", "1", "--strands", "2"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_nf_text(capsys):
    code, out, _ = run(capsys, "nf", *TORUS, "s1 s1")
    assert code == 0
    assert "omega_1: a[1,1] a[1,2] a[1,1]^-1 a[1,2]^-1" in out
    assert "trivial: false" in out


def test_nf_json(capsys):
    code, out, _ = run(capsys, "nf", *TORUS, "s1", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["perm_word"] == ["s1"] and doc["levels"] == [[], []]


@pytest.mark.parametrize("w1, w2, answer", [("a1 a2", "a2 a1", "true"), ("a1", "a2", "false")])
def test_eq(capsys, w1, w2, answer):
    code, out, _ = run(capsys, "eq", "--surface", "or", "--genus", "1", "--strands", "1", w1, w2)
    assert code == 0 and out.strip() == answer


def test_exit_codes(capsys):
    assert run(capsys, "nf", *TORUS, "x1")[0] == 2
    assert run(capsys, "nf", *TORUS, "s5")[0] == 3
    assert run(capsys, "nf", "--surface", "non", "--genus", "1", "--strands", "2", "s1")[0] == 3


def test_step_budget(capsys, monkeypatch):
    monkeypatch.setenv("SBW_MAX_STEPS", "10")
    code, _, err = run(capsys, "nf", "--surface", "or", "--genus", "2", "--strands", "3",
                       "a1 s1 a2 s2 a3 s1^-1 a4 s2")
    assert code == 4 and "SBW_MAX_STEPS" in err


def test_relators_json(capsys):
    code, out, _ = run(capsys, "relators", "--surface", "or", "--genus", "1", "--strands", "1",
                       "--level", "pure", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["generators"] == ["a[1,1]", "a[1,2]"]
    assert doc["relators"] == [["a[1,1]^-1", "a[1,2]^-1", "a[1,1]", "a[1,2]"]]


def test_rules_dump(capsys):
    code, out, _ = run(capsys, "rules", *TORUS)
    rows = json.loads(out)
    assert code == 0 and ["s1", "a[1,1]", ["T[1,2]", "a[2,1]"]] in rows


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest", "--seed", "3")
    assert code == 0
    assert out.count(": ok") == 5
