import pytest

from surface_braids.budget import Budget, StepLimitExceeded
from surface_braids.oracles import abelianize
from surface_braids.presentations import expand_to_theorem_generators
from surface_braids.solver import are_equal, emit_presentation, is_trivial, normal_form
from surface_braids.sym import perm_of_word
from surface_braids.words import RangeError, SurfaceSpec, format_word, parse

TORUS1 = SurfaceSpec(True, 1, 1)
TORUS2 = SurfaceSpec(True, 1, 2)


def test_normal_form_examples():
    rep = normal_form(parse("s1 s1"), TORUS2)
    assert [format_word(w) for w in rep.levels] == ["a[1,1] a[1,2] a[1,1]^-1 a[1,2]^-1", ""]
    assert rep.perm_word == () and not rep.trivial
    rep = normal_form(parse("s1"), TORUS2)
    assert not any(rep.levels) and format_word(rep.perm_word) == "s1"


def test_report_json_and_equality():
    rep = normal_form(parse("a1 s1"), TORUS2)
    doc = rep.to_json()
    assert set(doc) == {"levels", "perm_word", "trivial", "stats"}
    assert doc["perm_word"] == ["s1"]
    # statistics do not take part in equality
    assert rep == normal_form(parse("a1 s1"), TORUS2, Budget(limit=10**6))


def test_is_trivial():
    assert is_trivial((), TORUS2)
    assert not is_trivial(parse("a1"), TORUS2)
    assert is_trivial(parse("a1 a2 a1^-1 a2^-1 s1^-2"), TORUS2)


def test_are_equal():
    w = parse("a1 s1 a2^-1")
    assert are_equal(w, w, TORUS2)
    assert are_equal(parse("a1 a2"), parse("a2 a1"), TORUS1)
    assert not are_equal(parse("a1"), parse("a2"), TORUS1)
    assert not are_equal(parse("a1 a2"), parse("a2 a1"), SurfaceSpec(True, 2, 1))


def test_range_errors_surface():
    with pytest.raises(RangeError):
        normal_form(parse("s2"), TORUS2)


def test_budget_is_honoured(monkeypatch):
    monkeypatch.setenv("SBW_MAX_STEPS", "20")
    with pytest.raises(StepLimitExceeded):
        normal_form(parse("a1 s1 a2 s1 a1^-1 s1 a2 a1 s1^-1 a2"), SurfaceSpec(True, 2, 2))


@pytest.mark.parametrize("spec", [SurfaceSpec(True, 2, 3), SurfaceSpec(False, 3, 3)])
def test_round_trip_short_words(spec, rng):
    from conftest import random_word

    for _ in range(30):
        w = random_word(rng, spec, 4)
        rep = normal_form(w, spec)
        again = normal_form(expand_to_theorem_generators(rep.word(), spec), spec)
        assert again.levels[:-1] == rep.levels[:-1]
        assert again.perm_word == rep.perm_word
        assert are_equal(again.levels[-1], rep.levels[-1], spec)
        assert are_equal(rep.word(), w, spec)


def test_trivial_words_pass_the_guards(rng):
    from conftest import random_word

    spec = SurfaceSpec(True, 2, 3)
    for _ in range(30):
        u = random_word(rng, spec, 6)
        w = u + tuple(x.inverse() for x in reversed(u))
        assert is_trivial(w, spec)
        assert abelianize(w, spec).is_zero and perm_of_word(w, spec).is_identity()


@pytest.mark.parametrize("spec, level, n_gens, n_rels", [
    (TORUS1, "pure", 2, 1),
    (TORUS2, "theorem", 3, 5),
    (SurfaceSpec(False, 2, 2), "theorem", 3, 5),
])
def test_emit_presentation(spec, level, n_gens, n_rels):
    doc = emit_presentation(spec, level)
    assert len(doc["generators"]) == n_gens
    assert len(doc["relators"]) == n_rels
    assert all(isinstance(t, str) for rel in doc["relators"] for t in rel)
