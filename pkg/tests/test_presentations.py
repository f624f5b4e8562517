import pytest

from surface_braids.oracles import abelianize
from surface_braids.presentations import (
    Level,
    band_definition,
    change_of_generators,
    expand_to_theorem_generators,
    generators,
    named_relators,
    relators,
)
from surface_braids.sym import perm_of_word
from surface_braids.words import (
    SurfaceSpec,
    format_word,
    free_reduce,
    parse,
    strand,
    substitute,
)

TORUS1 = SurfaceSpec(True, 1, 1)
TORUS2 = SurfaceSpec(True, 1, 2)
KLEIN2 = SurfaceSpec(False, 2, 2)


def names(spec, level):
    return [name for name, _ in named_relators(spec, level)]


def test_pi1_of_torus():
    assert [format_word(w) for w in relators(TORUS1, Level.PURE)] == [
        "a[1,1]^-1 a[1,2]^-1 a[1,1] a[1,2]"]
    assert len(generators(TORUS1, Level.PURE)) == 2


def test_theorem_level_torus_two_strands():
    assert len(generators(TORUS2, "theorem")) == 3
    assert set(names(TORUS2, "theorem")) == {"R3", "R4", "R5"}
    r3 = dict(named_relators(TORUS2, "theorem"))["R3"]
    assert format_word(r3) == "a1 a2 a1^-1 a2^-1 s1^-1 s1^-1"


def test_theorem_level_klein_two_strands():
    assert set(names(KLEIN2, "theorem")) == {"r3", "r4", "r5"}
    r3 = dict(named_relators(KLEIN2, "theorem"))["r3"]
    assert format_word(r3) == "a1 a1 a2 a2 s1^-1 s1^-1"


def test_extended_adds_definitions():
    spec = SurfaceSpec(True, 1, 3)
    extra = set(names(spec, "extended")) - set(names(spec, "theorem"))
    assert extra == {"R7", "R8", "R9"}
    assert {"r7", "r8"} <= set(names(SurfaceSpec(False, 2, 3), "extended"))


@pytest.mark.parametrize("spec, j, r, expected", [
    (SurfaceSpec(True, 2, 2), 2, 3, "a[2,1] a[2,2] a[2,4]^-1"),
    (TORUS2, 2, 1, "a[2,2]^-1"),
    (KLEIN2, 2, 2, "a[2,1] a[2,1] a[2,2]^-1 a[2,1]^-1 a[2,1]^-1"),
])
def test_band_definition(spec, j, r, expected):
    assert format_word(band_definition(spec, j, r)) == expected


def test_change_of_generators_torus():
    assert format_word(change_of_generators(TORUS2, "A->a", 1)[strand(1, 1)]) == "A[1,2]"
    assert format_word(change_of_generators(TORUS2, "a->A", 1)[parse("A[1,1]")[0]]) == "a[1,2]^-1"


@pytest.mark.parametrize("orientable, genus", [(True, 1), (True, 2), (True, 3),
                                               (False, 2), (False, 3)])
def test_change_of_generators_round_trip(orientable, genus):
    spec = SurfaceSpec(orientable, genus, 2)
    to_band = change_of_generators(spec, "A->a", 2)
    to_strand = change_of_generators(spec, "a->A", 2)
    for r in range(1, spec.G + 1):
        x = strand(2, r)
        back = substitute(substitute((x,), to_band), to_strand)
        assert free_reduce(back) == (x,)


@pytest.mark.parametrize("text, orientable, expected", [
    ("T[1,2]", True, "s1 s1"),
    ("a[2,1]", True, "s1^-1 a1 s1^-1"),
    ("a[2,1]", False, "s1^-1 a1 s1"),
])
def test_expand_to_theorem_generators(text, orientable, expected):
    spec = SurfaceSpec(orientable, 2, 2)
    assert format_word(expand_to_theorem_generators(parse(text), spec)) == expected


@pytest.mark.parametrize("spec", [SurfaceSpec(True, 2, 3), SurfaceSpec(False, 3, 3)])
@pytest.mark.parametrize("level", list(Level))
def test_relators_are_pure_and_abelian_trivial(spec, level):
    for name, word in named_relators(spec, level):
        assert perm_of_word(word, spec).is_identity(), name
        assert abelianize(word, spec).is_zero, name
