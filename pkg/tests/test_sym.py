from itertools import permutations

import pytest

from surface_braids.sym import (
    Perm,
    epsilon,
    exponents_of_perm,
    perm_of_exponents,
    perm_of_word,
)
from surface_braids.words import format_word, parse


def test_perm_of_word():
    assert perm_of_word((), 3).is_identity()
    assert perm_of_word(parse("s1 s1"), 2).is_identity()
    assert perm_of_word(parse("s1 s2"), 3).images == (3, 1, 2)


def test_pure_letters_do_not_permute():
    assert perm_of_word(parse("a1 T[1,3] a[2,1]"), 3).is_identity()


def test_exponents():
    assert exponents_of_perm(Perm.identity(4)).exponents == (0, 0, 0)
    assert exponents_of_perm(Perm((2, 1))).exponents == (1,)
    assert exponents_of_perm(perm_of_word(parse("s1 s2"), 3)).exponents == (1, 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_exponents_bijective(n):
    seen = set()
    for images in permutations(range(1, n + 1)):
        exps = exponents_of_perm(Perm(images)).exponents
        assert perm_of_exponents(exps) == Perm(images)
        seen.add(exps)
    assert len(seen) == len(set(permutations(range(n))))


def test_epsilon():
    assert epsilon((), 2) == ()
    assert format_word(epsilon(parse("s1^-1"), 2)) == "s1"
    assert format_word(epsilon(parse("s2 s1"), 3)) == "s2 s1"


def test_perm_composition():
    p, q = perm_of_word(parse("s1"), 3), perm_of_word(parse("s2"), 3)
    assert p.then(q) == perm_of_word(parse("s1 s2"), 3)
    assert p.then(p.inverse()).is_identity()
