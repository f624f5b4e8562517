"""End-to-end normal forms and the word problem."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .budget import Budget
from .combing import CombedForm, comb
from .presentations import Level, expand_bands, generators, relators
from .sigma_machine import purify
from .words import (
    BAND,
    Letter,
    SurfaceSpec,
    Word,
    check_word,
    concat,
    free_reduce,
    format_letter,
    invert,
    tokens,
)


@dataclass(frozen=True)
class NormalFormReport:
    combed: CombedForm
    input_word: Word
    stats: dict = field(default_factory=dict, compare=False)

    @property
    def levels(self) -> tuple[Word, ...]:
        return self.combed.levels

    @property
    def perm_word(self) -> Word:
        return self.combed.perm_word

    @property
    def trivial(self) -> bool:
        return self.combed.trivial

    def word(self) -> Word:
        """``omega_1 ... omega_n s`` as a single word."""
        return concat(*self.levels, self.perm_word)

    def to_json(self) -> dict:
        return {
            "levels": [tokens(w) for w in self.levels],
            "perm_word": tokens(self.perm_word),
            "trivial": self.trivial,
            "stats": dict(self.stats),
        }


def normal_form(word: Sequence[Letter], spec: SurfaceSpec, budget: Budget | None = None) -> NormalFormReport:
    """Combed normal form ``omega_1 ... omega_n s`` of a braid word.

    The input may use any alphabet; band letters are expanded first and pure
    letters are absorbed directly by the sigma machine.

    >>> from .words import parse, format_word
    >>> rep = normal_form(parse("s1 s1"), SurfaceSpec(True, 1, 2))
    >>> [format_word(w) for w in rep.levels], rep.perm_word
    (['a[1,1] a[1,2] a[1,1]^-1 a[1,2]^-1', ''], ())
    """
    word = tuple(word)
    check_word(word, spec)
    budget = budget or Budget()
    if any(x.kind == BAND for x in word):
        word_in = expand_bands(word, spec)
    else:
        word_in = word
    budget.tick("absorb", len(word_in))
    pure, s = purify(word_in, spec)
    combed = comb(pure, spec, budget)
    return NormalFormReport(CombedForm(combed.levels, s), word, dict(budget.stats))


def _cheapest_rotation(pure: Word, n: int) -> Word:
    """Cyclic rotation of ``pure`` with the fewest (higher strand, later lower strand) pairs.

    Each such pair makes combing conjugate the lower letter across the
    higher one, so this is a cheap proxy for combing cost.
    """
    L = len(pure)
    if L < 2:
        return pure
    levels = [x.i for x in pure]
    total = [0] * (n + 2)
    for lv in levels:
        total[lv] += 1
    below = [0] * (n + 2)  # below[l] = letters on strands < l
    for lv in range(1, n + 2):
        below[lv] = below[lv - 1] + total[lv - 1]
    seen = [0] * (n + 2)
    cost = 0
    for lv in levels:
        cost += sum(seen[lv + 1:])
        seen[lv] += 1
    best, best_t = cost, 0
    for t in range(L - 1):
        lv = levels[t]
        # moving the first letter to the end
        cost += (L - below[lv + 1]) - below[lv]
        if cost < best:
            best, best_t = cost, t + 1
    return pure[best_t:] + pure[:best_t]


def _cyclically_reduce(word: Word) -> Word:
    k = 0
    while 2 * k + 1 < len(word) and word[k] == word[-1 - k].inverse():
        k += 1
    return word[k:len(word) - k]


def is_trivial(word: Sequence[Letter], spec: SurfaceSpec, budget: Budget | None = None) -> bool:
    """Decide whether ``word`` is the identity braid.

    Triviality is invariant under conjugation, so the pure part is cyclically
    reduced and rotated before combing; a non-identity permutation answers
    ``False`` at once.
    """
    word = tuple(word)
    check_word(word, spec)
    budget = budget or Budget()
    if any(x.kind == BAND for x in word):
        word = expand_bands(word, spec)
    word = _cyclically_reduce(free_reduce(word))
    budget.tick("absorb", len(word))
    pure, s = purify(word, spec)
    if s:
        return False
    pure = _cheapest_rotation(_cyclically_reduce(pure), spec.strands)
    return comb(pure, spec, budget).trivial


def are_equal(w1: Sequence[Letter], w2: Sequence[Letter], spec: SurfaceSpec,
              budget: Budget | None = None) -> bool:
    return is_trivial(concat(tuple(w1), invert(tuple(w2))), spec, budget)


def emit_presentation(spec: SurfaceSpec, level: Level | str) -> dict:
    return {
        "surface": "or" if spec.orientable else "non",
        "genus": spec.genus,
        "strands": spec.strands,
        "level": Level(level).value,
        "generators": [format_letter(x) for x in generators(spec, level)],
        "relators": [tokens(w) for w in relators(spec, level)],
    }
