"""Phase 2: comb a pure word strand by strand into ``omega_1 ... omega_n``.

At level ``m`` the strand-``m`` letters ``a[m,r]`` are rewritten in the band
basis, then every ``V_m`` letter (``A[m,r]``, ``T[m,k]``) is moved to the
right end, conjugating whatever lower-strand letters it passes.  The letters
moved out form ``omega_m``; the rest is a word on strands below ``m``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .budget import Budget
from .conj import band_conj, conj_by_letter, eliminate_Tn
from .pi1 import canonicalize_level_n
from .presentations import a_in_band_basis, band_definition, expand_bands
from .words import (
    BAND,
    STRAND,
    TLOOP,
    Letter,
    SurfaceSpec,
    Word,
    WordError,
    check_letter,
    concat,
    free_reduce,
    invert,
    substitute_some,
)


@dataclass(frozen=True)
class CombedForm:
    levels: tuple[Word, ...]
    perm_word: Word = ()

    @property
    def trivial(self) -> bool:
        return not self.perm_word and not any(self.levels)


def _in_V(x: Letter, m: int) -> bool:
    return x.i == m and x.kind in (BAND, TLOOP)


def comb_level(X: Sequence[Letter], m: int, spec: SurfaceSpec,
               budget: Budget | None = None) -> tuple[Word, Word]:
    """Split ``X`` (a word on strands ``<= m``) as ``X_rest * omega_m``.

    >>> from .words import parse, format_word
    >>> rest, om = comb_level(parse("a[1,1] a[2,2]^-1"), 2, SurfaceSpec(True, 1, 2))
    >>> format_word(rest), format_word(om)
    ('a[1,1]', 'A[2,1]')
    """
    budget = budget or Budget()
    n = spec.strands
    X = substitute_some(X, lambda x: a_in_band_basis(spec, m, x.j)
                        if x.kind == STRAND and x.i == m else None)
    rest: Word = ()
    pending: list[Letter] = []
    ys: list[Letter] = []
    for x in reversed(X):
        if _in_V(x, m):
            rest = tuple(reversed(pending)) + rest
            pending.clear()
            budget.tick("transport", len(rest))
            rest = eliminate_Tn(conj_by_letter(x, rest, spec), spec)
            ys.append(x)
        elif x.i >= m:
            raise WordError(f"letter {x} does not belong to level {m} or below")
        else:
            pending.append(x)
    rest = free_reduce(tuple(reversed(pending)) + rest)
    Y = free_reduce(tuple(reversed(ys)))
    if m == n:
        corrections: list[Letter] = []
        Y = canonicalize_level_n(Y, spec, corrections.extend, budget)
        rest = free_reduce(rest + tuple(corrections))
    for x in rest:
        if x.i >= m:  # level purity
            raise AssertionError(f"letter {x} survived level {m}")
    return rest, Y


def _check_pure(pure: Sequence[Letter], spec: SurfaceSpec) -> None:
    for pos, x in enumerate(pure):
        if x.kind not in (STRAND, TLOOP):
            raise WordError(f"non-pure letter {x} at position {pos}")
        check_letter(x, spec)


def comb_levelwise(pure: Sequence[Letter], spec: SurfaceSpec, budget: Budget | None = None) -> CombedForm:
    """Level-by-level combing: run :func:`comb_level` for ``m = n, ..., 2``.

    Intermediate words are only freely reduced, so they can grow quickly; this
    version exists as an independent cross-check of :func:`comb`.
    """
    budget = budget or Budget()
    _check_pure(pure, spec)
    n = spec.strands
    X = eliminate_Tn(pure, spec)
    levels: list[Word] = [()] * n
    for m in range(n, 1, -1):
        X, levels[m - 1] = comb_level(X, m, spec, budget)
    if n == 1:
        X, levels[0] = comb_level(X, 1, spec, budget)
    else:
        levels[0] = free_reduce(X)
    return CombedForm(tuple(levels))


def _cancels(u: Letter, v: Letter) -> bool:
    return u.sign == -v.sign and u.j == v.j and u.i == v.i and u.kind == v.kind


def _reduce(word: Sequence[Letter]) -> list[Letter]:
    """Free reduction for canonical letters (no ``a<r>`` aliases)."""
    out: list[Letter] = []
    for x in word:
        if out and _cancels(out[-1], x):
            out.pop()
        else:
            out.append(x)
    return out


@lru_cache(maxsize=None)
def _strand_in_band_basis(x: Letter, spec: SurfaceSpec) -> Word:
    image = a_in_band_basis(spec, x.i, x.j)
    return image if x.sign == 1 else invert(image)


def _band_basis(word: Sequence[Letter], spec: SurfaceSpec) -> list[Letter]:
    out: list[Letter] = []
    for x in word:
        if x.kind == STRAND:
            out.extend(_strand_in_band_basis(x, spec))
        else:
            out.append(x)
    return out


class _Stack:
    """A level word kept freely reduced under appends."""

    __slots__ = ("letters",)

    def __init__(self):
        self.letters: list[Letter] = []

    def append(self, x: Letter) -> None:
        if self.letters and _cancels(self.letters[-1], x):
            self.letters.pop()
        else:
            self.letters.append(x)

    def word(self) -> Word:
        return tuple(self.letters)


@lru_cache(maxsize=None)
def _letter_image(y: Letter, x: Letter, spec: SurfaceSpec) -> Word:
    """``y x y^-1`` for a letter ``x`` below ``y``'s strand, with ``T_{*,n}`` eliminated."""
    if x.kind == BAND:
        parts = eliminate_Tn(band_definition(spec, x.i, x.j), spec)
        img = tuple(z for p in parts for z in _letter_image(y, p, spec))
        return img if x.sign == 1 else invert(img)
    return eliminate_Tn(band_conj(y, x, spec), spec)


@lru_cache(maxsize=None)
def _level1_image(y: Letter, x: Letter, spec: SurfaceSpec) -> Word:
    """:func:`_letter_image` for a level-1 target, in the level-1 band basis."""
    img = _letter_image(y, x, spec)
    return free_reduce(substitute_some(
        img, lambda z: a_in_band_basis(spec, 1, z.j) if z.kind == STRAND else None))


_SPLIT = 256  # longer words are normalized in halves


def _empty(k: int) -> list[list[Letter]]:
    return [[] for _ in range(k)]


class _Comber:
    """Maintains ``omega_1 ... omega_top`` while pure words are multiplied on the right.

    A run of letters below strand ``top`` crosses ``omega_top`` by
    conjugation.  The letters of ``omega_top`` act on the whole run one at a
    time, innermost first, and the run is re-combed on the lower strands
    (where every level is free, so the form is unique) after each of them.
    Acting on single letters instead would build each letter's image in
    full, and those images grow geometrically even when the run's image is
    short.  Level words are kept in the band basis throughout.
    """

    def __init__(self, spec: SurfaceSpec, budget: Budget, top: int | None = None):
        self.spec = spec
        self.budget = budget
        self.top = spec.strands if top is None else top
        self.levels = [_Stack() for _ in range(self.top)]

    def push_word(self, z: Sequence[Letter], top: int | None = None) -> None:
        """Multiply ``omega_1 ... omega_top`` on the right by a word on strands ``<= top``."""
        top = self.top if top is None else top
        run: list[Letter] = []
        for x in z:
            if x.i == top:
                if run:
                    self._cross(run, top)
                    run = []
                self._append(x)
            else:
                run.append(x)
        if run:
            self._cross(run, top)

    def _append(self, x: Letter) -> None:
        level = self.levels[x.i - 1]
        if x.kind == STRAND:
            image = a_in_band_basis(self.spec, x.i, x.j)
            for y in (image if x.sign == 1 else invert(image)):
                level.append(y)
        else:
            level.append(x)

    def _cross(self, run: Sequence[Letter], top: int) -> None:
        """Move ``run`` (strands ``< top``) left across ``omega_top``."""
        omega = self.levels[top - 1].letters
        self.push_word(self.act(omega, run, top) if omega else run, top - 1)

    def act(self, omega: Sequence[Letter], run: Sequence[Letter], top: int) -> Word:
        """Normal word on strands ``< top`` equal to ``omega run omega^-1``."""
        if top == 2:
            return tuple(self._act_free(omega, _reduce(_band_basis(run, self.spec))))
        v = self._act_levels(omega, self._nf(run, top - 1), top)
        return concat(*map(tuple, v))

    def _act_free(self, omega: Sequence[Letter], v: list[Letter]) -> list[Letter]:
        # level 1 is free, so free reduction is its normal form
        spec = self.spec
        for y in reversed(omega):
            v = _reduce([z for x in v for z in _level1_image(y, x, spec)])
            self.budget.tick("transport", len(v))
        return v

    def _act_levels(self, omega: Sequence[Letter], v: list[list[Letter]], top: int) -> list[list[Letter]]:
        """``omega v omega^-1`` for a level list ``v`` below ``top``."""
        if top == 2:
            return [self._act_free(omega, v[0])]
        spec = self.spec
        for y in reversed(omega):
            acc = _empty(top - 1)
            for lv, part in enumerate(v, start=1):
                if part:
                    image = [z for x in part for z in _letter_image(y, x, spec)]
                    acc = self._merge(acc, self._nf(image, lv) + _empty(top - 1 - lv), top - 1)
            v = acc
            self.budget.tick("transport", sum(map(len, v)))
        return v

    def _nf(self, word: Sequence[Letter], top: int) -> list[list[Letter]]:
        """Level lists of ``word`` on strands ``<= top``.

        The word is cut into single top-strand letters and maximal runs
        below them; each run is normalized on its own and merged in.
        """
        m = max((x.i for x in word), default=1)
        if m < top:
            return self._nf(word, m) + _empty(top - m)
        if top == 1:
            return [_reduce(_band_basis(word, self.spec))]
        if len(word) > _SPLIT:
            mid = len(word) // 2
            return self._merge(self._nf(word[:mid], top), self._nf(word[mid:], top), top)
        nf = _empty(top)
        run: list[Letter] = []
        for x in word:
            if x.i == top:
                if run:
                    nf = self._merge(nf, self._nf(run, top - 1) + [[]], top)
                    run = []
                level = nf[top - 1]
                for z in (_strand_in_band_basis(x, self.spec) if x.kind == STRAND else (x,)):
                    if level and _cancels(level[-1], z):
                        level.pop()
                    else:
                        level.append(z)
            else:
                run.append(x)
        if run:
            nf = self._merge(nf, self._nf(run, top - 1) + [[]], top)
        return nf

    def _merge(self, A: list[list[Letter]], B: list[list[Letter]], top: int) -> list[list[Letter]]:
        if top == 1:
            return [_reduce(A[0] + B[0])]
        omega, lower = A[top - 1], B[:top - 1]
        if any(lower):
            if omega:
                lower = self._act_levels(omega, lower, top)
            lower = self._merge(A[:top - 1], lower, top - 1)
        else:
            lower = A[:top - 1]
        return lower + [_reduce(omega + B[top - 1])]

    def normal_word(self, word: Sequence[Letter], top: int) -> Word:
        """Combed form of ``word`` on strands ``<= top`` (all free), in the band basis."""
        return concat(*map(tuple, self._nf(word, top)))

    def finish(self) -> CombedForm:
        n = self.spec.strands
        Y = self.levels[n - 1].word()
        last = canonicalize_level_n(Y, self.spec, self.push_correction, self.budget, self.conjugate)
        levels = [lv.word() for lv in self.levels]
        levels[n - 1] = last
        if n > 1:
            levels[0] = free_reduce(expand_bands(levels[0], self.spec))
        return CombedForm(tuple(levels))

    def conjugate(self, w: Word, z: Word) -> Word:
        """``w z w^-1`` for a level-``n`` word ``w``, normalized below level ``n``."""
        n = self.spec.strands
        return self.act(free_reduce(w), eliminate_Tn(z, self.spec), n)

    def push_correction(self, corr: Word) -> None:
        self.push_word(corr, self.spec.strands - 1)


def comb(pure: Sequence[Letter], spec: SurfaceSpec, budget: Budget | None = None) -> CombedForm:
    """Comb a pure word into levels ``omega_1 ... omega_n``.

    Letters are multiplied onto a running combed form one at a time; a
    lower-strand letter passes each higher level ``omega_m`` by conjugation
    and the pieces land, freely reduced, on their own levels.  The level-``n``
    word is canonicalized once at the end and its corrections are pushed into
    the lower levels.  ``omega_1`` is reported in the ``a[1,*]`` basis when
    ``n > 1``.

    >>> from .words import parse, format_word
    >>> cf = comb(parse("T[1,2]"), SurfaceSpec(True, 1, 2))
    >>> [format_word(w) for w in cf.levels]
    ['a[1,1] a[1,2] a[1,1]^-1 a[1,2]^-1', '']
    """
    budget = budget or Budget()
    _check_pure(pure, spec)
    comber = _Comber(spec, budget)
    n = spec.strands
    comber.push_word(eliminate_Tn(pure, spec), n)
    return comber.finish()
