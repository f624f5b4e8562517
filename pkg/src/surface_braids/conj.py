"""Conjugation dictionary.

Two families of identities ``y x y^-1 = Z`` are needed:

* sigma rules, where ``y = s_i`` and ``x`` is a pure generator;
* band rules, where ``y`` belongs to ``V_m`` (``A[m,s]`` or ``T[m,l]``) and
  ``x`` is a strand-``i`` generator with ``i < m``.

For a fixed strand ``i < m`` the band rules define an automorphism of the
free group on ``a[i,*]`` and ``T[i,i+1..n]``.  Conjugation by a positive
letter comes straight from PR2-PR7 (Pr2-Pr7); the negative-letter rules are
the inverse automorphism, solved by hand and checked by the round-trip tests.
Letters ``T[i,n]`` may appear in results; :func:`eliminate_Tn` removes them.

All results are cached per ``(spec, conjugator, target)``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from .presentations import T, band_definition, pr8_word
from .words import (
    BAND,
    SIGMA,
    STRAND,
    TLOOP,
    Letter,
    SurfaceSpec,
    Word,
    WordError,
    concat,
    erase_trivial_loops,
    free_reduce,
    invert,
    strand,
    substitute,
    tloop,
)


def _clean(word: Iterable[Letter]) -> Word:
    return free_reduce(erase_trivial_loops(word))


# ------------------------------------------------------------ sigma rules

@lru_cache(maxsize=None)
def sigma_conj(i: int, x: Letter, spec: SurfaceSpec) -> Word:
    """``s_i x s_i^-1`` as a word over ``a[*,*]`` and ``T[*,*]``.

    >>> from .words import format_word
    >>> format_word(sigma_conj(1, strand(1, 1), SurfaceSpec(True, 1, 2)))
    'T[1,2] a[2,1]'
    """
    if x.sign == -1:
        return invert(sigma_conj(i, x.inverse(), spec))
    if x.kind == STRAND:
        j, r = x.i, x.j
        if j not in (i, i + 1):
            return (x,)
        if not spec.orientable:
            if j == i + 1:
                return (strand(i, r),)
            return _clean(concat(T(i, i + 1), (strand(i + 1, r),), invert(T(i, i + 1))))
        even = r % 2 == 0
        if j == i:
            out = ((strand(i + 1, r),) + invert(T(i, i + 1))) if even else (T(i, i + 1) + (strand(i + 1, r),))
        else:
            out = (T(i, i + 1) + (strand(i, r),)) if even else ((strand(i, r),) + invert(T(i, i + 1)))
        return out
    if x.kind == TLOOP:
        j, k = x.i, x.j
        if j == k:
            return ()
        if i == j - 1:
            return _clean(concat(T(i, k), invert(T(i, i + 1))))
        if i == j:
            return _clean(concat(T(i, i + 1), T(i + 1, k)))
        if i == k:
            return _clean(concat(T(j, i - 1), invert(T(j, i)), T(j, i + 1)))
        return (x,)
    raise WordError(f"sigma rules need a pure letter, got {x}")


def conj_word(u: Sequence[Letter], word: Iterable[Letter], spec: SurfaceSpec) -> Word:
    """``u w u^-1`` for a word ``u`` of positive sigmas and a pure word ``w``."""
    out = tuple(word)
    for s in reversed(u):
        if s.kind != SIGMA or s.sign != 1:
            raise WordError("conjugator must consist of positive sigma letters")
        out = free_reduce(substitute(out, lambda x, i=s.i: sigma_conj(i, x, spec)))
    return out


# ------------------------------------------------------------- band rules

def strand_of(x: Letter) -> int:
    return x.i


def _a(i: int, rs) -> Word:
    return tuple(strand(i, r) for r in rs)


def _positive_image(y: Letter, x: Letter, spec: SurfaceSpec) -> Word:
    """Image of the positive letter ``x`` under conjugation by ``y``."""
    m, i = y.i, x.i
    D = concat(T(i, m - 1), invert(T(i, m)))
    if y.kind == TLOOP:
        l = y.j
        if x.kind == STRAND:
            return (x,)
        k = x.j
        if not (m <= k < l):
            return (x,)
        Tk, Tl = (x,), T(i, l)
        if y.sign == 1:
            return concat(D, Tk, invert(Tl), invert(D), Tl)
        psiD = concat(Tl, invert(T(i, m - 1)), D, T(i, m - 1), invert(Tl))
        return concat(invert(psiD), Tk, invert(Tl), psiD, Tl)

    s = y.j
    B = band_definition(spec, i, s)
    if spec.orientable:
        P = _a(i, range(1, s))
    else:
        P = tuple(strand(i, t) for t in range(1, s) for _ in (0, 1))
    if x.kind == STRAND:
        if x.j != s:
            return (x,)
        if spec.orientable:
            if y.sign == 1:
                return concat(invert(P), D, P, (x,))
            psiD = concat(B, invert(T(i, m - 1)), D, T(i, m - 1), invert(B))
            return concat(invert(P), invert(psiD), P, (x,))
        if y.sign == 1:
            return concat(invert(P), D, P, (x,))
        return concat(invert(P), B, D, invert(B), invert(B), P)
    k = x.j
    if k < m:
        return (x,)
    if spec.orientable:
        if y.sign == 1:
            return concat(D, (x,), invert(B), invert(D), B)
        psiD = concat(B, invert(T(i, m - 1)), D, T(i, m - 1), invert(B))
        return concat(invert(psiD), (x,), invert(B), psiD, B)
    if y.sign == 1:
        return concat(D, invert(B), D, B, (x,))
    return concat(B, D, invert(B), D, (x,))


@lru_cache(maxsize=None)
def band_conj(y: Letter, x: Letter, spec: SurfaceSpec) -> Word:
    """``y x y^-1`` for ``y`` in ``V_m`` and ``x`` a strand-``i`` letter, ``i < m``.

    The result is freely reduced and may contain ``T[i',n]`` letters.

    >>> from .words import format_word, band
    >>> format_word(band_conj(band(2, 1), strand(1, 1), SurfaceSpec(True, 1, 2)))
    'T[1,2]^-1 a[1,1]'
    """
    if y.kind not in (BAND, TLOOP) or x.kind not in (STRAND, TLOOP):
        raise WordError(f"no band rule for {y} acting on {x}")
    if not x.i < y.i:
        raise WordError(f"band rule needs strand({x}) < strand({y})")
    if x.sign == -1:
        return invert(band_conj(y, x.inverse(), spec))
    return _clean(_positive_image(y, x, spec))


def conj_by_letter(y: Letter, word: Iterable[Letter], spec: SurfaceSpec) -> Word:
    return free_reduce(substitute(word, lambda x: band_conj(y, x, spec)))


def conj_by_word(u: Sequence[Letter], word: Iterable[Letter], spec: SurfaceSpec,
                 eliminate: bool = True) -> Word:
    """``u w u^-1`` for a word ``u`` over some ``V_m``; innermost letter first."""
    out = tuple(word)
    for y in reversed(u):
        out = conj_by_letter(y, out, spec)
        if eliminate:
            out = eliminate_Tn(out, spec)
    return out


# ---------------------------------------------------------- PR8 rewriting

def eliminate_Tn(word: Iterable[Letter], spec: SurfaceSpec) -> Word:
    """Replace each ``T[j,n]`` by its PR8 / Pr8 word and free-reduce.

    >>> from .words import format_word, parse
    >>> format_word(eliminate_Tn(parse("T[1,2]"), SurfaceSpec(True, 1, 2)))
    'a[1,1] a[1,2] a[1,1]^-1 a[1,2]^-1'
    """
    n = spec.strands
    word = tuple(word)
    if not any(x.kind == TLOOP and x.j == n for x in word):
        return free_reduce(word)
    return free_reduce(substitute(word, lambda x: _pr8_image(x, spec)))


@lru_cache(maxsize=None)
def _pr8_image(x: Letter, spec: SurfaceSpec) -> Word:
    if x.kind == TLOOP and x.j == spec.strands:
        return _clean(pr8_word(spec, x.i))
    return (x,)


# ---------------------------------------------------------- table listing

def pure_letters(spec: SurfaceSpec) -> list[Letter]:
    n, G = spec.strands, spec.G
    return [strand(i, r) for i in range(1, n + 1) for r in range(1, G + 1)] + [
        tloop(j, k) for j in range(1, n + 1) for k in range(j + 1, n + 1)
    ]


def band_conjugators(spec: SurfaceSpec, m: int) -> list[Letter]:
    """Positive letters of ``V_m``."""
    from .words import band

    n, G = spec.strands, spec.G
    return [band(m, r) for r in range(1, G + 1)] + [tloop(m, k) for k in range(m + 1, n)]


def band_targets(spec: SurfaceSpec, m: int) -> list[Letter]:
    """Positive letters of strand index below ``m`` (excluding ``T[*,n]``)."""
    n = spec.strands
    return [x for x in pure_letters(spec) if x.i < m and not (x.kind == TLOOP and x.j == n)]


def rule_table(spec: SurfaceSpec) -> list[tuple[Letter, Letter, Word]]:
    """Every instantiated ``(conjugator, target, result)`` triple."""
    from .words import sigma

    rows: list[tuple[Letter, Letter, Word]] = []
    for i in range(1, spec.strands):
        for x in pure_letters(spec):
            rows.append((sigma(i), x, sigma_conj(i, x, spec)))
    for m in range(2, spec.strands + 1):
        for y in band_conjugators(spec, m):
            for sign in (1, -1):
                yy = y if sign == 1 else y.inverse()
                for x in band_targets(spec, m):
                    rows.append((yy, x, band_conj(yy, x, spec)))
    return rows
