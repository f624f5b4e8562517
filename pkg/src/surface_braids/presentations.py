"""Generators, relator families and changes of generators, as plain words.

Three presentation levels are available:

``THEOREM``
    braid group on ``s_i`` and ``a_r`` (relations R1-R6, or r1-r6 when the
    surface is non-orientable);
``PURE``
    pure braid group on ``a[i,r]`` and ``T[j,k]`` (PR1-PR8 / Pr1-Pr8);
``EXTENDED``
    the theorem relators together with the definitions R7-R9 (r7-r8) of the
    pure generators in terms of ``s_i`` and ``a_r``.

Each relator is emitted as one word ``LHS * RHS^-1`` with every auxiliary
symbol (``A_{2,r}``, ``A_{j,s}``) expanded in place.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from typing import Iterator

from .words import (
    A1,
    BAND,
    SIGMA,
    TLOOP,
    Letter,
    RangeError,
    SurfaceSpec,
    Word,
    a1,
    band,
    concat,
    erase_trivial_loops,
    free_reduce,
    invert,
    sigma,
    strand,
    substitute,
    tloop,
)


class Level(str, enum.Enum):
    THEOREM = "theorem"
    PURE = "pure"
    EXTENDED = "extended"


# ------------------------------------------------------------ small builders

def T(j: int, k: int) -> Word:
    """``T_{j,k}`` as a word; ``T_{j,j}`` is the trivial braid."""
    return () if j == k else (tloop(j, k),)


def commutator(u: Word, v: Word) -> Word:
    return concat(u, v, invert(u), invert(v))


def relator_of(lhs: Word, rhs: Word) -> Word:
    return concat(lhs, invert(rhs))


def _a_run(i: int, rs, sign: int = 1, exp: int = 1) -> Word:
    """``a_{i,r}^{sign*exp}`` for each ``r`` in ``rs``, concatenated."""
    out: list[Letter] = []
    for r in rs:
        out.extend([strand(i, r, sign)] * exp)
    return tuple(out)


def sigma_arch(j: int, k: int) -> Word:
    """``s_j s_{j+1} ... s_{k-2} s_{k-1}^2 s_{k-2} ... s_j``."""
    up = tuple(sigma(t) for t in range(j, k - 1))
    return concat(up, (sigma(k - 1), sigma(k - 1)), tuple(reversed(up)))


# ---------------------------------------------------------- band generators

@lru_cache(maxsize=None)
def band_definition(spec: SurfaceSpec, j: int, r: int) -> Word:
    """Defining word of ``A_{j,r}`` over ``a[j,*]``.

    >>> from .words import format_word
    >>> format_word(band_definition(SurfaceSpec(True, 2, 2), 2, 3))
    'a[2,1] a[2,2] a[2,4]^-1'
    """
    if not (1 <= j <= spec.strands and 1 <= r <= spec.G):
        raise RangeError(f"A[{j},{r}] out of range for {spec}")
    G = spec.G
    if spec.orientable:
        return concat(_a_run(j, range(1, r)), _a_run(j, range(r + 1, G + 1), -1))
    return concat(
        _a_run(j, range(1, r), exp=2),
        (strand(j, r, -1),),
        _a_run(j, range(r - 1, 0, -1), -1, exp=2),
    )


def _lemma2_word(i: int, k: int, G: int) -> Word:
    """``prod_{t<k} A_t^{(-1)^(t+1)} prod_{t>k} A_t^{(-1)^t}`` at strand ``i``."""
    left = tuple(band(i, t, 1 if t % 2 else -1) for t in range(1, k))
    right = tuple(band(i, t, -1 if t % 2 else 1) for t in range(k + 1, G + 1))
    return left + right


@lru_cache(maxsize=None)
def a_in_band_basis(spec: SurfaceSpec, i: int, r: int) -> Word:
    """``a_{i,r}`` written over ``A[i,*]`` (inverse change of generators)."""
    if spec.orientable:
        w = _lemma2_word(i, r, spec.G)
        return w if r % 2 else invert(w)
    sq = tuple(band(i, t) for t in range(1, r) for _ in (0, 1))
    return concat(sq, (band(i, r, -1),), invert(sq))


def change_of_generators(spec: SurfaceSpec, direction: str, i: int) -> dict[Letter, Word]:
    """Substitution table at strand ``i``.

    ``direction`` is ``"a->A"`` (band letters in terms of strand letters) or
    ``"A->a"`` (strand letters in terms of band letters).
    """
    G = spec.G
    if direction == "a->A":
        return {band(i, r): band_definition(spec, i, r) for r in range(1, G + 1)}
    if direction == "A->a":
        return {strand(i, r): a_in_band_basis(spec, i, r) for r in range(1, G + 1)}
    raise ValueError(f"unknown direction {direction!r}")


def expand_bands(word: Word, spec: SurfaceSpec) -> Word:
    """Replace every ``A[j,r]`` letter by its defining word."""
    def image(x: Letter):
        return band_definition(spec, x.i, x.j) if x.kind == BAND else (x,)
    return substitute(word, image)


# ----------------------------------------------------- theorem-level words

def theorem_band(spec: SurfaceSpec, r: int) -> Word:
    """``A_{2,r}`` as a word over ``s_1`` and ``a_*``."""
    inner = tuple(a1(x.j, x.sign) for x in band_definition(spec, 1, r))
    tail = sigma(1, -1) if spec.orientable else sigma(1)
    return concat((sigma(1, -1),), inner, (tail,))


def expand_to_theorem_generators(word: Word, spec: SurfaceSpec) -> Word:
    """Unfold ``a[i,r]``, ``T[j,k]`` and ``A[j,r]`` into ``s_i`` and ``a_r``.

    >>> from .words import parse, format_word
    >>> format_word(expand_to_theorem_generators(parse("a[2,1]"), SurfaceSpec(True, 1, 2)))
    's1^-1 a1 s1^-1'
    """
    return substitute(word, lambda x: _theorem_image(x, spec))


@lru_cache(maxsize=None)
def _theorem_image(x: Letter, spec: SurfaceSpec) -> Word:
    if x.kind in (SIGMA, A1):
        return (x,)
    if x.kind == TLOOP:
        return sigma_arch(x.i, x.j) if x.i < x.j else ()
    if x.kind == BAND:
        return expand_to_theorem_generators(band_definition(spec, x.i, x.j), spec)
    j, r = x.i, x.j
    down = tuple(sigma(t) for t in range(j - 1, 0, -1))
    if spec.orientable and r % 2 == 0:
        left, right = down, tuple(reversed(down))
    elif spec.orientable:
        left = tuple(sigma(t, -1) for t in range(j - 1, 0, -1))
        right = tuple(sigma(t, -1) for t in range(1, j))
    else:
        left = tuple(sigma(t, -1) for t in range(j - 1, 0, -1))
        right = tuple(sigma(t) for t in range(1, j))
    return concat(left, (a1(r),), right)


# ------------------------------------------------------------- relators

def _theorem_relators(spec: SurfaceSpec) -> Iterator[tuple[str, Word]]:
    n, G = spec.strands, spec.G
    tag = (lambda s: s) if spec.orientable else (lambda s: s.lower())
    for i in range(1, n):
        for j in range(i + 2, n):
            yield tag("R1"), commutator((sigma(i),), (sigma(j),))
    for i in range(1, n - 1):
        s, t = sigma(i), sigma(i + 1)
        yield tag("R2"), relator_of((s, t, s), (t, s, t))
    arch = sigma_arch(1, n) if n >= 2 else ()
    if spec.orientable:
        lhs = concat(tuple(a1(r) for r in range(1, G + 1)), tuple(a1(r, -1) for r in range(1, G + 1)))
    else:
        lhs = tuple(a1(r) for r in range(1, G + 1) for _ in (0, 1))
    yield tag("R3"), relator_of(lhs, arch)
    if n >= 2:
        for r in range(1, G + 1):
            for s in range(1, G + 1):
                if r != s:
                    yield tag("R4"), commutator((a1(r),), theorem_band(spec, s))
        for r in range(1, G + 1):
            if spec.orientable:
                head = tuple(a1(t) for t in range(1, r + 1))
            else:
                head = concat(tuple(a1(t) for t in range(1, r) for _ in (0, 1)), (a1(r),))
            A = theorem_band(spec, r)
            yield tag("R5"), relator_of(concat(head, A), concat((sigma(1), sigma(1)), A, head))
    for r in range(1, G + 1):
        for i in range(2, n):
            yield tag("R6"), commutator((a1(r),), (sigma(i),))


def pr8_word(spec: SurfaceSpec, j: int) -> Word:
    """Right-hand side of PR8 / Pr8 for ``T_{j,n}``; free of index-``n`` letters."""
    n, G = spec.strands, spec.G
    if spec.orientable:
        out: list[Letter] = []
        for i in range(1, j):
            out.extend(_a_run(i, range(G, 0, -1), -1))
            out.extend(T(i, j - 1))
            out.extend(invert(T(i, j)))
            out.extend(_a_run(i, range(1, G + 1)))
        out.extend(_a_run(j, range(1, G + 1)))
        out.extend(_a_run(j, range(1, G + 1), -1))
        return tuple(out)
    out = list(_a_run(j, range(1, G + 1), exp=2))
    for i in range(1, j):
        out.extend(invert(T(j - i, j)))
        out.extend(T(j - i, j - 1))
    return tuple(out)


def pr1_correction(spec: SurfaceSpec) -> Word:
    """``prod_{i<n} T_{i,n-1}^-1 T_{i,n}`` (still containing ``T[*,n]``)."""
    n = spec.strands
    out: list[Letter] = []
    for i in range(1, n):
        out.extend(invert(T(i, n - 1)))
        out.extend(T(i, n))
    return tuple(out)


def pr1_lhs(spec: SurfaceSpec, i: int | None = None) -> Word:
    """Left-hand side of PR1 / Pr1 at strand ``i`` (default ``n``)."""
    i = spec.strands if i is None else i
    G = spec.G
    if spec.orientable:
        return concat(_a_run(i, range(1, G + 1), -1), _a_run(i, range(1, G + 1)))
    return _a_run(i, range(1, G + 1), exp=2)


def _pure_relators(spec: SurfaceSpec) -> Iterator[tuple[str, Word]]:
    n, G = spec.strands, spec.G
    o = spec.orientable
    tag = (lambda s: s) if o else (lambda s: "Pr" + s[2:])
    A = lambda j, s: band_definition(spec, j, s)  # noqa: E731
    yield tag("PR1"), relator_of(pr1_lhs(spec), pr1_correction(spec))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for r in range(1, G + 1):
                for s in range(1, G + 1):
                    if r != s:
                        yield tag("PR2"), commutator((strand(i, r),), A(j, s))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for r in range(1, G + 1):
                if o:
                    head = _a_run(i, range(1, r + 1))
                else:
                    head = concat(_a_run(i, range(1, r), exp=2), (strand(i, r),))
                lhs = concat(head, A(j, r), invert(head), invert(A(j, r)))
                yield tag("PR3"), relator_of(lhs, concat(T(i, j), invert(T(i, j - 1))))
    quads = [
        (i, j, k, l)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        for k in range(1, n + 1)
        for l in range(k + 1, n + 1)
    ]
    for i, j, k, l in quads:
        if (i < j < k < l) or (i < k < l <= j):
            yield tag("PR4"), commutator(T(i, j), T(k, l))
    for i, j, k, l in quads:
        if i < k <= j < l:
            rhs = concat(
                T(i, k - 1), invert(T(i, k)), T(i, j), invert(T(i, l)),
                T(i, k), invert(T(i, k - 1)), T(i, l),
            )
            yield tag("PR5"), relator_of(concat(T(k, l), T(i, j), invert(T(k, l))), rhs)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(j + 1, n + 1):
                if i < j or k < i:
                    for r in range(1, G + 1):
                        yield tag("PR6"), commutator((strand(i, r),), T(j, k))
    for j in range(1, n + 1):
        for i in range(j + 1, n + 1):
            for k in range(i, n + 1):
                if o:
                    E = concat(_a_run(j, range(G, 0, -1), -1), T(j, k), _a_run(j, range(G, 0, -1)))
                else:
                    E = concat(_a_run(j, range(G, 0, -1), -1, exp=2), T(j, k))
                for r in range(1, G + 1):
                    yield tag("PR7"), commutator((strand(i, r),), E)
    for j in range(1, n):
        yield tag("PR8"), relator_of(T(j, n), pr8_word(spec, j))


def _definition_relators(spec: SurfaceSpec) -> Iterator[tuple[str, Word]]:
    n, G = spec.strands, spec.G

    def a(j: int, r: int) -> Letter:
        return a1(r) if j == 1 else strand(j, r)

    for j in range(1, n):
        for r in range(1, G + 1):
            s = sigma(j)
            if not spec.orientable:
                yield "r7", relator_of((a(j + 1, r),), (s.inverse(), a(j, r), s))
            elif r % 2 == 0:
                yield "R7", relator_of((a(j + 1, r),), (s, a(j, r), s))
            else:
                yield "R8", relator_of((a(j + 1, r),), (s.inverse(), a(j, r), s.inverse()))
    for j in range(1, n + 1):
        for k in range(j + 1, n + 1):
            yield ("R9" if spec.orientable else "r8"), relator_of(T(j, k), sigma_arch(j, k))


def named_relators(spec: SurfaceSpec, level: Level | str) -> list[tuple[str, Word]]:
    """``(family name, relator word)`` for every instance at ``level``."""
    level = Level(level)
    if level is Level.THEOREM:
        return list(_theorem_relators(spec))
    if level is Level.PURE:
        return list(_pure_relators(spec))
    return list(_theorem_relators(spec)) + list(_definition_relators(spec))


def relators(spec: SurfaceSpec, level: Level | str) -> list[Word]:
    return [w for _, w in named_relators(spec, level)]


def generators(spec: SurfaceSpec, level: Level | str) -> list[Letter]:
    level = Level(level)
    n, G = spec.strands, spec.G
    sig = [sigma(i) for i in range(1, n)]
    surf = [a1(r) for r in range(1, G + 1)]
    strands = [strand(i, r) for i in range(1, n + 1) for r in range(1, G + 1)]
    loops = [tloop(j, k) for j in range(1, n + 1) for k in range(j + 1, n + 1)]
    if level is Level.THEOREM:
        return sig + surf
    if level is Level.PURE:
        return strands + loops
    return sig + surf + strands[G:] + loops


def cleaned(word: Word) -> Word:
    return free_reduce(erase_trivial_loops(word))

