"""Canonical words at the last level, where ``V_n`` generates pi_1 of the closed surface.

The last strand's band letters satisfy one relation in the braid group::

    R(A[n,*]) = C,    C = prod_{i<n} T_{i,n-1}^-1 T_{i,n}

(PR1 / Pr1 rewritten in the band basis).  Whenever a surface-group rewrite
replaces a subword ``alpha`` of the level-``n`` word by a shorter ``beta^-1``
with ``alpha beta = u^-1 R^e u``, the braid picks up the correction
``u^-1 C^e u``, which is pushed to the left of the level-``n`` word and
handed to a sink.  The concatenated corrections followed by the returned
word equal the input as pure braids.

Strategies by surface:

* torus: sort to ``A1^p A2^q`` (the group is abelian);
* Klein bottle: sort to ``x^p y^q`` with ``x = A1 A2``, ``y = A2`` using
  ``y^e x^f = x^-f y^e``;
* everything else: Dehn's algorithm, replacing more than half of a cyclic
  rotation of ``R^{+-1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

from .budget import Budget
from .conj import conj_by_word, eliminate_Tn
from .presentations import a_in_band_basis, pr1_correction, pr1_lhs
from .words import (
    BAND,
    Letter,
    SurfaceSpec,
    Word,
    WordError,
    band,
    concat,
    free_reduce,
    invert,
    power,
    substitute_some,
)

Sink = Callable[[Word], None]
Conjugator = Callable[[Word, Word], Word]


@dataclass(frozen=True)
class Rotation:
    rho: Word  # u^-1 R^e u
    u: Word
    e: int


@dataclass(frozen=True)
class SurfaceRelator:
    relator: Word
    correction: Word
    rotations: tuple[Rotation, ...]


@lru_cache(maxsize=None)
def surface_relator(spec: SurfaceSpec) -> SurfaceRelator:
    n = spec.strands
    lhs = pr1_lhs(spec)
    rel = free_reduce(substitute_some(
        lhs, lambda x: a_in_band_basis(spec, n, x.j) if x.kind == "a" else None))
    corr = eliminate_Tn(free_reduce(pr1_correction(spec)), spec)
    rots = []
    for e in (1, -1):
        word = rel if e == 1 else invert(rel)
        for t in range(len(word)):
            rots.append(Rotation(word[t:] + word[:t], word[:t], e))
    return SurfaceRelator(rel, corr, tuple(rots))


def _check_level_n(Y: Sequence[Letter], spec: SurfaceSpec) -> None:
    n = spec.strands
    for pos, x in enumerate(Y):
        if x.kind != BAND or x.i != n:
            raise WordError(f"level-{n} word has foreign letter {x} at position {pos}")


class _Mover:
    """Applies relator moves and emits the matching braid corrections."""

    def __init__(self, spec: SurfaceSpec, sink: Sink | None, budget: Budget,
                 conjugate: Conjugator | None):
        self.spec = spec
        self.sink = sink
        self.budget = budget
        self.rel = surface_relator(spec)
        self.conjugate = conjugate or (lambda w, z: conj_by_word(w, z, spec))

    def emit(self, Y1: Word, u: Word, e: int) -> None:
        """Emit ``Y1 u^-1 C^e u Y1^-1``."""
        self.budget.tick("dehn")
        if self.sink is None or not self.rel.correction:
            return
        z = self.conjugate(free_reduce(Y1 + invert(u)), power(self.rel.correction, e))
        self.budget.tick("correction", len(z))
        if z:
            self.sink(z)

    def conjugator(self, w: Word) -> tuple[Word, int]:
        """Find ``(v, e)`` with ``w = v^-1 R^e v`` freely."""
        w = free_reduce(w)
        k = 0
        while 2 * k + 1 < len(w) and w[k] == w[-1 - k].inverse():
            k += 1
        core, p = w[k:len(w) - k], w[:k]
        for rot in self.rel.rotations:
            if rot.rho == core:
                return concat(rot.u, invert(p)), rot.e
        raise AssertionError("word is not a conjugate of the surface relator")


def _dehn(Y: Word, mover: _Mover) -> Word:
    rots = mover.rel.rotations
    L = len(mover.rel.relator)
    half = L // 2
    Y = free_reduce(Y)
    while True:
        best = None
        for p in range(len(Y) - half):
            for rot in rots:
                rho = rot.rho
                if Y[p] != rho[0]:
                    continue
                ell = 1
                while ell < L and p + ell < len(Y) and Y[p + ell] == rho[ell]:
                    ell += 1
                if ell > half and (best is None or ell > best[1]):
                    best = (p, ell, rot)
            if best is not None:
                break
        if best is None:
            return Y
        p, ell, rot = best
        Y1 = Y[:p]
        mover.emit(Y1, rot.u, rot.e)
        Y = free_reduce(Y1 + invert(rot.rho[ell:]) + Y[p + ell:])


def _torus(Y: Word, mover: _Mover, n: int) -> Word:
    Y = free_reduce(Y)
    while True:
        for p in range(len(Y) - 1):
            if Y[p].j == 2 and Y[p + 1].j == 1:
                break
        else:
            return Y
        swapped = (Y[p + 1], Y[p])
        v, e = mover.conjugator(concat(Y[p:p + 2], invert(swapped)))
        mover.emit(Y[:p], v, e)
        Y = free_reduce(Y[:p] + swapped + Y[p + 2:])


def _klein(Y: Word, mover: _Mover, n: int) -> Word:
    x, y = (band(n, 1), band(n, 2)), (band(n, 2),)

    def to_a(sym: tuple[str, int]) -> Word:
        return power(x if sym[0] == "x" else y, sym[1])

    def as_word(syms) -> Word:
        return tuple(letter for s in syms for letter in to_a(s))

    def reduce_syms(syms):
        out = []
        for s in syms:
            if out and out[-1][0] == s[0] and out[-1][1] == -s[1]:
                out.pop()
            else:
                out.append(s)
        return out

    # A1 = x y^-1, A2 = y
    syms = []
    for letter in Y:
        if letter.j == 1:
            part = [("x", 1), ("y", -1)]
            syms.extend(part if letter.sign == 1 else [("y", 1), ("x", -1)])
        else:
            syms.append(("y", letter.sign))
    syms = reduce_syms(syms)
    while True:
        for p in range(len(syms) - 1):
            if syms[p][0] == "y" and syms[p + 1][0] == "x":
                break
        else:
            return free_reduce(as_word(syms))
        ye, xf = syms[p], syms[p + 1]
        new = [("x", -xf[1]), ye]
        v, e = mover.conjugator(concat(as_word([ye, xf]), invert(as_word(new))))
        mover.emit(free_reduce(as_word(syms[:p])), v, e)
        syms = reduce_syms(syms[:p] + new + syms[p + 2:])


def canonicalize_level_n(Y: Sequence[Letter], spec: SurfaceSpec, sink: Sink | None = None,
                         budget: Budget | None = None, conjugate: Conjugator | None = None) -> Word:
    """Rewrite the level-``n`` word to its canonical form, emitting corrections.

    ``conjugate(w, z)`` must return a word over strands below ``n`` equal to
    ``w z w^-1``; the default uses the raw conjugation rules.
    """
    Y = tuple(Y)
    _check_level_n(Y, spec)
    mover = _Mover(spec, sink, budget or Budget(), conjugate)
    n = spec.strands
    if spec.orientable and spec.genus == 1:
        return _torus(Y, mover, n)
    if not spec.orientable and spec.genus == 2:
        return _klein(Y, mover, n)
    return _dehn(Y, mover)


def is_trivial_pi1(Y: Sequence[Letter], spec: SurfaceSpec) -> bool:
    return canonicalize_level_n(Y, spec, None) == ()
