"""Phase 1: split a braid word into a pure word followed by a transversal word.

The state holds a pure word ``P`` and transversal exponents ``k``; the part
of the input read so far equals ``P * t(k)``.  A new ``s_i`` is pushed
through the blocks of ``t(k)`` from the right using

* ``t_{m,k} s_j = s_{j-1} t_{m,k}``   when ``m-k+2 <= j <= m``,
* ``t_{m,k} s_j = s_j t_{m,k}``       when ``j <= m-k-1``,
* ``t_{m,k} s_{m-k} = t_{m,k+1}``,
* ``t_{m,k} s_{m-k+1} = t_{m,k-1} T_{j,j+1}``   (since ``s_j^2 = T_{j,j+1}``),

and any ``T`` produced is conjugated leftwards into ``P``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .conj import conj_word
from .sym import TransversalState, block_word, transversal_word
from .words import (
    A1,
    SIGMA,
    Letter,
    SurfaceSpec,
    Word,
    WordError,
    free_reduce,
    tloop,
)


@dataclass(frozen=True)
class SigmaState:
    pure_acc: Word = ()
    trans: TransversalState = field(default_factory=lambda: TransversalState(()))

    @classmethod
    def start(cls, spec: SurfaceSpec) -> "SigmaState":
        return cls((), TransversalState.identity(spec.strands))


def _prefix(exps: tuple[int, ...], m: int, k: int) -> Word:
    """Transversal blocks ``t_1 ... t_{m-1}`` followed by ``t_{m,k}``."""
    return transversal_word(exps[: m - 1]) + block_word(m, k)


def absorb_sigma(st: SigmaState, i: int, sign: int, spec: SurfaceSpec) -> SigmaState:
    """Append ``s_i^sign`` to the state."""
    n = spec.strands
    if not 1 <= i <= n - 1:
        raise WordError(f"s{i} out of range for {spec}")
    exps = list(st.trans.exponents)
    pure = st.pure_acc
    if sign == -1:
        # s_i^-1 = T_{i,i+1}^-1 s_i
        pure = free_reduce(pure + conj_word(transversal_word(exps), (tloop(i, i + 1, -1),), spec))
    j = i
    for m in range(n - 1, 0, -1):
        k = exps[m - 1]
        if j <= m - k - 1:
            continue
        if m - k + 2 <= j <= m:
            j -= 1
            continue
        if j == m - k:
            exps[m - 1] = k + 1
            break
        # j == m - k + 1 with k >= 1
        exps[m - 1] = k - 1
        pure = free_reduce(pure + conj_word(_prefix(tuple(exps), m, k - 1), (tloop(j, j + 1),), spec))
        break
    else:  # pragma: no cover - the invariants above make this unreachable
        raise AssertionError("pending generator was not absorbed")
    return SigmaState(pure, TransversalState(tuple(exps)))


def absorb_pure(st: SigmaState, x: Letter, spec: SurfaceSpec) -> SigmaState:
    """Append a pure letter (``a<r>`` is read as ``a[1,r]``)."""
    x = x.canonical()
    image = conj_word(st.trans.word(), (x,), spec)
    return SigmaState(free_reduce(st.pure_acc + image), st.trans)


def purify(word: Iterable[Letter], spec: SurfaceSpec) -> tuple[Word, Word]:
    """Return ``(pure, s)`` with ``word = pure * s`` and ``s = epsilon(word)``.

    >>> from .words import parse, format_word
    >>> p, s = purify(parse("s1 a1"), SurfaceSpec(True, 1, 2))
    >>> format_word(p), format_word(s)
    ('T[1,2] a[2,1]', 's1')
    """
    st = SigmaState.start(spec)
    for x in word:
        if x.kind == SIGMA:
            st = absorb_sigma(st, x.i, x.sign, spec)
        elif x.kind == A1 or x.kind in ("a", "T"):
            st = absorb_pure(st, x, spec)
        else:
            raise WordError(f"purify cannot read letter {x}")
    return st.pure_acc, st.trans.word()
