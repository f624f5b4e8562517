"""Permutations induced by braid words and the Sigma_n transversal.

Conventions used everywhere in the package:

* ``Perm.images[i-1]`` is the final position of the strand that starts at
  position ``i``.
* Words are read left to right, so ``perm_of_word(u + v)`` is "first ``u``,
  then ``v``" (see :meth:`Perm.then`).
* The transversal word of exponents ``(k_1, ..., k_{n-1})`` is
  ``t_{1,k_1} t_{2,k_2} ... t_{n-1,k_{n-1}}`` with
  ``t_{m,k} = s_m s_{m-1} ... s_{m-k+1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .words import SIGMA, Letter, SurfaceSpec, Word, sigma


@dataclass(frozen=True)
class Perm:
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def then(self, other: "Perm") -> "Perm":
        """Left-to-right composition: apply ``self`` first, then ``other``."""
        return Perm(tuple(other(self(i)) for i in range(1, self.n + 1)))

    def inverse(self) -> "Perm":
        inv = [0] * self.n
        for i, p in enumerate(self.images, start=1):
            inv[p - 1] = i
        return Perm(tuple(inv))

    def is_identity(self) -> bool:
        return all(p == i for i, p in enumerate(self.images, start=1))


@dataclass(frozen=True)
class TransversalState:
    """Exponent vector ``(k_1, ..., k_{n-1})`` with ``0 <= k_m <= m``."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        for m, k in enumerate(self.exponents, start=1):
            if not 0 <= k <= m:
                raise ValueError(f"exponent k_{m}={k} outside [0, {m}]")

    @classmethod
    def identity(cls, n: int) -> "TransversalState":
        return cls((0,) * max(n - 1, 0))

    def word(self) -> Word:
        return transversal_word(self.exponents)


def block_word(m: int, k: int) -> Word:
    """``t_{m,k} = s_m s_{m-1} ... s_{m-k+1}``."""
    return tuple(sigma(m - t) for t in range(k))


def transversal_word(exponents: Sequence[int]) -> Word:
    out: list[Letter] = []
    for m, k in enumerate(exponents, start=1):
        out.extend(block_word(m, k))
    return tuple(out)


def perm_of_word(word: Iterable[Letter], n: int | SurfaceSpec) -> Perm:
    """Permutation induced by a word; non-sigma letters act trivially.

    >>> perm_of_word((sigma(1), sigma(2)), 3).images
    (3, 1, 2)
    """
    if isinstance(n, SurfaceSpec):
        n = n.strands
    # strand_at[p] = strand currently occupying position p
    strand_at = list(range(n + 1))
    for x in word:
        if x.kind == SIGMA:
            i = x.i
            strand_at[i], strand_at[i + 1] = strand_at[i + 1], strand_at[i]
    images = [0] * n
    for pos in range(1, n + 1):
        images[strand_at[pos] - 1] = pos
    return Perm(tuple(images))


def perm_of_exponents(exponents: Sequence[int]) -> Perm:
    """Evaluation direction, through the explicit transversal word."""
    return perm_of_word(transversal_word(exponents), len(exponents) + 1)


def exponents_of_perm(p: Perm) -> TransversalState:
    """Peel transversal blocks off the right end of ``p``.

    Only the last block ``t_{n-1,k}`` moves strand ``n``, sending it to
    position ``n - k``.  Undoing that block leaves a permutation fixing ``n``.

    >>> exponents_of_perm(Perm((2, 1))).exponents
    (1,)
    """
    n = p.n
    images = list(p.images)
    exps = [0] * max(n - 1, 0)
    for top in range(n, 1, -1):
        m = top - 1
        k = top - images[top - 1]
        exps[m - 1] = k
        # undo t_{m,k}: position m-k+1 goes back to m+1, m-k+2..m+1 shift down
        lo = m - k + 1
        for s in range(top):
            q = images[s]
            if q == lo:
                images[s] = top
            elif lo < q <= top:
                images[s] = q - 1
    return TransversalState(tuple(exps))


def epsilon(word: Iterable[Letter], spec: SurfaceSpec | int) -> Word:
    """The section: transversal sigma-word with the same permutation as ``word``."""
    return exponents_of_perm(perm_of_word(word, spec)).word()
