"""Independent checks used by the tests and ``sbw selftest``.

* The Artin action of sigma-words on the free group ``F(x_1..x_n)``: the
  disc braid group embeds in the surface braid group and acts faithfully,
  so a sigma-word is trivial exactly when its action is the identity.
* Exponent sums (abelianization), a necessary condition for triviality.
* An exhaustive check of the ``Sigma_n`` transversal machinery.
* Soundness checks for every instantiated conjugation rule.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Sequence

from .combing import comb
from .conj import conj_by_letter, conj_word, rule_table
from .presentations import T, expand_to_theorem_generators
from .sym import (
    Perm,
    epsilon,
    exponents_of_perm,
    perm_of_exponents,
    perm_of_word,
    transversal_word,
)
from .words import (
    A1,
    SIGMA,
    STRAND,
    TLOOP,
    Letter,
    SurfaceSpec,
    Word,
    WordError,
    format_letter,
    format_word,
    free_reduce,
    invert,
)

FreeWord = tuple[int, ...]  # x_i is ``i``, its inverse ``-i``


def reduce_free(word: Iterable[int]) -> FreeWord:
    out: list[int] = []
    for g in word:
        if out and out[-1] == -g:
            out.pop()
        else:
            out.append(g)
    return tuple(out)


def invert_free(word: Sequence[int]) -> FreeWord:
    return tuple(-g for g in reversed(word))


@dataclass(frozen=True)
class FreeGroupEndo:
    """An endomorphism of ``F(x_1..x_n)`` given by the images of the generators."""

    images: tuple[FreeWord, ...]

    @classmethod
    def identity(cls, n: int) -> "FreeGroupEndo":
        return cls(tuple((i,) for i in range(1, n + 1)))

    @property
    def rank(self) -> int:
        return len(self.images)

    def __call__(self, word: Iterable[int]) -> FreeWord:
        out: list[int] = []
        for g in word:
            image = self.images[abs(g) - 1]
            out.extend(image if g > 0 else invert_free(image))
        return reduce_free(out)

    def compose(self, other: "FreeGroupEndo") -> "FreeGroupEndo":
        """``self o other``: apply ``other`` first."""
        return FreeGroupEndo(tuple(self(img) for img in other.images))

    def is_identity(self) -> bool:
        return all(img == (i,) for i, img in enumerate(self.images, start=1))


def _sigma_action(i: int, sign: int, n: int) -> FreeGroupEndo:
    images = [(k,) for k in range(1, n + 1)]
    if sign == 1:
        images[i - 1] = (i, i + 1, -i)
        images[i] = (i,)
    else:
        images[i - 1] = (i + 1,)
        images[i] = (-(i + 1), i, i + 1)
    return FreeGroupEndo(tuple(images))


def artin_image(word: Iterable[Letter], n: int | None = None) -> FreeGroupEndo:
    """Artin action of a sigma-word: ``s_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i``.

    ``artin_image(u + v) == artin_image(u).compose(artin_image(v))``.

    >>> from .words import parse
    >>> artin_image(parse("s1 s2 s1 s2^-1 s1^-1 s2^-1")).is_identity()
    True
    >>> artin_image(parse("s2"), 3).images[0]
    (1,)
    """
    word = tuple(word)
    for pos, x in enumerate(word):
        if x.kind != SIGMA:
            raise WordError(f"artin_image takes sigma letters only, got {x} at position {pos}")
    if n is None:
        n = max((x.i + 1 for x in word), default=1)
    psi = FreeGroupEndo.identity(n)
    for x in word:
        if x.i + 1 > n:
            raise WordError(f"{x} does not act on a free group of rank {n}")
        psi = psi.compose(_sigma_action(x.i, x.sign, n))
    return psi


@dataclass(frozen=True)
class AbelianClass:
    """Exponent sums of a word in the theorem generators.

    ``a_vector`` counts each ``a_r``; ``sigma_parity`` is the sigma exponent
    sum mod 2.  For non-orientable surfaces ``a_vector`` is taken modulo
    ``(2, ..., 2)`` with first entry in ``{0, 1}``.
    """

    a_vector: tuple[int, ...]
    sigma_parity: int

    @property
    def is_zero(self) -> bool:
        return self.sigma_parity == 0 and not any(self.a_vector)


def abelianize(word: Iterable[Letter], spec: SurfaceSpec) -> AbelianClass:
    """Class of ``word`` in the exponent-sum quotient.

    >>> from .words import parse
    >>> abelianize(parse("a1"), SurfaceSpec(True, 1, 2))
    AbelianClass(a_vector=(1, 0), sigma_parity=0)
    >>> abelianize(parse("s1"), SurfaceSpec(True, 1, 2)).is_zero
    False
    """
    vec = [0] * spec.G
    parity = 0
    for x in expand_to_theorem_generators(tuple(word), spec):
        if x.kind == SIGMA:
            parity ^= 1
        elif x.kind == A1:
            vec[x.i - 1] += x.sign
        else:  # pragma: no cover - expand_to_theorem_generators only emits s and a
            raise WordError(f"unexpected letter {x} after expansion")
    if not spec.orientable:
        shift = vec[0] - vec[0] % 2
        vec = [v - shift for v in vec]
    return AbelianClass(tuple(vec), parity)


@dataclass
class SymCheck:
    n: int
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def brute_force_sym(n: int) -> SymCheck:
    """Check the transversal exhaustively on ``Sigma_n``.

    For every permutation: exponents and evaluation are mutually inverse,
    the exponent vectors are distinct, and ``epsilon`` is a section that
    fixes transversal words.

    >>> brute_force_sym(3).checked, brute_force_sym(3).ok
    (6, True)
    """
    if not 1 <= n <= 5:
        raise ValueError("brute_force_sym supports 1 <= n <= 5")
    report = SymCheck(n)
    seen: dict[tuple[int, ...], Perm] = {}
    for images in permutations(range(1, n + 1)):
        p = Perm(images)
        exps = exponents_of_perm(p).exponents
        word = transversal_word(exps)
        if perm_of_exponents(exps) != p:
            report.failures.append(f"{images}: evaluation of {exps} gives another permutation")
        if exps in seen:
            report.failures.append(f"{images}: exponents {exps} also used by {seen[exps].images}")
        seen[exps] = p
        if perm_of_word(epsilon(word, n), n) != p:
            report.failures.append(f"{images}: epsilon changes the permutation")
        if epsilon(word, n) != word:
            report.failures.append(f"{images}: epsilon does not fix its transversal word")
        report.checked += 1
    return report


Rule = tuple[Letter, Letter, Word]


@dataclass
class RuleCheck:
    spec: SurfaceSpec
    rules: int = 0
    artin_checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _disc_images_agree(lhs: Word, rhs: Word, spec: SurfaceSpec) -> bool:
    n = spec.strands
    left = artin_image(expand_to_theorem_generators(lhs, spec), n)
    right = artin_image(expand_to_theorem_generators(rhs, spec), n)
    return left.images == right.images


def check_rule_table(spec: SurfaceSpec, rows: Iterable[Rule] | None = None) -> RuleCheck:
    """Check each rule ``y x y^-1 = Z`` of the conjugation dictionary.

    * permutation: ``Z`` is a pure word, as ``y x y^-1`` is;
    * round trip: for a band rule, conjugating ``Z`` by ``y^-1`` gives back
      ``x``; for ``s_i``, conjugating once more must give
      ``T x T^-1`` with ``T = T[i,i+1] = s_i^2``, which is decided by
      combing (and so by the band rules alone);
    * disc: when ``x`` and ``Z`` are ``T``-words (and ``y`` is a sigma or a
      ``T``) both sides have the same Artin image.

    >>> check_rule_table(SurfaceSpec(True, 1, 3)).ok
    True
    """
    report = RuleCheck(spec)
    for y, x, Z in rule_table(spec) if rows is None else rows:
        report.rules += 1
        name = f"{format_letter(y)} {format_letter(x)} {format_letter(y.inverse())} = {format_word(Z)}"
        if any(z.kind not in (STRAND, TLOOP) for z in Z):
            report.failures.append(f"{name}: result is not pure")
            continue
        if y.kind == SIGMA:
            t = T(y.i, y.i + 1)
            rest = free_reduce(conj_word((y,), Z, spec) + t + (x.inverse(),) + invert(t))
            if rest and not comb(rest, spec).trivial:
                report.failures.append(f"{name}: round trip through s{y.i}^2 fails")
        else:
            back = conj_by_letter(y.inverse(), Z, spec)
            if back != (x,):
                report.failures.append(f"{name}: conjugating back by {format_letter(y.inverse())} "
                                       f"gives {format_word(back)}")
        if y.kind in (SIGMA, TLOOP) and x.kind == TLOOP and all(z.kind == TLOOP for z in Z):
            report.artin_checked += 1
            if not _disc_images_agree((y, x, y.inverse()), Z, spec):
                report.failures.append(f"{name}: Artin images differ")
    return report
