"""Letters, words and the free-group plumbing shared by every other module.

A word is a plain tuple of :class:`Letter` values.  Letters come from five
layered alphabets::

    s<i>        Sigma(i)        classical braid generator sigma_i
    a<r>        A1(r)           surface generator a_r (alias of a[1,r])
    a[<i>,<r>]  AStrand(i, r)   strand i crosses wall r
    T[<j>,<k>]  TLoop(j, k)     strand j encircles strands j+1..k
    A[<j>,<r>]  ABand(j, r)     band generator of strand j

Every token may carry an exponent ``^<nonzero integer>`` which expands to
repeated letters at parse time.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, NamedTuple, Sequence

SIGMA = "s"
A1 = "a1"
STRAND = "a"
TLOOP = "T"
BAND = "A"

KINDS = (SIGMA, A1, STRAND, TLOOP, BAND)
PURE_KINDS = frozenset({STRAND, TLOOP})


class WordError(ValueError):
    """Base class for malformed words."""


class ParseError(WordError):
    """Raised when text does not follow the word grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class RangeError(WordError):
    """Raised when a letter's indices are invalid for the active surface."""


class MissingMappingError(KeyError):
    """Raised by :func:`substitute` when a letter has no image."""


@dataclass(frozen=True)
class SurfaceSpec:
    """A closed surface together with a strand count.

    ``genus`` counts handles for orientable surfaces and cross-caps for
    non-orientable ones.  The sphere and the projective plane are excluded.
    """

    orientable: bool
    genus: int
    strands: int

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("strand count must be at least 1")
        if self.orientable and self.genus < 1:
            raise ValueError("orientable surfaces need genus >= 1")
        if not self.orientable and self.genus < 2:
            raise ValueError("non-orientable surfaces need genus >= 2")

    @property
    def n(self) -> int:
        return self.strands

    @property
    def G(self) -> int:
        """Number of surface generators per strand."""
        return 2 * self.genus if self.orientable else self.genus

    def __str__(self):
        kind = "or" if self.orientable else "non"
        return f"{kind}(g={self.genus}, n={self.strands})"


class Letter(NamedTuple):
    """One signed generator.  ``i``/``j`` hold the indices (0 when unused)."""

    kind: str
    i: int
    j: int = 0
    sign: int = 1

    def inverse(self) -> "Letter":
        return Letter(self.kind, self.i, self.j, -self.sign)

    @property
    def generator(self) -> "Letter":
        """The positive letter with the same generator."""
        return self if self.sign == 1 else Letter(self.kind, self.i, self.j, 1)

    def canonical(self) -> "Letter":
        """Map the ``a<r>`` alias onto ``a[1,r]``."""
        if self.kind == A1:
            return Letter(STRAND, 1, self.i, self.sign)
        return self

    def __str__(self):
        return format_letter(self)


Word = tuple  # tuple[Letter, ...]


def sigma(i: int, sign: int = 1) -> Letter:
    return Letter(SIGMA, i, 0, sign)


def a1(r: int, sign: int = 1) -> Letter:
    return Letter(A1, r, 0, sign)


def strand(i: int, r: int, sign: int = 1) -> Letter:
    return Letter(STRAND, i, r, sign)


def tloop(j: int, k: int, sign: int = 1) -> Letter:
    return Letter(TLOOP, j, k, sign)


def band(j: int, r: int, sign: int = 1) -> Letter:
    return Letter(BAND, j, r, sign)


def _same_generator(x: Letter, y: Letter) -> bool:
    if x.kind == y.kind:
        return x.i == y.i and x.j == y.j
    return x.canonical()[:3] == y.canonical()[:3]


def free_reduce(word: Iterable[Letter]) -> Word:
    """Cancel adjacent ``x x^-1`` pairs until none remain.

    >>> format_word(free_reduce(parse("s1 s2 s2^-1 s1")))
    's1 s1'
    """
    out: list[Letter] = []
    for x in word:
        if out:
            top = out[-1]
            if top.sign == -x.sign and _same_generator(top, x):
                out.pop()
                continue
        out.append(x)
    return tuple(out)


def is_freely_reduced(word: Sequence[Letter]) -> bool:
    return all(
        not (u.sign == -v.sign and _same_generator(u, v))
        for u, v in zip(word, word[1:])
    )


def invert(word: Sequence[Letter]) -> Word:
    return tuple(x.inverse() for x in reversed(word))


def concat(*words: Sequence[Letter]) -> Word:
    out: list[Letter] = []
    for w in words:
        out.extend(w)
    return tuple(out)


def power(word: Sequence[Letter], e: int) -> Word:
    if e < 0:
        return tuple(invert(word)) * (-e)
    return tuple(word) * e


def substitute(
    word: Iterable[Letter],
    table: Mapping[Letter, Sequence[Letter]] | Callable[[Letter], Sequence[Letter] | None],
) -> Word:
    """Replace every letter by its image; inverse letters get the inverse image.

    ``table`` maps *positive* letters to words, either as a mapping or as a
    callable returning ``None`` for letters it does not know.  No free
    reduction is performed.
    """
    lookup = table.get if isinstance(table, Mapping) else table
    out: list[Letter] = []
    for x in word:
        image = lookup(x.generator)
        if image is None:
            raise MissingMappingError(f"no image for letter {format_letter(x.generator)}")
        out.extend(image if x.sign == 1 else invert(image))
    return tuple(out)


def substitute_some(word: Iterable[Letter], func: Callable[[Letter], Sequence[Letter] | None]) -> Word:
    """Like :func:`substitute` but letters without an image are kept."""
    out: list[Letter] = []
    for x in word:
        image = func(x.generator)
        if image is None:
            out.append(x)
        elif x.sign == 1:
            out.extend(image)
        else:
            out.extend(invert(image))
    return tuple(out)


# ---------------------------------------------------------------- validation

def check_letter(x: Letter, spec: SurfaceSpec) -> None:
    """Raise :class:`RangeError` unless ``x`` is a valid letter for ``spec``."""
    n, G = spec.strands, spec.G
    kind = x.kind
    if kind == SIGMA:
        ok = 1 <= x.i <= n - 1
    elif kind == A1:
        ok = 1 <= x.i <= G
    elif kind in (STRAND, BAND):
        ok = 1 <= x.i <= n and 1 <= x.j <= G
    elif kind == TLOOP:
        ok = 1 <= x.i <= x.j <= n
    else:
        raise RangeError(f"unknown letter kind {kind!r}")
    if not ok or x.sign not in (1, -1):
        raise RangeError(f"letter {format_letter(x)} out of range for {spec}")


def check_word(word: Iterable[Letter], spec: SurfaceSpec) -> None:
    for x in word:
        check_letter(x, spec)


# --------------------------------------------------------------------- codec

_TOKEN = re.compile(
    r"""
    (?:
        (?P<sigma>s(?P<si>\d+))
      | (?P<bracket>(?P<bk>[aTA])\[\s*(?P<b1>\d+)\s*,\s*(?P<b2>\d+)\s*\])
      | (?P<a1>a(?P<ar>\d+))
    )
    (?:\^(?P<exp>[+-]?\d+))?
    $""",
    re.VERBOSE,
)


def parse(text: str, spec: SurfaceSpec | None = None) -> Word:
    """Parse whitespace-separated tokens into a word.

    >>> parse("s1 a2^-1")
    (Letter(kind='s', i=1, j=0, sign=1), Letter(kind='a1', i=2, j=0, sign=-1))
    """
    letters: list[Letter] = []
    for match in re.finditer(r"\S+", text):
        token, pos = match.group(), match.start()
        m = _TOKEN.match(token)
        if m is None:
            raise ParseError(f"bad token {token!r}", pos)
        exp = int(m["exp"]) if m["exp"] is not None else 1
        if exp == 0:
            raise ParseError(f"zero exponent in {token!r}", pos)
        if m["sigma"]:
            letter = sigma(int(m["si"]))
            indices = (letter.i,)
        elif m["bracket"]:
            kind = {"a": STRAND, "T": TLOOP, "A": BAND}[m["bk"]]
            letter = Letter(kind, int(m["b1"]), int(m["b2"]))
            indices = (letter.i, letter.j)
        else:
            letter = a1(int(m["ar"]))
            indices = (letter.i,)
        if min(indices) < 1:
            raise ParseError(f"index below 1 in {token!r}", pos)
        if letter.kind == TLOOP and letter.i >= letter.j:
            raise ParseError(f"T[j,k] needs j < k in {token!r}", pos)
        if spec is not None:
            check_letter(letter, spec)
        if exp < 0:
            letter = letter.inverse()
        letters.extend([letter] * abs(exp))
    return tuple(letters)


def format_letter(x: Letter) -> str:
    if x.kind == SIGMA:
        base = f"s{x.i}"
    elif x.kind == A1:
        base = f"a{x.i}"
    else:
        base = f"{x.kind}[{x.i},{x.j}]"
    return base if x.sign == 1 else base + "^-1"


def format_word(word: Iterable[Letter]) -> str:
    return " ".join(format_letter(x) for x in word)


def tokens(word: Iterable[Letter]) -> list[str]:
    return [format_letter(x) for x in word]


def canonicalize(word: Iterable[Letter]) -> Word:
    """Replace ``a<r>`` aliases by ``a[1,r]``."""
    return tuple(x.canonical() for x in word)


def erase_trivial_loops(word: Iterable[Letter]) -> Word:
    """Drop ``T[i,i]`` letters, which stand for the trivial braid."""
    return tuple(x for x in word if not (x.kind == TLOOP and x.i == x.j))
