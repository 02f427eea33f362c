"""Truncated tensor algebra model of a surface group algebra.

Elements live in the free associative Q-algebra on letters a_1, a_{-1},
..., a_g, a_{-g}, truncated above a fixed degree cap.  Under the Magnus
identification alpha_i - 1 <-> a_i, this is the group algebra of a free
group modulo the (cap+1)-st power of its augmentation ideal; words are
tuples of signed generator indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .linalg import Rational, rational

Word = tuple  # tuple of nonzero ints i with 1 <= |i| <= g


class CapMismatchError(ValueError):
    """Raised when elements with different truncation caps are combined."""


def _clean(terms: Mapping, cap: int) -> dict:
    out = {}
    for w, c in terms.items():
        if len(w) > cap:
            raise ValueError(f"word {w} exceeds cap {cap}")
        q = rational(c)
        if q:
            out[tuple(w)] = q
    return out


@dataclass(frozen=True)
class AlgebraElement:
    """A finite Q-linear combination of words of length <= cap."""

    cap: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", _clean(self.terms, self.cap))

    def _check(self, other: "AlgebraElement"):
        if self.cap != other.cap:
            raise CapMismatchError(f"caps differ: {self.cap} vs {other.cap}")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) + c
        return AlgebraElement(self.cap, terms)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.cap, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, factor) -> "AlgebraElement":
        q = rational(factor)
        return AlgebraElement(self.cap, {w: c * q for w, c in self.terms.items()})

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        """Concatenation product, dropping words longer than the cap."""
        self._check(other)
        terms: dict = {}
        for w1, c1 in self.terms.items():
            room = self.cap - len(w1)
            for w2, c2 in other.terms.items():
                if len(w2) > room:
                    continue
                w = w1 + w2
                terms[w] = terms.get(w, 0) + c1 * c2
        return AlgebraElement(self.cap, terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.cap == other.cap and self.terms == other.terms

    def __hash__(self):
        raise TypeError("AlgebraElement is not hashable")

    def is_zero(self) -> bool:
        return not self.terms

    def augmentation(self) -> Rational:
        return self.terms.get((), rational(0))

    def graded_piece(self, degree: int) -> "AlgebraElement":
        return AlgebraElement(
            self.cap, {w: c for w, c in self.terms.items() if len(w) == degree})

    def max_degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)


def zero(cap: int) -> AlgebraElement:
    return AlgebraElement(cap, {})


def one(cap: int) -> AlgebraElement:
    return AlgebraElement(cap, {(): 1})


def _check_index(i: int, g: int):
    if not (1 <= abs(i) <= g):
        raise ValueError(f"generator index {i} out of range for genus {g}")


def monomial(word: Sequence[int], cap: int, g: int) -> AlgebraElement:
    """The single word a_{i_1} ... a_{i_k} as an element (Magnus lift)."""
    word = tuple(word)
    for i in word:
        _check_index(i, g)
    if len(word) > cap:
        return zero(cap)
    return AlgebraElement(cap, {word: 1})


def generator_series(i: int, exponent: int, cap: int, g: int) -> AlgebraElement:
    """Magnus expansion of the group element alpha_i^(+-1) mod I^(cap+1).

    alpha_i = 1 + a_i; the inverse expands as the geometric series
    sum_k (-1)^k a_i^k truncated at the cap.
    """
    _check_index(i, g)
    if exponent == 1:
        return AlgebraElement(cap, {(): 1, (i,): 1})
    if exponent == -1:
        return AlgebraElement(cap, {(i,) * k: (-1) ** k for k in range(cap + 1)})
    raise ValueError("exponent must be +1 or -1")


def group_word(letters: Sequence[tuple], cap: int, g: int) -> AlgebraElement:
    """Expansion of a group word given as (index, exponent) pairs."""
    out = one(cap)
    for i, e in letters:
        out = out * generator_series(i, e, cap, g)
    return out


def zeta(g: int, cap: int) -> AlgebraElement:
    """Expansion of the surface relator, the product of the commutators
    [alpha_i, alpha_{-i}] = alpha_i alpha_{-i} alpha_i^{-1} alpha_{-i}^{-1}."""
    letters = []
    for i in range(1, g + 1):
        letters += [(i, 1), (-i, 1), (i, -1), (-i, -1)]
    return group_word(letters, cap, g)


def mu(g: int, cap: int = 2) -> AlgebraElement:
    """The degree-two part of zeta - 1: sum_i sign(i) a_i a_{-i}."""
    if cap < 2:
        raise ValueError("mu needs cap >= 2")
    terms = {}
    for i in range(1, g + 1):
        terms[(i, -i)] = 1
        terms[(-i, i)] = -1
    return AlgebraElement(cap, terms)


def parse_word(text: str) -> Word:
    """Parse a comma-separated word such as '1,-1,2'."""
    text = text.strip()
    if not text:
        return ()
    return tuple(int(part) for part in text.split(","))


def format_word(word: Word) -> str:
    return ",".join(str(i) for i in word)
