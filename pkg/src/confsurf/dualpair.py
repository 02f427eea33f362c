"""Dual homology classes and the intersection pairing.

A generator element b of degree s with r chords and s + r = n has a
dual class: a signed combination of arrangements recording the
transversal intersections of a product of r handle-pair membranes and
s - 2r dual tori with the configuration components.  Each membrane
contributes six local intersection patterns on the handle pair
(2j-1, 2j); each torus contributes a single positive intersection on
its cell.  The pairing of an HClass against a dual class is the
coefficient-wise dot product.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .linalg import Rational, rational
from .moriyama import ArrangementBasisElement, HClass, ordered_block_product
from .weights import GeneratorElement


@dataclass(frozen=True)
class LocalPattern:
    """A signed product of simplex blocks: (cell, ordered labels) pairs
    with distinct cells and distinct labels."""

    sign: int
    factors: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "factors",
            tuple((cell, tuple(labels)) for cell, labels in self.factors))
        cells = [c for c, _ in self.factors]
        labels = [l for _, ls in self.factors for l in ls]
        if len(set(cells)) != len(cells) or len(set(labels)) != len(labels):
            raise ValueError("pattern cells and labels must be distinct")


# The six signed intersection patterns of one membrane with the
# configuration components, on placeholder particles (1, 2, 3) and the
# handle cells (+1, -1).  Rows (1), (1)': both orders of the two-particle
# block on the positive cell, sign +1; rows (2), (3): particle 1 alone on
# the positive cell, sign -1; rows (2)', (3)': particle 2 alone, sign -1.
_MEMBRANE_TABLE = (
    (+1, ((1, (1, 2)), (-1, (3,)))),
    (+1, ((1, (2, 1)), (-1, (3,)))),
    (-1, ((1, (1,)), (-1, (2, 3)))),
    (-1, ((1, (1,)), (-1, (3, 2)))),
    (-1, ((1, (2,)), (-1, (1, 3)))),
    (-1, ((1, (2,)), (-1, (3, 1)))),
)


def ehat_patterns(particles, j: int, g: int) -> list:
    """The six local patterns of the j-th membrane, with the placeholder
    particles (1, 2, 3) renamed to `particles` and the handle cells
    renamed to +-(2j - 1)."""
    p1, p2, p3 = particles
    if len({p1, p2, p3}) != 3:
        raise ValueError("particles must be distinct")
    if 2 * j > g:
        raise ValueError(f"membrane {j} needs genus >= {2 * j}")
    rename = {1: p1, 2: p2, 3: p3}
    cell = 2 * j - 1
    out = []
    for sign, factors in _MEMBRANE_TABLE:
        out.append(LocalPattern(sign, tuple(
            (cell if c > 0 else -cell, tuple(rename[p] for p in labels))
            for c, labels in factors)))
    return out


def torus_pattern(particle: int, cell: int) -> LocalPattern:
    """The single positive intersection of a dual torus with the cell."""
    if cell == 0:
        raise ValueError("cell index must be nonzero")
    return LocalPattern(+1, ((cell, (particle,)),))


@dataclass(frozen=True)
class DualClass:
    n: int
    g: int
    entries: dict

    def __post_init__(self):
        clean = {}
        for e, c in self.entries.items():
            q = rational(c)
            if q:
                clean[e] = q
        object.__setattr__(self, "entries", clean)

    def __hash__(self):
        raise TypeError("DualClass is not hashable")


def dual_class(b: GeneratorElement, n: int, g: int) -> DualClass:
    """The dual class of a nonconsecutive generator element with s + r = n.

    Particles 1..n map onto the slots of b by the nondecreasing surjection
    that doubles every chord start; each chord j gets the six membrane
    patterns on its three particles (the two preimages of k_j and the
    preimage of l_j), and each free slot gets a torus factor placing its
    particle on the cell of the slot's monomial letter.  Every choice of
    one pattern per chord assembles into a single signed arrangement;
    torus factors that share a cell stack in particle order, recording
    intersections with disjoint parallel copies of the same dual curve.
    """
    s, r = b.s, b.r
    if s + r != n:
        raise ValueError("dual classes need s + r = n")
    if not b.diagram.is_nonconsecutive():
        raise ValueError("diagram must be nonconsecutive")
    if g < n:
        raise ValueError("dual classes need g >= n")
    if any(i <= g - (s - 2 * r) for i in b.monomial):
        raise ValueError("monomial letters must lie in the positive window")

    # particle intervals of the surjection [n] -> [s]: chord starts get two
    # preimages, every other slot gets one
    start = {}
    pos = 1
    ks = set(b.diagram.ks)
    for slot in range(1, s + 1):
        start[slot] = pos
        pos += 2 if slot in ks else 1
    free = [slot for slot in range(1, s + 1)
            if slot not in ks and slot not in set(b.diagram.ls)]
    torus_factors = [torus_pattern(start[slot], letter)
                     for slot, letter in zip(free, b.monomial)]

    per_chord = []
    for j in range(1, r + 1):
        k, l = b.diagram.ks[j - 1], b.diagram.ls[j - 1]
        particles = (start[k], start[k] + 1, start[l])
        per_chord.append(ehat_patterns(particles, j, g))

    entries: dict = {}
    for choice in product(*per_chord):
        sign = 1
        factors = []
        for pat in choice:
            sign *= pat.sign
            factors.extend(pat.factors)
        for pat in torus_factors:
            sign *= pat.sign
            factors.extend(pat.factors)
        ksign, element = ordered_block_product(factors, g)
        q = entries.get(element, 0) + sign * ksign
        if q:
            entries[element] = q
        else:
            entries.pop(element, None)
    return DualClass(n, g, entries)


def pair(x: HClass, D: DualClass) -> Rational:
    """Intersection pairing: coefficient-wise dot product."""
    if x.g != D.g:
        raise ValueError("genus mismatch")
    total = rational(0)
    for e, c in x.terms.items():
        d = D.entries.get(e)
        if d is not None:
            total += c * d
    return total


def pair_coords(coords: dict, D: DualClass) -> Rational:
    """Pairing against quotient or ambient coordinates given as a plain
    mapping ArrangementBasisElement -> Rational."""
    total = rational(0)
    for e, c in coords.items():
        d = D.entries.get(e)
        if d is not None:
            total += rational(c) * d
    return total
