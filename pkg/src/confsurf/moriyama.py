"""Homology of configuration spaces of a punctured surface.

The surface deformation retracts onto a wedge of 2g circles (cells),
listed in the canonical order 1, -1, 2, -2, ..., g, -g.  Top homology of
the configuration space of n labelled particles has a basis indexed by
arrangements: assignments of the particle labels to cells together with
a linear order of the particles inside each cell.  Classes are stored as
sparse rational combinations of such arrangements.

Also provided: the exterior (shuffle) product of classes on disjoint
label sets, and the chain map delta sending a truncated group-algebra
element to the class traced out by n particles moving along it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations, product

from .groupring import AlgebraElement, Word
from .linalg import BasisIndexing, Rational, rational


def cell_position(i: int) -> int:
    """Position of cell i in the canonical order 1,-1,2,-2,...,g,-g."""
    if i == 0:
        raise ValueError("cell index must be nonzero")
    return 2 * (abs(i) - 1) + (0 if i > 0 else 1)


def canonical_cells(g: int) -> tuple:
    out = []
    for j in range(1, g + 1):
        out += [j, -j]
    return tuple(out)


@dataclass(frozen=True)
class ArrangementBasisElement:
    """Particles distributed over the 2g cells, ordered within each cell.

    blocks[p] is the tuple of particle labels on the cell at canonical
    position p, in their order along the cell.
    """

    g: int
    blocks: tuple

    def __post_init__(self):
        if len(self.blocks) != 2 * self.g:
            raise ValueError("need one block per cell")
        object.__setattr__(self, "blocks", tuple(tuple(b) for b in self.blocks))

    def block(self, cell: int) -> tuple:
        return self.blocks[cell_position(cell)]

    def labels(self) -> frozenset:
        return frozenset(l for b in self.blocks for l in b)

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def sort_key(self):
        # occupied cells compare before empty ones, so the first basis
        # element puts all particles on cell 1
        return tuple((not b, b) for b in self.blocks)


def make_arrangement(g: int, cell_blocks: dict) -> ArrangementBasisElement:
    """Build an arrangement from a mapping cell index -> label sequence."""
    blocks = [()] * (2 * g)
    for cell, labels in cell_blocks.items():
        blocks[cell_position(cell)] = tuple(labels)
    return ArrangementBasisElement(g, tuple(blocks))


@dataclass(frozen=True)
class HClass:
    """A homology class: sparse combination of arrangements of a fixed
    label set on a genus-g wedge of cells."""

    g: int
    labels: frozenset
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for e, c in self.terms.items():
            if e.g != self.g or e.labels() != self.labels:
                raise ValueError("arrangement does not match class labels")
            q = rational(c)
            if q:
                clean[e] = q
        object.__setattr__(self, "terms", clean)

    def __add__(self, other: "HClass") -> "HClass":
        if self.g != other.g or self.labels != other.labels:
            raise ValueError("cannot add classes over different labels or genus")
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return HClass(self.g, self.labels, terms)

    def __neg__(self) -> "HClass":
        return HClass(self.g, self.labels, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "HClass") -> "HClass":
        return self + (-other)

    def scale(self, factor) -> "HClass":
        q = rational(factor)
        return HClass(self.g, self.labels, {e: c * q for e, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, HClass):
            return NotImplemented
        return (self.g == other.g and self.labels == other.labels
                and self.terms == other.terms)

    def __hash__(self):
        raise TypeError("HClass is not hashable")

    def is_zero(self) -> bool:
        return not self.terms


def zero_class(labels, g: int) -> HClass:
    return HClass(g, frozenset(labels), {})


def basis_class(element: ArrangementBasisElement) -> HClass:
    return HClass(element.g, element.labels(), {element: 1})


def simplex(cell: int, labels, g: int) -> HClass:
    """The class of all particles in `labels` on one cell, in label order."""
    return basis_class(make_arrangement(g, {cell: tuple(labels)}))


def signed_shuffles(a: tuple, b: tuple):
    """Yield (sign, merged) over all shuffles of a and b, where the sign
    is the parity of the number of crossed pairs (one from each factor)."""
    la, lb = len(a), len(b)
    for pos in combinations(range(la + lb), la):
        merged = [None] * (la + lb)
        inversions = 0
        for rank, p in enumerate(pos):
            merged[p] = a[rank]
            inversions += p - rank  # b-entries preceding this a-entry
        it = iter(b)
        for q in range(la + lb):
            if merged[q] is None:
                merged[q] = next(it)
        yield (-1) ** inversions, tuple(merged)


def shuffle_product(x: HClass, y: HClass) -> HClass:
    """Exterior product of classes on disjoint label sets.

    Per arrangement pair the factor blocks are interleaved cell by cell:
    blocks sharing a cell combine through all signed shuffles, and a
    Koszul sign accounts for moving each block of y past every block of
    x sitting on a later cell.
    """
    if x.g != y.g:
        raise ValueError("genus mismatch")
    if x.labels & y.labels:
        raise ValueError("label sets must be disjoint")
    g = x.g
    terms: dict = {}
    for ex, cx in x.terms.items():
        x_sizes = [(p, len(b)) for p, b in enumerate(ex.blocks) if b]
        for ey, cy in y.terms.items():
            koszul = 0
            for py, by in enumerate(ey.blocks):
                if by:
                    koszul += len(by) * sum(s for p, s in x_sizes if p > py)
            base = cx * cy * (-1) ** koszul
            shared = [p for p in range(2 * g) if ex.blocks[p] and ey.blocks[p]]
            merged = [ex.blocks[p] or ey.blocks[p] for p in range(2 * g)]
            choices = [list(signed_shuffles(ex.blocks[p], ey.blocks[p]))
                       for p in shared]
            for combo in product(*choices):
                blocks = list(merged)
                sign = 1
                for p, (s, block) in zip(shared, combo):
                    blocks[p] = block
                    sign *= s
                e = ArrangementBasisElement(g, tuple(blocks))
                terms[e] = terms.get(e, 0) + base * sign
    return HClass(g, x.labels | y.labels, terms)


def ordered_block_product(factors, g: int):
    """Normal form of a product of simplex blocks given as (cell, labels)
    pairs, without interleaving: same-cell blocks concatenate in the given
    factor order, and the Koszul sign counts the block-dimension products
    of the transpositions that sort the factors into canonical cell order.

    Agrees with shuffle_product on factors with pairwise distinct cells.
    Returns (sign, ArrangementBasisElement).
    """
    items = [(cell_position(cell), tuple(labels)) for cell, labels in factors]
    sign = 1
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if items[i][0] > items[j][0]:
                sign *= (-1) ** (len(items[i][1]) * len(items[j][1]))
    blocks = [()] * (2 * g)
    for p, labels in sorted(items, key=lambda it: it[0]):
        blocks[p] = blocks[p] + labels
    return sign, ArrangementBasisElement(g, tuple(blocks))


def _compositions(n: int, k: int):
    """All k-tuples of positive ints summing to n, lexicographically."""
    for cuts in combinations(range(1, n), k - 1):
        bounds = (0,) + cuts + (n,)
        yield tuple(bounds[j + 1] - bounds[j] for j in range(k))


@lru_cache(maxsize=None)
def _delta_word(word: Word, labels: tuple, g: int) -> HClass:
    n = len(labels)
    k = len(word)
    if n == 0:
        # H of the empty configuration space is Q; words of positive
        # degree lie in the augmentation ideal and map to zero
        e = ArrangementBasisElement(g, ((),) * (2 * g))
        return basis_class(e) if k == 0 else zero_class((), g)
    if k == 0 or k > n:
        return zero_class(labels, g)
    out = zero_class(labels, g)
    for comp in _compositions(n, k):
        pos = 0
        term = None
        for j in range(k):
            run = labels[pos:pos + comp[j]]
            pos += comp[j]
            factor = simplex(word[j], run, g)
            term = factor if term is None else shuffle_product(term, factor)
        out = out + term
    return out


def delta(x: AlgebraElement, labels, g: int) -> HClass:
    """The class traced out by particles labels[0], labels[1], ... moving
    in this order along x, as a combination of arrangements.

    A word of length k spreads the n particles over its k letters in all
    ways that keep their order and give each letter at least one particle.
    """
    labels = tuple(labels)
    if len(set(labels)) != len(labels):
        raise ValueError("labels must be distinct")
    out = zero_class(labels, g)
    for word, coeff in x.terms.items():
        piece = _delta_word(word, labels, g)
        if not piece.is_zero():
            out = out + piece.scale(coeff)
    return out


def dimension(n: int, g: int) -> int:
    """dim of top homology: the rising factorial 2g (2g+1) ... (2g+n-1)."""
    out = 1
    for j in range(n):
        out *= 2 * g + j
    return out


def arrangements(labels, g: int):
    """All arrangements of the given labels, in the canonical sort order."""
    labels = tuple(sorted(labels))
    n = len(labels)
    found = []
    for assignment in product(range(2 * g), repeat=n):
        cells: dict = {}
        for lab, p in zip(labels, assignment):
            cells.setdefault(p, []).append(lab)
        per_cell = [permutations(cells[p]) for p in sorted(cells)]
        positions = sorted(cells)
        for combo in product(*per_cell):
            blocks = [()] * (2 * g)
            for p, block in zip(positions, combo):
                blocks[p] = tuple(block)
            found.append(ArrangementBasisElement(g, tuple(blocks)))
    found.sort(key=ArrangementBasisElement.sort_key)
    return found


@lru_cache(maxsize=None)
def full_basis(n: int, g: int) -> BasisIndexing:
    """Indexing of all arrangements of particles 1..n, deterministic."""
    elems = arrangements(range(1, n + 1), g)
    assert len(elems) == dimension(n, g)
    return BasisIndexing(elems, label=f"arrangements n={n} g={g}")


def parse_arrangement(text: str, g: int) -> ArrangementBasisElement:
    """Parse e.g. '1:(1,2);-1:(3)' into an arrangement."""
    cell_blocks = {}
    text = text.strip()
    if text:
        for part in text.split(";"):
            cell, block = part.split(":")
            body = block.strip().strip("()")
            labels = tuple(int(x) for x in body.split(",")) if body else ()
            cell_blocks[int(cell)] = labels
    return make_arrangement(g, cell_blocks)


def format_arrangement(e: ArrangementBasisElement) -> str:
    parts = []
    for p, block in enumerate(e.blocks):
        if block:
            cell = canonical_cells(e.g)[p]
            parts.append(f"{cell}:({','.join(str(x) for x in block)})")
    return ";".join(parts)
