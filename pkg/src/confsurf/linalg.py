"""Exact sparse linear algebra over the rationals.

Vectors are dicts mapping basis keys to nonzero rational coefficients.
A :class:`Subspace` keeps its spanning set in reduced row echelon form
over a fixed :class:`BasisIndexing`, so rank, membership, containment
and equality are all decided exactly and canonically: two subspaces are
equal iff their stored rows are identical.

All rational arithmetic uses ``gmpy2.mpq``, which interoperates with
``fractions.Fraction`` and plain ints on input.
"""

from __future__ import annotations

import hashlib
from fractions import Fraction
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

from gmpy2 import mpq

Rational = mpq
Vector = dict  # basis key -> nonzero Rational

FORMAT_VERSION = 1


def rational(value) -> Rational:
    """Coerce an int, Fraction, mpq, or 'p/q' string to an exact rational."""
    if isinstance(value, float):
        raise TypeError("refusing to coerce a float to an exact rational")
    if isinstance(value, str):
        return mpq(Fraction(value))
    return mpq(value)


class IndexingMismatchError(ValueError):
    """Raised when vectors or subspaces over different indexings are mixed."""


class BasisIndexing:
    """An ordered finite basis, mapping hashable keys to column indices.

    The fingerprint is a stable hash of the ordered key sequence (via
    ``repr``) plus a label, used to detect mismatched serialized data.
    """

    __slots__ = ("keys", "label", "_col", "fingerprint")

    def __init__(self, keys: Iterable[Hashable], label: str = ""):
        self.keys = tuple(keys)
        self.label = label
        self._col = {k: i for i, k in enumerate(self.keys)}
        if len(self._col) != len(self.keys):
            raise ValueError("duplicate keys in basis indexing")
        h = hashlib.sha256(label.encode())
        for k in self.keys:
            h.update(repr(k).encode())
            h.update(b"\x00")
        self.fingerprint = h.hexdigest()[:16]

    def __len__(self) -> int:
        return len(self.keys)

    def __contains__(self, key) -> bool:
        return key in self._col

    def col(self, key) -> int:
        return self._col[key]

    def key(self, col: int):
        return self.keys[col]

    def columns(self, vec: Mapping) -> dict:
        """Convert a key-indexed vector to a column-indexed one."""
        out = {}
        for k, v in vec.items():
            q = rational(v)
            if q:
                out[self._col[k]] = q
        return out

    def from_columns(self, colvec: Mapping[int, Rational]) -> dict:
        return {self.keys[c]: v for c, v in colvec.items()}

    def __eq__(self, other) -> bool:
        return isinstance(other, BasisIndexing) and self.keys == other.keys

    def __hash__(self) -> int:
        return hash(self.keys)

    def __repr__(self) -> str:
        return f"BasisIndexing({len(self.keys)} keys, {self.fingerprint})"


def _addmul(target: dict, source: Mapping[int, Rational], factor: Rational):
    """target += factor * source, dropping entries that become zero."""
    for c, v in source.items():
        w = target.get(c, 0) + factor * v
        if w:
            target[c] = w
        else:
            target.pop(c, None)


def _echelon(colvecs: Iterable[Mapping[int, Rational]]):
    """Row echelon form of the given column-indexed vectors.

    Returns (pivots, rows): a sorted list of pivot columns and, for each,
    a row normalized to leading coefficient 1.  Rows are fully reduced
    against each other (RREF), so the output is canonical for the span.
    """
    pivot_rows: dict[int, dict] = {}  # pivot column -> row
    for vec in colvecs:
        row = dict(vec)
        while row:
            lead = min(row)
            if lead not in pivot_rows:
                inv = 1 / row[lead]
                pivot_rows[lead] = {c: v * inv for c, v in row.items()}
                break
            _addmul(row, pivot_rows[lead], -row[lead])
    pivots = sorted(pivot_rows)
    # back substitution: eliminate every pivot column from the other rows
    for p in reversed(pivots):
        prow = pivot_rows[p]
        for q in pivots:
            if q >= p:
                break
            row = pivot_rows[q]
            if p in row:
                _addmul(row, prow, -row[p])
    return pivots, [pivot_rows[p] for p in pivots]


class Subspace:
    """A linear subspace of Q^(indexing), stored as canonical RREF rows."""

    __slots__ = ("indexing", "pivots", "rows", "_pivot_row")

    def __init__(self, indexing: BasisIndexing, pivots: Sequence[int],
                 rows: Sequence[Mapping[int, Rational]]):
        self.indexing = indexing
        self.pivots = tuple(pivots)
        self.rows = tuple(dict(r) for r in rows)
        self._pivot_row = dict(zip(self.pivots, self.rows))

    @classmethod
    def span(cls, vectors: Iterable[Mapping], indexing: BasisIndexing) -> "Subspace":
        """The span of key-indexed vectors, echelonized deterministically."""
        pivots, rows = _echelon(indexing.columns(v) for v in vectors)
        return cls(indexing, pivots, rows)

    @classmethod
    def zero(cls, indexing: BasisIndexing) -> "Subspace":
        return cls(indexing, (), ())

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce_columns(self, colvec: Mapping[int, Rational]) -> dict:
        """Residual of a column-indexed vector after reduction mod self.

        RREF rows only have support on their own pivot plus non-pivot
        columns, so a single pass over the vector's pivot entries suffices.
        """
        out = dict(colvec)
        for c in [c for c in out if c in self._pivot_row]:
            if c in out:
                _addmul(out, self._pivot_row[c], -out[c])
        return out

    def reduce(self, vec: Mapping) -> dict:
        """Residual of a key-indexed vector after reduction mod self."""
        return self.indexing.from_columns(self.reduce_columns(self.indexing.columns(vec)))

    def member(self, vec: Mapping) -> bool:
        return not self.reduce_columns(self.indexing.columns(vec))

    def quotient_keys(self) -> tuple:
        """Keys of the non-pivot columns, indexing the quotient space."""
        pivset = set(self.pivots)
        return tuple(k for c, k in enumerate(self.indexing.keys) if c not in pivset)

    def quotient_coords(self, vec: Mapping) -> dict:
        """Coordinates of vec's class in the quotient by this subspace.

        The residual of reduction is supported on non-pivot columns only,
        which form a basis of the quotient; reduction is linear, vanishes
        exactly on members, and is the identity on non-pivot basis keys.
        """
        return self.reduce(vec)

    def basis_vectors(self) -> list:
        return [self.indexing.from_columns(r) for r in self.rows]

    def _check(self, other: "Subspace"):
        if self.indexing != other.indexing:
            raise IndexingMismatchError("subspaces over different indexings")

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        pivots, rows = _echelon(list(self.rows) + list(other.rows))
        return Subspace(self.indexing, pivots, rows)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus: echelonize [s|s] and [t|0]; rows with zero left part
        carry an intersection basis in their right part."""
        self._check(other)
        n = len(self.indexing)
        stacked = [dict(r) | {c + n: v for c, v in r.items()} for r in self.rows]
        stacked += [dict(r) for r in other.rows]
        pivots, rows = _echelon(stacked)
        inter = [{c - n: v for c, v in row.items()}
                 for p, row in zip(pivots, rows) if p >= n]
        pivots2, rows2 = _echelon(inter)
        return Subspace(self.indexing, pivots2, rows2)

    def contains(self, other: "Subspace") -> bool:
        self._check(other)
        return all(not self.reduce_columns(r) for r in other.rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.indexing == other.indexing and self.pivots == other.pivots
                and self.rows == other.rows)

    def __hash__(self):
        raise TypeError("Subspace is not hashable")

    def __repr__(self) -> str:
        return f"Subspace(rank {self.rank} in dim {len(self.indexing)})"

    def save(self, path):
        """Serialize to a text file with format version and fingerprint."""
        with open(path, "w") as fh:
            fh.write(f"subspace-v{FORMAT_VERSION}\n")
            fh.write(f"indexing {self.indexing.fingerprint}\n")
            fh.write(f"rows {self.rank}\n")
            for row in self.rows:
                parts = [f"{c}:{v.numerator}/{v.denominator}"
                         for c, v in sorted(row.items())]
                fh.write(" ".join(parts) + "\n")

    @classmethod
    def load(cls, path, indexing: BasisIndexing) -> "Subspace":
        with open(path) as fh:
            header = fh.readline().strip()
            if header != f"subspace-v{FORMAT_VERSION}":
                raise ValueError(f"unsupported subspace format: {header!r}")
            tag, fp = fh.readline().split()
            if tag != "indexing" or fp != indexing.fingerprint:
                raise IndexingMismatchError("serialized subspace has a different indexing")
            tag, count = fh.readline().split()
            rows = []
            for _ in range(int(count)):
                row = {}
                for part in fh.readline().split():
                    c, frac = part.split(":")
                    row[int(c)] = mpq(Fraction(frac))
                rows.append(row)
        pivots = [min(r) for r in rows]
        return cls(indexing, pivots, rows)


def relation_basis(colvecs: Sequence[Mapping[int, Rational]], ncols: int,
                   modulo: Subspace | None = None) -> list[dict]:
    """Left kernel of a list of column-indexed vectors, optionally mod a subspace.

    Returns vectors c (dicts over positions 0..len(colvecs)-1) spanning
    { c : sum_i c_i * colvecs[i] lies in modulo }.  Works by echelonizing
    augmented rows [v_i | e_i]; a row whose leading column falls in the
    augmented block has zero ambient part, so its augmented part is a
    relation, and dimension count shows these span the whole kernel.
    """
    pivot_rows: dict[int, dict] = {}
    if modulo is not None:
        for row in modulo.rows:
            pivot_rows[min(row)] = dict(row)
    relations = []
    for i, vec in enumerate(colvecs):
        row = dict(vec)
        row[ncols + i] = mpq(1)
        while True:
            lead = min(row)
            if lead >= ncols:
                inv = 1 / row[lead]
                relations.append({c - ncols: v * inv for c, v in row.items()})
                break
            if lead not in pivot_rows:
                inv = 1 / row[lead]
                pivot_rows[lead] = {c: v * inv for c, v in row.items()}
                break
            _addmul(row, pivot_rows[lead], -row[lead])
    return relations
