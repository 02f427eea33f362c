"""Configuration-space homology of a closed surface, as a quotient.

Filling in the puncture kills the classes where some subset of the
particles runs along the boundary relator while the rest sit in an
arbitrary arrangement.  This module builds that relation subspace,
presents closed-surface classes as quotient coordinates (values on the
non-pivot arrangements), and pushes delta through the quotient.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import combinations, permutations

from .groupring import AlgebraElement, zeta
from .linalg import BasisIndexing, Subspace, rational
from .moriyama import (HClass, arrangements, basis_class, delta, dimension,
                       full_basis, shuffle_product, zero_class)


class ResourceGuardError(RuntimeError):
    """Raised when a computation would exceed a configured size ceiling."""


def guard_dimension(n: int, g: int, max_dim: int | None):
    if max_dim is not None and dimension(n, g) > max_dim:
        raise ResourceGuardError(
            f"ambient dimension {dimension(n, g)} exceeds ceiling {max_dim}")


def zeta_class(labels, g: int) -> HClass:
    """delta of the boundary relator on the given ordered labels."""
    labels = tuple(labels)
    return delta(zeta(g, len(labels)), labels, g)


def iota_kernel_vectors(n: int, g: int):
    """Spanning set of the relation subspace, in deterministic order.

    For every subset I of the labels with |I| >= 2, every ordering of I,
    and every arrangement of the complementary labels, the product of
    the relator class on I with that arrangement dies in the closed
    surface.  (|I| < 2 contributes nothing: zeta = 1 mod degree 2.)
    """
    labels = tuple(range(1, n + 1))
    for size in range(2, n + 1):
        for subset in combinations(labels, size):
            for ordering in permutations(subset):
                zc = zeta_class(ordering, g)
                if zc.is_zero():
                    continue
                rest = tuple(l for l in labels if l not in subset)
                if not rest:
                    yield zc
                    continue
                for arr in arrangements(rest, g):
                    yield shuffle_product(zc, basis_class(arr))


def iota_kernel(n: int, g: int, max_dim: int | None = None) -> Subspace:
    guard_dimension(n, g, max_dim)
    indexing = full_basis(n, g)
    return Subspace.span((v.terms for v in iota_kernel_vectors(n, g)), indexing)


@dataclass
class SurfaceSpace:
    """Ambient indexing, relation subspace and quotient data for (n, g)."""

    n: int
    g: int
    indexing: BasisIndexing
    kernel: Subspace
    quotient_indexing: BasisIndexing = field(init=False)

    def __post_init__(self):
        self.quotient_indexing = BasisIndexing(
            self.kernel.quotient_keys(),
            label=f"surface quotient n={self.n} g={self.g}")

    @property
    def quotient_dim(self) -> int:
        return len(self.quotient_indexing)

    def project(self, x: HClass) -> dict:
        """Quotient coordinates of a punctured-surface class."""
        if x.g != self.g or x.labels != frozenset(range(1, self.n + 1)):
            raise ValueError("class does not live in this space")
        return self.kernel.quotient_coords(x.terms)


_SPACES: dict = {}


def surface_space(n: int, g: int, cache_dir: str | None = None,
                  max_dim: int | None = None) -> SurfaceSpace:
    """Build (or recall) the surface quotient for (n, g).

    The relation subspace is memoized in-process and, when cache_dir is
    given, persisted to disk keyed by parameters and format version.
    """
    key = (n, g)
    if key in _SPACES:
        return _SPACES[key]
    guard_dimension(n, g, max_dim)
    indexing = full_basis(n, g)
    kernel = None
    path = None
    if cache_dir:
        os.makedirs(cache_dir, exist_ok=True)
        path = os.path.join(cache_dir, f"iota-kernel-n{n}-g{g}.sub")
        if os.path.exists(path):
            try:
                kernel = Subspace.load(path, indexing)
            except ValueError:
                # stale format version or foreign indexing: recompute
                kernel = None
    if kernel is None:
        kernel = iota_kernel(n, g, max_dim=max_dim)
        if path:
            kernel.save(path)
    space = SurfaceSpace(n, g, indexing, kernel)
    _SPACES[key] = space
    return space


def clear_space_cache():
    _SPACES.clear()


def delta_surface(x: AlgebraElement, space: SurfaceSpace) -> dict:
    """Quotient coordinates of delta(x) on particles 1..n."""
    return space.project(delta(x, range(1, space.n + 1), space.g))
