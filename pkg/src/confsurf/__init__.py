"""Exact computation of configuration-space homology classes of surface
braids from a truncated surface-group algebra, with theorem-level
verification of kernel, vanishing, independence and duality statements."""

from .groupring import AlgebraElement, generator_series, monomial, mu, zeta
from .linalg import BasisIndexing, Subspace, rational
from .moriyama import (ArrangementBasisElement, HClass, delta, dimension,
                       full_basis, shuffle_product, simplex)
from .surface import SurfaceSpace, delta_surface, iota_kernel, surface_space
from .weights import (ChordDiagram, GeneratorElement, enumerate_B, insertion,
                      weight_filter)
from .dualpair import DualClass, dual_class, ehat_patterns, pair, torus_pattern
from .verify import (Verdict, ker_gr_delta, verify_independence,
                     verify_lemma_cyclic, verify_pairing, verify_theorem_A,
                     verify_theorem_C, verify_vanishing)

__all__ = [name for name in dir() if not name.startswith("_")]
