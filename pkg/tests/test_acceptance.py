"""Acceptance suite: one test per headline property, exact arithmetic.

Each test is a self-contained pass/fail check of one verified statement,
from ring sanity up to the perfect-pairing and determinism guarantees.
Everything runs on exact rationals; there are no tolerances anywhere.
"""

import random

import pytest

from confsurf.groupring import generator_series, mu, one, zeta
from confsurf.linalg import Subspace
from confsurf.moriyama import (arrangements, basis_class, delta, dimension,
                               full_basis, shuffle_product)
from confsurf.surface import clear_space_cache, surface_space, delta_surface
from confsurf.verify import (STATUS_CONTAINED, STATUS_EQUAL, _word_lift,
                             cross_check, verify_independence,
                             verify_lemma_cyclic, verify_pairing,
                             verify_theorem_A, verify_theorem_C,
                             verify_vanishing)
from confsurf.weights import all_words, enumerate_B, generator_lift


def test_criterion_01_ring_sanity():
    # inverses cancel at every cap, and multiplication associates
    for g in (1, 2, 3, 4):
        for i in range(-g, g + 1):
            if i == 0:
                continue
            for cap in range(1, 7):
                prod = (generator_series(i, 1, cap, g)
                        * generator_series(i, -1, cap, g))
                assert prod == one(cap)
    rng = random.Random(42)
    cap, g = 3, 2
    letters = [1, -1, 2, -2]
    for _ in range(100):
        x, y, z = (generator_series(rng.choice(letters), rng.choice((1, -1)),
                                    cap, g) for _ in range(3))
        assert (x * y) * z == x * (y * z)


def test_criterion_02_relator_expansion():
    # the relator is 1 + (symplectic element) + higher order
    for g in (1, 2, 3, 4):
        z = zeta(g, 3)
        assert z.graded_piece(1).is_zero()
        assert z.graded_piece(2) == mu(g, 3)


def test_criterion_03_top_injectivity():
    # on the punctured surface, the degree-n word classes are independent:
    # rank (2g)^n inside the arrangement space of dimension 2g...(2g+n-1)
    for g, n in [(1, 2), (2, 2), (2, 3)]:
        idx = full_basis(n, g)
        assert len(idx) == dimension(n, g)
        vectors = [delta(_word_lift(w, n), range(1, n + 1), g).terms
                   for w in all_words(n, g)]
        assert Subspace.span(vectors, idx).rank == (2 * g) ** n


def test_criterion_04_shuffle_algebra():
    # graded commutativity and associativity on random basis classes
    rng = random.Random(1234)
    g = 2
    arr1 = arrangements([1], g)
    arr2 = arrangements([2], g)
    arr34 = arrangements([3, 4], g)
    for _ in range(200):
        x = basis_class(rng.choice(arr1))
        y = basis_class(rng.choice(arr2))
        z = basis_class(rng.choice(arr34))
        assert shuffle_product(x, y) == shuffle_product(y, x).scale(-1)
        assert shuffle_product(x, z) == shuffle_product(z, x).scale(1)
        assert (shuffle_product(shuffle_product(x, y), z)
                == shuffle_product(x, shuffle_product(y, z)))


def test_criterion_05_top_kernel_theorem():
    # degree-n kernel of the graded surface map = weight <= n-2 image
    for n, g in [(3, 2), (3, 3), (4, 3)]:
        v = verify_theorem_A(n, g)
        assert v.status == STATUS_EQUAL, (n, g, v.status, v.tags)


def test_criterion_06_lower_degree_kernel_theorem():
    # k < 2(n+1)/3 injective; at the threshold the kernel is the
    # weight <= 3k-2(n+1) image
    for k in (1, 2):
        v = verify_theorem_C(k, 3, 3)
        assert v.status == STATUS_EQUAL, (k, v.tags)
        assert v.dims["kernel_rank"] == 0
    v = verify_theorem_C(3, 3, 3)
    assert v.status == STATUS_EQUAL, v.tags
    assert v.params["w"] == 1
    v = verify_theorem_C(4, 4, 4)
    assert v.status == STATUS_EQUAL, v.tags
    assert v.params["w"] == 2


def test_criterion_07_vanishing_with_sharp_boundary():
    # every insertion image with s + r >= n + 1 dies on the closed
    # surface; the lift of the symplectic element marks the boundary:
    # it dies for n <= 2 and survives for every n >= 3 (its total weight
    # is s + r = 3, so the vanishing range n + 1 <= 3 ends at n = 2)
    for n, g in [(3, 2), (3, 3), (4, 3)]:
        v = verify_vanishing(n, g)
        assert v.status == STATUS_EQUAL, (n, g, v.tags)
        assert v.dims["checked"] > 0
        assert v.dims["mu_image_zero"] is False
    space = surface_space(2, 2)
    assert not delta_surface(mu(2, 2), space)


def test_criterion_08_independence():
    # the s + r = n generator family maps to independent classes, block
    # by block even modulo deeper filtration
    expected = {(2, 2): 4, (3, 3): 27, (4, 4): 257}
    for (n, g), size in expected.items():
        v = verify_independence(n, g, include_extended=False)
        assert v.status == STATUS_EQUAL, (n, g, v.dims, v.tags)
        assert v.dims["family_size"] == size
        assert v.dims["rank"] == size
        for s in {b.s for b in _family_degrees(n, g)}:
            assert (v.dims[f"block_s{s}_rank_mod_deeper"]
                    == v.dims[f"block_s{s}_size"])


def _family_degrees(n, g):
    from confsurf.verify import _family
    return _family(n, g)


def test_criterion_09_perfect_pairing():
    # intersection matrix diag(+-1), duals kill the surface relations and
    # all deeper-word classes; a unit diagonal forces independence
    for n, g in [(3, 3), (4, 4)]:
        v = verify_pairing(n, g)
        assert v.status == STATUS_EQUAL, (n, g, v.tags)
        assert set(v.dims["diagonal_signs"]) <= {1, -1}
        assert v.dims["off_diagonal_max_abs"] == 0
        indep = verify_independence(n, g, include_extended=False)
        cross_check(v, indep)
    # the six-pattern local intersection table: signs (+,+,-,-,-,-) and
    # the membrane meets only its own handle cells
    from confsurf.dualpair import ehat_patterns
    pats = ehat_patterns((1, 2, 3), 1, 3)
    assert [p.sign for p in pats] == [1, 1, -1, -1, -1, -1]
    assert all({c for c, _ in p.factors} <= {1, -1} for p in pats)


def test_criterion_10_cyclic_invariance_lemma():
    for k, w, g in [(1, 0, 2), (1, 1, 2), (1, 1, 3), (2, 1, 4), (2, 2, 4)]:
        v = verify_lemma_cyclic(k, w, g)
        assert v.status in (STATUS_EQUAL, STATUS_CONTAINED), (k, w, g, v.tags)


def test_criterion_11_determinism(tmp_path):
    # re-running every verdict from a cold cache yields byte-identical
    # payloads (timing excluded)
    cases = [
        (verify_theorem_A, (3, 2)),
        (verify_theorem_C, (3, 3, 3)),
        (verify_vanishing, (3, 2)),
        (verify_independence, (3, 3)),
        (verify_pairing, (3, 3)),
        (verify_lemma_cyclic, (1, 1, 2)),
    ]
    payload_sets = []
    for run in range(2):
        clear_space_cache()
        cache = str(tmp_path / f"run{run}")
        payloads = [fn(*params, cache_dir=cache).to_json(include_elapsed=False)
                    for fn, params in cases]
        payload_sets.append(payloads)
    assert payload_sets[0] == payload_sets[1]
    # and the warm disk cache reproduces the cold result
    clear_space_cache()
    warm = [fn(*params, cache_dir=str(tmp_path / "run1")
               ).to_json(include_elapsed=False) for fn, params in cases]
    assert warm == payload_sets[1]
