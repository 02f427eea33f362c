"""Exact sparse linear algebra over the rationals."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from confsurf.linalg import (BasisIndexing, IndexingMismatchError, Subspace,
                             rational, relation_basis)


def idx(m):
    return BasisIndexing(range(m), "test")


def random_vectors(rng, m, count, density=0.5):
    out = []
    for _ in range(count):
        v = {}
        for j in range(m):
            if rng.random() < density:
                c = rational(rng.randint(-3, 3))
                if c:
                    v[j] = c
        out.append(v)
    return out


def test_rational_parsing():
    assert rational("3/4") == rational(3) / rational(4)
    assert rational(-2) + rational("1/2") == rational("-3/2")
    with pytest.raises(TypeError):
        rational(0.5)


def test_rank_and_membership():
    s = Subspace.span([{0: 1, 1: 1}, {1: 1, 2: 1}, {0: 1, 2: -1}], idx(3))
    assert s.rank == 2
    assert s.member({0: 2, 1: 1, 2: -1})
    assert not s.member({0: 1})


def test_canonical_rref_independent_of_order():
    rng = random.Random(7)
    ix = idx(6)
    vecs = random_vectors(rng, 6, 5)
    assert Subspace.span(vecs, ix) == Subspace.span(list(reversed(vecs)), ix)


def test_dimension_formula_sum_intersection():
    # dim S + dim T = dim(S + T) + dim(S meet T) on random instances
    rng = random.Random(11)
    for trial in range(20):
        m = rng.randint(2, 7)
        ix = idx(m)
        s = Subspace.span(random_vectors(rng, m, rng.randint(0, m)), ix)
        t = Subspace.span(random_vectors(rng, m, rng.randint(0, m)), ix)
        both = s.sum(t)
        meet = s.intersect(t)
        assert s.rank + t.rank == both.rank + meet.rank
        for v in meet.basis_vectors():
            assert s.member(v) and t.member(v)
        assert both.contains(s) and both.contains(t)


def test_quotient_coords_kill_exactly_the_subspace():
    rng = random.Random(3)
    ix = idx(5)
    s = Subspace.span(random_vectors(rng, 5, 3), ix)
    for v in s.basis_vectors():
        assert not s.quotient_coords(v)
    # quotient coordinates are supported on non-pivot keys only
    free = set(s.quotient_keys())
    for v in random_vectors(rng, 5, 10):
        assert set(s.quotient_coords(v)) <= free
    # and the quotient basis maps to itself
    for k in free:
        assert s.quotient_coords({k: rational(1)}) == {k: rational(1)}


def test_quotient_coords_linear():
    rng = random.Random(5)
    ix = idx(6)
    s = Subspace.span(random_vectors(rng, 6, 3), ix)
    u, v = random_vectors(rng, 6, 2, density=0.8)
    w = dict(u)
    for k, c in v.items():
        w[k] = w.get(k, 0) + c
    qu, qv, qw = s.quotient_coords(u), s.quotient_coords(v), s.quotient_coords(w)
    combined = dict(qu)
    for k, c in qv.items():
        q = combined.get(k, 0) + c
        if q:
            combined[k] = q
        else:
            combined.pop(k, None)
    assert combined == qw


def test_relation_basis_oracle():
    # relations among columns, checked by direct evaluation
    rng = random.Random(13)
    for trial in range(20):
        m = rng.randint(1, 5)
        cols = random_vectors(rng, m, rng.randint(1, 6), density=0.6)
        rels = relation_basis(cols, m)
        # every relation really annihilates the columns
        for rel in rels:
            acc = {}
            for j, c in rel.items():
                for k, a in cols[j].items():
                    q = acc.get(k, 0) + c * a
                    if q:
                        acc[k] = q
                    else:
                        acc.pop(k, None)
            assert not acc
        # rank-nullity
        col_rank = Subspace.span(cols, idx(m)).rank
        assert len(rels) + col_rank == len(cols)
        # the relations are themselves independent
        rel_ix = BasisIndexing(range(len(cols)), "relations")
        assert Subspace.span(rels, rel_ix).rank == len(rels)


def test_relation_basis_modulo():
    ix = idx(3)
    mod = Subspace.span([{0: 1}], ix)
    cols = [{0: rational(1)}, {1: rational(1)}, {0: rational(5), 1: rational(1)}]
    rels = relation_basis(cols, 3, modulo=mod)
    # col0 = 0 mod the subspace, and col2 - col1 = 0 mod it
    rel_space = Subspace.span(rels, BasisIndexing(range(3), "relations"))
    assert rel_space.rank == 2
    assert rel_space.member({0: 1})
    assert rel_space.member({1: -1, 2: 1})


def test_serialization_round_trip(tmp_path):
    rng = random.Random(17)
    ix = idx(8)
    s = Subspace.span(random_vectors(rng, 8, 5), ix)
    path = tmp_path / "s.sub"
    s.save(path)
    assert Subspace.load(path, ix) == s
    # fingerprint mismatch is rejected
    other = BasisIndexing(range(8), "other")
    with pytest.raises(IndexingMismatchError):
        Subspace.load(path, other)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.dictionaries(st.integers(0, 4), st.integers(-4, 4),
                                max_size=5), max_size=5),
       st.dictionaries(st.integers(0, 4), st.integers(-4, 4), max_size=5))
def test_containment_consistent_with_membership(raw, extra):
    ix = idx(5)
    vecs = [{k: c for k, c in v.items() if c} for v in raw]
    s = Subspace.span(vecs, ix)
    v = {k: c for k, c in extra.items() if c}
    t = s.sum(Subspace.span([v], ix))
    assert t.contains(s)
    assert s.member(v) == (t.rank == s.rank)
    assert s.intersect(s) == s
