import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gfcodes import MatrixGF, gaussian_binomial, gf, span
from gfcodes.constructions import simplex
from gfcodes.subspace import (
    BudgetExceeded,
    batch_membership,
    budget,
    check_budget,
    enumerate_subspaces,
    multiplicity_mG,
    orthogonal_complement,
    subspace_at,
    subspace_ordinal,
)
from oracles import all_vectors, oracle_field, span_set, subspaces_of


def test_gaussian_binomial_values():
    assert gaussian_binomial(4, 0, 3) == 1
    assert gaussian_binomial(5, 2, 2) == 155
    assert gaussian_binomial(5, 2, 5) == 20306
    with pytest.raises(ValueError):
        gaussian_binomial(3, 4, 2)


@pytest.mark.parametrize("q,k", [(2, 3), (2, 4), (3, 3), (4, 3), (2, 5)])
def test_gaussian_binomial_counts_subspaces(q, k):
    F = oracle_field(gf(q))
    vecs = [v for v in all_vectors(q, k) if any(v)]
    for s in range(k + 1):
        assert gaussian_binomial(k, s, q) == len(subspaces_of(F, vecs, s, k))


@pytest.mark.parametrize("q,k", [(2, 3), (2, 4), (3, 3), (4, 2), (5, 2)])
def test_enumeration_visits_every_subspace_once(q, k):
    ctx = gf(q)
    F = oracle_field(ctx)
    vecs = [v for v in all_vectors(q, k) if any(v)]
    for s in range(k + 1):
        got = [span_set(F, v.rows.tolist(), k) for v in enumerate_subspaces(k, s, ctx)]
        assert len(got) == len(set(got))
        assert set(got) == subspaces_of(F, vecs, s, k)


def test_first_binary_point_is_last_unit_vector():
    subs = list(enumerate_subspaces(3, 1, gf(2)))
    assert len(subs) == 7
    assert subs[0].rows.tolist() == [[0, 0, 1]]


def test_full_space_is_the_only_top_subspace():
    subs = list(enumerate_subspaces(4, 4, gf(3)))
    assert len(subs) == 1 and subs[0].rows.tolist() == np.eye(4, dtype=int).tolist()


def test_ternary_plane_count():
    assert sum(1 for _ in enumerate_subspaces(5, 2, gf(3))) == 1210


def test_order_is_deterministic_and_ordinals_round_trip():
    ctx = gf(3)
    subs = list(enumerate_subspaces(4, 2, ctx))
    assert [v.ordinal for v in subs] == list(range(len(subs)))
    for v in subs[::7]:
        assert subspace_at(ctx, 4, 2, v.ordinal) == v
        assert subspace_ordinal(ctx, v.rows) == v.ordinal
    assert [v.ordinal for v in enumerate_subspaces(4, 2, ctx, lo=10, hi=20)] == list(range(10, 20))


def test_orthogonal_complement_examples():
    ctx = gf(2)
    e1 = span(ctx, [[1, 0, 0]])
    perp = orthogonal_complement(e1)
    assert perp == span(ctx, [[0, 1, 0], [0, 0, 1]])
    assert orthogonal_complement(span(ctx, np.eye(3, dtype=int))).s == 0


@given(st.sampled_from([2, 3, 4]), st.integers(1, 4), st.data())
def test_complement_is_orthogonal_with_complementary_dimension(q, k, data):
    ctx = gf(q)
    s = data.draw(st.integers(0, k))
    total = gaussian_binomial(k, s, q)
    v = subspace_at(ctx, k, s, data.draw(st.integers(0, total - 1)))
    w = orthogonal_complement(v)
    assert w.s == k - s
    if v.s and w.s:
        assert not ctx.matmul(v.rows, w.rows.T).any()
    assert orthogonal_complement(w) == v


def test_span_reduces_dependent_rows():
    v = span(gf(3), [[1, 2, 0], [2, 1, 0], [0, 0, 1]])
    assert v.s == 2


def test_membership_matches_span_sets():
    ctx = gf(3)
    F = oracle_field(ctx)
    vecs = np.array(all_vectors(3, 3)).T
    bases = np.stack([v.rows for v in enumerate_subspaces(3, 2, ctx)])
    got = batch_membership(ctx, bases, vecs)
    for b, row in zip(bases, got):
        sp = span_set(F, b.tolist(), 3)
        assert row.tolist() == [tuple(v) in sp for v in vecs.T.tolist()]


def test_multiplicity_in_simplex():
    c = simplex(2, 3)
    assert multiplicity_mG(c.gen, span(c.ctx, [[1, 0, 0], [0, 1, 0]])) == 3
    g = MatrixGF(gf(2), np.array([[1, 0, 0, 1], [0, 0, 1, 1]]))
    assert multiplicity_mG(g, span(gf(2), np.zeros((0, 2), dtype=int), k=2)) == 1


@pytest.mark.parametrize("q,k", [(2, 3), (2, 4), (2, 5), (3, 3), (3, 4)])
def test_simplex_multiplicity_depends_only_on_dimension(q, k):
    c = simplex(q, k)
    for s in range(1, k):
        want = (q ** (k - s) - 1) // (q - 1)
        assert {multiplicity_mG(c.gen, v) for v in enumerate_subspaces(k, k - s, c.ctx)} == {want}


def test_budget_guard(monkeypatch):
    monkeypatch.setenv("GFCODES_BUDGET", "100")
    assert budget() == 100
    with pytest.raises(BudgetExceeded):
        check_budget(gaussian_binomial(5, 2, 2), None)
    check_budget(155, 155)
    monkeypatch.setenv("GFCODES_BUDGET", "nonsense")
    with pytest.raises(ValueError):
        budget()


def test_invalid_dimensions():
    with pytest.raises(ValueError):
        list(enumerate_subspaces(3, 4, gf(2)))
