from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from powerideals.arrangement import VectorConfiguration, boolean, corpus, example_g, uniform_2_3
from powerideals.exactmath import series_vars
from powerideals.tutte import internal_bases, tutte
from powerideals.zonotopal import (
    GradedDims,
    Skipped,
    basis_monomials,
    complement_forms,
    degree_counts,
    deletion_contraction_check,
    generating_series,
    hilbert_generic,
    hilbert_series,
)

CORPUS = corpus()
U23 = uniform_2_3()


@pytest.mark.parametrize(
    "cfg,k,expected",
    [
        (example_g(), 0, [1, 3, 5, 6, 4, 1]),
        (example_g(), -2, []),
        (boolean(2), 1, [1, 2, 3, 2]),
        (U23, -1, [1, 2]),
        (U23, 0, [1, 2, 3, 1]),
        (U23, -2, [1]),
    ],
)
def test_hilbert_examples(cfg, k, expected):
    assert hilbert_series(cfg, k) == expected


def test_hilbert_refuses_k_below_minus_two():
    with pytest.raises(ValueError, match="oracle"):
        hilbert_series(U23, -3)


def test_non_essential_negative_k():
    b3 = CORPUS["braid3"]
    assert hilbert_series(b3, -1) == []
    assert hilbert_series(b3, -1, literal=False) == [1, 2]


def test_hilbert_generic():
    assert hilbert_generic(2, 0, 0) == [1, 2, 1]
    assert hilbert_generic(2, 0, 1) == [1, 2, 3, 2]
    assert hilbert_generic(0, 1, 0) == [1]
    assert hilbert_generic(2, 0, 2) == hilbert_series(boolean(2), 2)
    assert hilbert_generic(2, 1, 2) == hilbert_series(boolean(2, 1), 2)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_evaluation_identities(name):
    cfg = CORPUS[name]
    T = tutte(cfg)
    assert hilbert_series(cfg, 0).total == T.evaluate(2, 1)
    if cfg.is_essential():
        assert hilbert_series(cfg, -1).total == len(cfg.bases())
        assert hilbert_series(cfg, -2).total == len(internal_bases(cfg))


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_partial_sum_limit(name):
    cfg = CORPUS[name]
    dim = cfg.ambient_dim
    for d in range(5):
        # once k >= d every polynomial of degree d is in the inverse system
        assert hilbert_series(cfg, d)[d] == comb(dim + d - 1, d)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_tutte_at_geometric_point(name):
    cfg = CORPUS[name]
    n, r, D = cfg.n, cfg.r, 8
    (q,) = series_vars("q", {"q": D})
    geo = (1 - q).inverse()
    total = 0 * geo
    for (i, j), c in tutte(cfg).b.items():
        total = total + c * geo**i * q ** (n - r - j)
    assert total == ((1 - q) ** r).inverse()


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_generating_series_coefficients(name):
    cfg = CORPUS[name]
    s = generating_series(cfg, 3)
    for k in range(4):
        assert GradedDims.from_series(s.coefficient("z", k)) == hilbert_series(cfg, k)


def test_basis_examples():
    assert [m.exponents for m in basis_monomials(U23, -2)] == [(0, 0, 0)]
    assert sorted(m.exponents for m in basis_monomials(U23, -1)) == [(0, 0, 0), (0, 0, 1), (0, 1, 0)]
    monos = basis_monomials(U23, 0)
    assert len(monos) == 7 and degree_counts(monos) == [1, 2, 3, 1]


@pytest.mark.parametrize("name", sorted(CORPUS))
@pytest.mark.parametrize("k", [-2, -1, 0, 1, 2])
def test_basis_counts(name, k):
    cfg = CORPUS[name]
    assert degree_counts(basis_monomials(cfg, k)) == hilbert_series(cfg, k)


def test_complement_forms():
    assert complement_forms(boolean(2)) == []
    assert complement_forms(boolean(2, 1)) == [2]
    assert len(complement_forms(CORPUS["braid4"])) == 1


def test_deletion_contraction_examples():
    assert deletion_contraction_check(U23, 2, 0)
    assert deletion_contraction_check(example_g(), 2, 0)
    with_loop = VectorConfiguration.from_rows([[1, 0], [0, 0], [1, 1]])
    for k in (-2, -1, 0, 1, 2):
        assert deletion_contraction_check(with_loop, 1, k)
    with pytest.raises(Skipped):
        deletion_contraction_check(boolean(2), 0, 1)


@pytest.mark.parametrize("name", sorted(CORPUS))
@pytest.mark.parametrize("k", [-2, -1, 0, 1, 2])
def test_deletion_contraction_all_elements(name, k):
    cfg = CORPUS[name]
    for i in cfg.ground_set:
        try:
            assert deletion_contraction_check(cfg, i, k)
        except Skipped:
            pass


configs = st.integers(2, 3).flatmap(
    lambda d: st.lists(st.lists(st.integers(-2, 2), min_size=d, max_size=d), min_size=1, max_size=6)
).map(VectorConfiguration.from_rows)


@given(configs, st.integers(0, 2))
def test_random_basis_counts(cfg, k):
    assert degree_counts(basis_monomials(cfg, k)) == hilbert_series(cfg, k)
    assert hilbert_series(cfg, k).top_degree <= cfg.n + k
