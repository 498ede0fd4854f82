import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from powerideals.arrangement import boolean, corpus, example_g, example_k_minus_3, uniform_2_3
from powerideals.exactmath import series_vars
from powerideals.oracle import (
    annihilation_check,
    apolarity_pair,
    as_poly,
    custom_ideal_dims,
    directional_degree_poly,
    flats_ideal_dims,
    homogeneous_components,
    lines_ideal_dims,
    poly_derivative,
    product_of_forms,
    restrict_to_line,
    spanning_set_dims,
    vanishing_order,
)
from powerideals.zonotopal import basis_monomials, hilbert_series

CORPUS = corpus()
G = example_g()
U23 = uniform_2_3()
y1, y2, y3 = series_vars("y1 y2 y3")


def test_custom_ideals():
    assert custom_ideal_dims(2, [((1, 0), 4), ((0, 1), 2), ((1, 1), 3)], 5) == [1, 2, 2, 1]
    assert custom_ideal_dims(2, [((1, 0), 2), ((0, 1), 2)], 3) == [1, 2, 1]
    assert custom_ideal_dims(3, [((1, 0, 0), 2), ((0, 1, 0), 1), ((0, 0, 1), 1)], 3) == [1, 1]
    assert custom_ideal_dims(2, [((1, 1), 0)], 3) == []
    with pytest.raises(ValueError):
        custom_ideal_dims(2, [((0, 0), 2)], 3)


def test_flats_ideal_examples():
    assert flats_ideal_dims(G, 0, 6) == [1, 3, 5, 6, 4, 1]
    assert flats_ideal_dims(example_k_minus_3(), -3, 3) == [1, 1]
    assert flats_ideal_dims(boolean(2), 1, 5) == [1, 2, 3, 2]


def test_lines_ideal_examples():
    assert lines_ideal_dims(G, 0, 6) == flats_ideal_dims(G, 0, 6)
    assert lines_ideal_dims(boolean(2), 1, 5) == [1, 2, 3, 2, 1]
    assert lines_ideal_dims(U23, -1, 3) == [1, 2]


def test_spanning_examples():
    assert spanning_set_dims(G, 0, 6) == [1, 3, 5, 6, 4, 1]
    assert spanning_set_dims(U23, -1, 3) == [1, 2]
    assert spanning_set_dims(U23, -2, 3) == [1]


@pytest.mark.parametrize("name", [n for n, c in CORPUS.items() if c.is_essential()])
@pytest.mark.parametrize("k", [0, -1, -2])
def test_lines_equal_flats_on_essential(name, k):
    cfg = CORPUS[name]
    assert lines_ideal_dims(cfg, k, cfg.n + 2) == flats_ideal_dims(cfg, k, cfg.n + 2)


def test_lines_dominate_at_k_one():
    a, b = lines_ideal_dims(boolean(2), 1, 6), flats_ideal_dims(boolean(2), 1, 6)
    assert all(x >= y for x, y in zip(a.padded(7), b.padded(7))) and a != b


@pytest.mark.parametrize("name", sorted(CORPUS))
@pytest.mark.parametrize("k", [0, -1, -2])
def test_spanning_equals_flats(name, k):
    cfg = CORPUS[name]
    assert spanning_set_dims(cfg, k, cfg.n + 2) == flats_ideal_dims(cfg, k, cfg.n + 2)


def test_apolarity():
    x1, x2 = series_vars("x1 x2")
    assert apolarity_pair(x1**2, y1**2) == 2
    assert apolarity_pair(x1 * x2, y1**2) == 0
    # only the 3 x1 x2^2 term meets y1 y2^2, contributing 3 * 1! * 2!
    assert apolarity_pair((x1 + x2) ** 3, y1 * y2**2) == 6


def test_annihilation_examples():
    assert annihilation_check(G, 0, y1 * y2**3 - y1**2 * y2**2)
    assert not annihilation_check(G, 0, y3**2)


def test_directional_degree_poly_examples():
    lG = product_of_forms(G, G.ground_set)
    assert directional_degree_poly(lG, (0, 0, 1)) == 1
    assert directional_degree_poly(y1**2, (0, 1)) == 0
    assert directional_degree_poly(y1 * y2**3 - y1**2 * y2**2, (0, 1, 0)) == 3


@given(st.sampled_from(sorted(CORPUS)), st.integers(0, 2**32 - 1))
def test_directional_degree_of_product_is_rho(name, seed):
    cfg = CORPUS[name]
    rng = random.Random(seed)
    f = product_of_forms(cfg, cfg.ground_set)
    h = [rng.randint(-5, 5) for _ in range(cfg.ambient_dim)]
    if not any(h):
        h[0] = 1
    assert directional_degree_poly(f, h, seed=seed) == cfg.directional_degree(h)


def test_vanishing_order():
    f = as_poly(y1**2 * y2)
    assert vanishing_order(f, (0, 1, 0)) == 2
    assert vanishing_order(f, (1, 1, 0)) == 0
    assert vanishing_order({}, (1, 0, 0)) is None
    assert restrict_to_line(f, (0, 0, 0), (1, 1, 0)) == [0, 0, 0, 1]


@given(st.sampled_from(["B2", "U23", "G", "braid3", "U23_211"]), st.integers(-2, 1), st.integers(0, 2**32 - 1))
def test_closure_under_derivatives(name, k, seed):
    cfg = CORPUS[name]
    # members of the space; the k = -2 list can contain strays, which are not the point here
    monos = [m for m in basis_monomials(cfg, k) if annihilation_check(cfg, k, m.expand(cfg))]
    if not monos:
        return
    rng = random.Random(seed)
    f = 0 * y1
    for m in rng.sample(monos, min(4, len(monos))):
        f = f + rng.randint(-3, 3) * m.expand(cfg)
    f = as_poly(f)
    assert annihilation_check(cfg, k, f)
    for i in range(cfg.ambient_dim):
        assert annihilation_check(cfg, k, poly_derivative(f, i))
    for part in homogeneous_components(f).values():
        assert annihilation_check(cfg, k, part)


def test_oracle_matches_formula_on_bigger_k():
    for k in (4, 5):
        assert flats_ideal_dims(boolean(2), k, k + 4) == hilbert_series(boolean(2), k)
