from math import comb

import pytest

from powerideals.arrangement import boolean, corpus
from powerideals.fatpoints import (
    fatpoint_ideal_series,
    fatpoint_quotient_closed,
    fatpoint_quotient_corrected,
    fatpoint_quotient_series,
    principal_series,
    ring_series,
)

CORPUS = corpus()
NAMES = sorted(CORPUS)


@pytest.mark.parametrize("name", NAMES)
def test_telescoping(name):
    cfg = CORPUS[name]
    D = cfg.n + 4
    total = [0] * (D + 1)
    for k in range(cfg.n + 1):
        total = [a + b for a, b in zip(total, fatpoint_quotient_series(cfg, k, D).padded())]
    assert total == ring_series(cfg, D).padded(D + 1)


@pytest.mark.parametrize("name", NAMES)
def test_end_points(name):
    cfg = CORPUS[name]
    D = cfg.n + 4
    assert fatpoint_ideal_series(cfg, 0, D).padded() == principal_series(cfg, D).padded(D + 1)
    dim = cfg.ambient_dim
    assert fatpoint_ideal_series(cfg, cfg.n, D).padded() == [comb(dim + d - 1, d) for d in range(D + 1)]


@pytest.mark.parametrize("name", NAMES)
def test_filtration_is_monotone(name):
    cfg = CORPUS[name]
    D = cfg.n + 3
    series = [fatpoint_ideal_series(cfg, k, D).padded() for k in range(cfg.n + 1)]
    for lower, upper in zip(series, series[1:]):
        assert all(a <= b for a, b in zip(lower, upper))


def test_b2_first_ideal():
    # degree 2 + i reads (C_{B2, i+1})_(2+i): 3 in degree 2, then 4, 5, ...
    assert fatpoint_ideal_series(boolean(2), 1, 6).padded() == [0, 2, 3, 4, 5, 6, 7]


@pytest.mark.parametrize("name", NAMES)
def test_corrected_closed_form(name):
    cfg = CORPUS[name]
    D = cfg.n + 4
    for k in range(cfg.n + 1):
        assert fatpoint_quotient_corrected(cfg, k, D).padded() == fatpoint_quotient_series(cfg, k, D).padded()


def test_printed_closed_form_vanishes_below_rank():
    # [q^(n-k)] of a polynomial of q-degree at most n - r is zero when k < r
    cfg = CORPUS["U23"]
    for k in range(cfg.r):
        assert fatpoint_quotient_closed(cfg, k, 6).padded() == [0] * 7


def test_printed_closed_form_for_b2():
    # ((2-t)/(1-t))^2 = 4 + 4t + 5t^2 + ...; the direct quotient J_{B2,2} is just the constants
    assert fatpoint_quotient_closed(boolean(2), 2, 3).padded() == [4, 4, 5, 6]
    assert fatpoint_quotient_series(boolean(2), 2, 3).padded() == [1, 0, 0, 0]


def test_range():
    with pytest.raises(ValueError):
        fatpoint_ideal_series(boolean(2), 3, 4)
