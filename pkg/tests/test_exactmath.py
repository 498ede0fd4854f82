from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from powerideals.exactmath import (
    Series,
    SeriesBudgetError,
    as_fraction,
    compositions,
    compositions_count,
    monomials_of_degree,
    primitive,
    rank,
    rref,
    series_vars,
)

small = st.integers(-4, 4)


def matrices(max_rows=4, max_cols=4):
    return st.integers(1, max_cols).flatmap(
        lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=0, max_size=max_rows).map(
            lambda rows: (rows, c)
        )
    )


class TestRREF:
    def test_identity(self):
        R = rref([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
        assert R.rank == 3 and R.kernel == [] and R.pivots == (0, 1, 2)

    def test_proportional_rows(self):
        R = rref([[1, 1], [2, 2]])
        assert R.rank == 1
        assert R.kernel == [[Fraction(-1), Fraction(1)]]

    def test_degree_three_generator_rows(self):
        # x1^4 has no degree-3 multiples; x2^2 gives x1 x2^2 and x2^3; the cube adds one more
        rows = [[0, 0, 1, 0], [0, 0, 0, 1], [1, 3, 3, 1]]
        assert rref(rows).rank == 3

    def test_empty(self):
        R = rref([], ncols=3)
        assert R.rank == 0 and len(R.kernel) == 3

    def test_ragged(self):
        with pytest.raises(ValueError):
            rref([[1, 2], [3]])

    @given(matrices())
    def test_idempotent(self, mc):
        rows, c = mc
        R = rref(rows, ncols=c)
        again = rref(R.reduced, ncols=c)
        assert again.reduced == R.reduced and again.pivots == R.pivots

    @given(matrices())
    def test_rank_of_transpose(self, mc):
        rows, c = mc
        if not rows:
            return
        transpose = [list(col) for col in zip(*rows)]
        assert rref(rows).rank == rref(transpose).rank == rank(rows)

    @given(matrices())
    def test_kernel_is_kernel(self, mc):
        rows, c = mc
        R = rref(rows, ncols=c)
        assert len(R.kernel) == c - R.rank
        for v in R.kernel:
            assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in rows)


def test_rank_handles_fractions():
    assert rank([[Fraction(1, 2), Fraction(1, 3)], [3, 2]]) == 1
    assert rank([]) == 0


def test_primitive():
    assert primitive([Fraction(2, 3), Fraction(-4, 3)]) == (1, -2)
    assert as_fraction("3/6") == Fraction(1, 2)


class TestCompositions:
    @pytest.mark.parametrize("s,parts,expected", [(2, 3, 6), (0, 0, 1), (1, 0, 0)])
    def test_small(self, s, parts, expected):
        assert compositions_count(s, parts) == expected

    def test_brute_force(self):
        for s in range(7):
            for parts in range(5):
                brute = sum(1 for t in product(range(s + 1), repeat=parts) if sum(t) == s)
                assert compositions_count(s, parts) == brute
                assert len(set(compositions(s, parts))) == brute

    def test_order(self):
        assert monomials_of_degree(2, 2) == [(2, 0), (1, 1), (0, 2)]


class TestSeries:
    def test_geometric(self):
        (z,) = series_vars("z", {"z": 3})
        assert (1 - z).inverse() == 1 + z + z**2 + z**3

    def test_square(self):
        (q,) = series_vars("q")
        assert (1 + q) * (1 + q) == 1 + 2 * q + q**2

    def test_coefficient_extraction(self):
        q, z = series_vars("q z", {"z": 1})
        s = (1 + q * (1 - q * z).inverse()) ** 2 * (1 - z).inverse()
        assert s.coefficient("z", 1).coefficients("q") == [1, 2, 3, 2]

    def test_inverse_needs_constant(self):
        (z,) = series_vars("z", {"z": 2})
        with pytest.raises(ZeroDivisionError):
            z.inverse()

    def test_inverse_needs_truncation(self):
        q, z = series_vars("q z", {"z": 2})
        with pytest.raises(ValueError):
            (1 - q).inverse()

    def test_budget(self):
        gens = series_vars("a b c", budget=50)
        with pytest.raises(SeriesBudgetError):
            (1 + gens[0] + gens[1] + gens[2]) ** 6

    def test_substitute(self):
        x, y = series_vars("x y")
        assert (x**2 + x).substitute("x", 1 + y) == 2 + 3 * y + y**2

    def test_substitute_into_truncated_variable(self):
        t, u = series_vars("t u", {"t": 3})
        s = (1 - t).inverse()
        assert s.substitute("t", 2 * u) == 1 + 2 * u + 4 * u**2 + 8 * u**3
        with pytest.raises(ValueError):
            s.substitute("t", 1 + u)

    def test_divide_monomial(self):
        q, v = series_vars("q v")
        assert (q * v**2 + v**3).divide_monomial({"v": 2}) == q + v
        with pytest.raises(ValueError):
            (q + v).divide_monomial({"v": 1})

    def test_group_truncation(self):
        a, b = series_vars("a b", {("a", "b"): 2})
        s = (1 + a + b) ** 3
        assert s.degree() == 2

    def test_string(self):
        (q,) = series_vars("q")
        assert str(1 + 2 * q + q**2) == "q^2 + 2*q + 1"


def truncated_series(draw, names=("x", "y"), bound=4):
    terms = draw(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), small, max_size=6))
    return Series(terms, names, {"x": bound, "y": bound})


series_strategy = st.composite(truncated_series)()


@given(series_strategy, series_strategy, series_strategy)
def test_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a


@given(series_strategy)
def test_invert_unit(a):
    unit = a - a.constant_term() + 1
    assert unit * unit.inverse() == 1
