"""Multigraded Hilbert series of zonotopal Cox rings and modules.

The degree (d, H a) piece of the ring is (C_{A(a),0})_d, where A(a) repeats
l_i a_i times and H is the line-hyperplane non-containment matrix.  The
central and internal modules do the same with C_{A(a),-1} and C_{A(a),-2}.
Tables are first computed in the "fake" grading by (d, a), with variables t
and t_1..t_n, then pushed forward to the true grading by a -> H a.

Two routes are provided.  :func:`cox_table_direct` reads each entry off the
Tutte formula for A(a).  :func:`cox_closed_form` evaluates the generating
functions, summed over subsets with multivariate Tutte and
spanning-polynomial evaluations, with every negative power cleared as
documented per mode.

Convention for the modules.  When supp(a) does not span, C_{A(a),-1} and
C_{A(a),-2} are zero as spaces (the ideal contains 1), but their Tutte formulas
are not; a = 0 gives 1 in degree 0.  ``convention="formula"`` (the default)
reports the Tutte-formula values for every a, which is what the closed forms
sum.  ``convention="literal"`` reports zero for non-spanning supports, and the
closed forms then sum only over subsets D spanning V*.

The fake grading makes sense for any configuration; the true grading needs
the lines, so tables of non-essential configurations carry no matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .arrangement import VectorConfiguration
from .exactmath import Series, compositions, series_vars
from .tutte import multivariate_tutte_eval, spanning_polynomial_eval, tutte_subset_sum
from .zonotopal import GradedDims, hilbert_series

MODES = {"ring": 0, "central": -1, "internal": -2}
CONVENTIONS = ("formula", "literal")


@dataclass(frozen=True)
class LineHyperplaneMatrix:
    lines: tuple[tuple[int, ...], ...]
    entries: tuple[tuple[int, ...], ...]

    @property
    def lines_count(self) -> int:
        return len(self.lines)

    def s_exponents(self, j: int) -> tuple[int, ...]:
        """Exponent vector of S_j = product of s_i over lines h_i not on H_j."""
        return tuple(row[j] for row in self.entries)

    def push(self, a) -> tuple[int, ...]:
        return tuple(sum(h * x for h, x in zip(row, a)) for row in self.entries)


def line_hyperplane_matrix(cfg: VectorConfiguration) -> LineHyperplaneMatrix:
    lines = cfg.lines()
    entries = tuple(tuple(int(cfg.evaluate(j, h) != 0) for j in cfg.ground_set) for h in lines)
    return LineHyperplaneMatrix(tuple(lines), entries)


@dataclass(frozen=True)
class MultigradedTable:
    mode: str
    D_t: int
    D_a: int
    entries: dict
    matrix: LineHyperplaneMatrix | None = None

    def __eq__(self, other):
        if not isinstance(other, MultigradedTable):
            return NotImplemented
        return (self.mode, self.D_t, self.D_a, self.entries) == (other.mode, other.D_t, other.D_a, other.entries)

    def __getitem__(self, key) -> int:
        d, a = key
        return self.entries.get((d, tuple(a)), 0)

    def column(self, a) -> GradedDims:
        return GradedDims(tuple(self[d, a] for d in range(self.D_t + 1)), "t")

    def fake_series(self) -> Series:
        """The table as a polynomial in t, t1..tn."""
        n = len(next(iter(self.entries))[1]) if self.entries else 0
        names = ("t",) + tuple(f"t{i + 1}" for i in range(n))
        return Series({(d,) + a: c for (d, a), c in self.entries.items()}, names)

    def true_grading(self) -> dict:
        """Entries pushed forward along a -> H a; distinct a with the same image add."""
        if self.matrix is None:
            raise ValueError("table has no line-hyperplane matrix")
        out: dict = {}
        for (d, a), c in self.entries.items():
            key = (d, self.matrix.push(a))
            out[key] = out.get(key, 0) + c
        return out

    def differences(self, other: "MultigradedTable") -> list:
        keys = sorted(set(self.entries) | set(other.entries))
        return [(key, self.entries.get(key, 0), other.entries.get(key, 0)) for key in keys
                if self.entries.get(key, 0) != other.entries.get(key, 0)]


def multiplicity_vectors(n: int, D_a: int) -> Iterator[tuple[int, ...]]:
    for total in range(D_a + 1):
        yield from compositions(total, n)


def _check(cfg: VectorConfiguration, mode: str, convention: str):
    if mode not in MODES:
        raise ValueError(f"mode must be one of {sorted(MODES)}")
    if convention not in CONVENTIONS:
        raise ValueError(f"convention must be one of {CONVENTIONS}")


def _matrix(cfg: VectorConfiguration) -> LineHyperplaneMatrix | None:
    # the true grading needs the lines, which need the covectors to span
    return line_hyperplane_matrix(cfg) if cfg.is_essential() else None


def cox_table_direct(cfg: VectorConfiguration, mode: str = "ring", D_t: int = 6, D_a: int = 3,
                     convention: str = "formula") -> MultigradedTable:
    """Entry (d, a) = dim (C_{A(a),k})_d with k = 0, -1, -2 for ring, central, internal."""
    _check(cfg, mode, convention)
    k = MODES[mode]
    entries = {}
    for a in multiplicity_vectors(cfg.n, D_a):
        dims = hilbert_series(cfg.expand_multiset(a), k, literal=(convention == "literal"))
        for d in range(D_t + 1):
            if dims[d]:
                entries[(d, a)] = dims[d]
    return MultigradedTable(mode, D_t, D_a, entries, _matrix(cfg))


def _fake_vars(n: int, D_t: int, D_a: int):
    names = ["t"] + [f"t{i + 1}" for i in range(n)]
    trunc = {"t": D_t}
    if n:
        trunc[tuple(names[1:])] = D_a
    return series_vars(names, trunc)


def cox_series(cfg: VectorConfiguration, mode: str = "ring", D_t: int = 6, D_a: int = 3,
               convention: str = "formula") -> Series:
    """FakeHilb as a truncated series in t, t1..tn.

    ring:  1/prod(1 - t_i t) * Z_A(1-t; (1-t) t_i/(1-t_i)).  The q^(-r(B)) of Z is
           supplied as (1-t)^(-r(B)), a unit power series, so nothing is cleared.
    central: sum_D (1-t)^(-r(D)) prod_{i in D} t_i t/(1 - t_i t) * S_D((1-t)/(t(1-t_i))).
           Each weight carries 1/t; the t from each factor t_i t cancels it, so S_D
           is evaluated homogenized with complement weight t (clearing exponent |D|).
    internal: sum_D (-1/t)^(r(D)) prod_{i in D} t_i t/(1 - t_i t) * Z_D((t-1)/t; (1-t)/(t(1-t_i))).
           1/q = -t/(1-t) is supplied directly, the weights' 1/t is cleared by the
           homogenizing t as above, and the remaining t^(-r(D)) is an exact monomial
           division (computed at t-truncation D_t + r(D) so no coefficient is lost).
    """
    _check(cfg, mode, convention)
    n, r = cfg.n, cfg.r
    gens = _fake_vars(n, D_t + r, D_a)
    t, ts = gens[0], gens[1:]
    one = Series.constant(1, t.vars, t.trunc)
    geo_t = [(1 - ti).inverse() for ti in ts]
    geo_tt = [(1 - ti * t).inverse() for ti in ts]
    if mode == "ring":
        weights = [(1 - t) * ti * g for ti, g in zip(ts, geo_t)]
        total = multivariate_tutte_eval(cfg, weights, q_inv=(1 - t).inverse())
        for g in geo_tt:
            total = total * g
        return total.with_truncation({"t": D_t})
    weights = [(1 - t) * g for g in geo_t]
    inv_one_minus_t = (1 - t).inverse()
    total = Series.constant(0, t.vars, t.trunc)
    for size in range(n + 1):
        for D in combinations(range(n), size):
            rD = cfg.rank(D)
            if convention == "literal" and rD != cfg.ambient_dim:
                continue
            sub = cfg.restrict(D)
            w = [weights[i] for i in D]
            prefix = one
            for i in D:
                prefix = prefix * ts[i] * geo_tt[i]
            if mode == "central":
                term = spanning_polynomial_eval(sub, w, complement=t) if D else one
                term = term * inv_one_minus_t**rD
            else:
                q_inv = -t * inv_one_minus_t
                term = multivariate_tutte_eval(sub, w, q_inv=q_inv, complement=t) if D else one
                term = term.divide_monomial({"t": rD}) * (-1) ** rD
            total = total + prefix * term
    return total.with_truncation({"t": D_t})


def cox_closed_form(cfg: VectorConfiguration, mode: str = "ring", D_t: int = 6, D_a: int = 3,
                    convention: str = "formula") -> MultigradedTable:
    s = cox_series(cfg, mode, D_t, D_a, convention)
    entries = {}
    for e, c in s.terms.items():
        if c != int(c) or c < 0:
            raise ArithmeticError(f"closed form produced a non-dimension coefficient {c} at {e}")
        entries[(e[0], tuple(e[1:]))] = int(c)
    return MultigradedTable(mode, D_t, D_a, entries, _matrix(cfg))


# ---------------------------------------------------------------------------
# generating-function lemmas


LEMMAS = ("weighted", "corank", "spanning")


def lemma_sides(cfg: VectorConfiguration, which: str, D_a: int = 3) -> tuple[Series, Series]:
    """Both sides of one of the multiset generating-function identities.

    Variables q, u = x - 1, v = y - 1 and w_1..w_n, truncated at total w-degree D_a.

    weighted: sum_a q^r(supp a) T_{A(a)}(x, y) w^a
         = sum_D (q u)^r(D) prod_D w_i/(1-w_i) Z_D(uv; v/(1 - y w_i)).
    corank:   sum_a u^(-r(supp a)) T_{A(a)}(x, y) w^a
         = 1/prod(1-w_i) Z_A(uv; v w_i/(1 - y w_i)); both sides multiplied by u^r.
    spanning: sum_a q^r(supp a) T_{A(a)}(1, y) w^a
         = sum_D (q/v)^r(D) prod_D w_i/(1-w_i) S_D(v/(1 - y w_i)).

    Z is evaluated in cleared form (q^r Z at q = uv) and the surplus v^r(D) is
    removed by exact monomial division, so no negative power is ever stored.
    """
    if which not in LEMMAS:
        raise ValueError(f"which must be one of {LEMMAS}")
    n, r = cfg.n, cfg.r
    names = ["q", "u", "v"] + [f"w{i + 1}" for i in range(n)]
    trunc = {tuple(names[3:]): D_a} if n else {}
    gens = series_vars(names, trunc)
    q, u, v, ws = gens[0], gens[1], gens[2], gens[3:]
    one = Series.constant(1, q.vars, q.trunc)

    lhs = Series.constant(0, q.vars, q.trunc)
    for a in multiplicity_vectors(n, D_a):
        T = tutte_subset_sum(cfg.expand_multiset(a))
        rs = cfg.rank([i for i in range(n) if a[i]])
        if which == "spanning":
            coef = q**rs * T.evaluate(one, 1 + v)
        elif which == "weighted":
            coef = q**rs * T.evaluate(1 + u, 1 + v)
        else:
            coef = u ** (r - rs) * T.evaluate(1 + u, 1 + v)
        mono = one
        for w, x in zip(ws, a):
            mono = mono * w**x
        lhs = lhs + coef * mono

    y = 1 + v
    geo_yw = [(1 - y * w).inverse() for w in ws]
    geo_w = [(1 - w).inverse() for w in ws]
    if which == "corank":
        weights = [v * w * g for w, g in zip(ws, geo_yw)]
        rhs = multivariate_tutte_eval(cfg, weights, u * v, cleared=True).divide_monomial({"v": r})
        for g in geo_w:
            rhs = rhs * g
        return lhs, rhs
    rhs = Series.constant(0, q.vars, q.trunc)
    for size in range(n + 1):
        for D in combinations(range(n), size):
            sub = cfg.restrict(D)
            rD = sub.r
            prefix = q**rD
            for i in D:
                prefix = prefix * ws[i] * geo_w[i]
            w = [v * geo_yw[i] for i in D]
            if which == "weighted":
                inner = multivariate_tutte_eval(sub, w, u * v, cleared=True) if D else one
            else:
                inner = spanning_polynomial_eval(sub, w) if D else one
            rhs = rhs + prefix * inner.divide_monomial({"v": rD})
    return lhs, rhs


def lemma_generating_check(cfg: VectorConfiguration, which: str, D_a: int = 3) -> bool:
    lhs, rhs = lemma_sides(cfg, which, D_a)
    return lhs == rhs
