"""Tutte polynomials, basis activities and multivariate evaluations.

Three independent routes compute T(x, y): the corank-nullity subset sum,
deletion-contraction, and the activity expansion over bases.  The ring used
for evaluation is whatever the arguments are: ints, Fractions or Series.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Callable, Iterable, Sequence

from .arrangement import VectorConfiguration
from .exactmath import Series

SUBSET_BOUND = 20


@dataclass(frozen=True)
class TuttePolynomial:
    """T(x, y) = sum of b[(i, j)] x^i y^j over a ground set of size n and rank r."""

    b: dict
    n: int
    r: int

    def __post_init__(self):
        object.__setattr__(self, "b", {k: v for k, v in self.b.items() if v != 0})

    def __eq__(self, other):
        if not isinstance(other, TuttePolynomial):
            return NotImplemented
        return (self.b, self.n, self.r) == (other.b, other.n, other.r)

    def __hash__(self):
        return hash((frozenset(self.b.items()), self.n, self.r))

    def coefficient(self, i: int, j: int) -> int:
        return self.b.get((i, j), 0)

    def evaluate(self, x, y):
        """T at arbitrary ring elements (ints, Fractions or Series)."""
        total = 0
        xs, ys = _powers(x, max((i for i, _ in self.b), default=0)), _powers(y, max((j for _, j in self.b), default=0))
        for (i, j), c in self.b.items():
            total = total + c * xs[i] * ys[j]
        return total

    def table(self) -> list[list[int]]:
        """Dense coefficient table, rows indexed by the x-exponent."""
        imax = max((i for i, _ in self.b), default=0)
        jmax = max((j for _, j in self.b), default=0)
        return [[self.coefficient(i, j) for j in range(jmax + 1)] for i in range(imax + 1)]

    def __str__(self):
        if not self.b:
            return "0"
        parts = []
        for (i, j) in sorted(self.b, key=lambda ij: (-(ij[0] + ij[1]), -ij[0])):
            c = self.b[(i, j)]
            mono = "*".join(p for p in (_mono("x", i), _mono("y", j)) if p)
            parts.append(mono if c == 1 and mono else (f"{c}*{mono}" if mono else str(c)))
        return " + ".join(parts)


def _mono(v: str, e: int) -> str:
    return "" if e == 0 else (v if e == 1 else f"{v}^{e}")


def _powers(x, top: int) -> list:
    out = [1]
    for _ in range(top):
        out.append(out[-1] * x)
    return out


# ---------------------------------------------------------------------------
# three routes


def tutte_subset_sum(cfg: VectorConfiguration, bound: int = SUBSET_BOUND) -> TuttePolynomial:
    """Corank-nullity sum over all 2^n subsets."""
    n, r = cfg.n, cfg.r
    if n > bound:
        raise ValueError(f"subset sum over {n} elements exceeds the bound {bound}")
    counts: dict[tuple[int, int], int] = {}
    for size in range(n + 1):
        for A in combinations(range(n), size):
            rk = cfg.rank(A)
            key = (r - rk, size - rk)
            counts[key] = counts.get(key, 0) + 1
    # expand (x-1)^a (y-1)^c into monomials
    b: dict[tuple[int, int], int] = {}
    for (a, c), mult in counts.items():
        for i in range(a + 1):
            for j in range(c + 1):
                coef = mult * comb(a, i) * comb(c, j) * (-1) ** (a - i + c - j)
                b[(i, j)] = b.get((i, j), 0) + coef
    return TuttePolynomial(b, n, r)


def tutte_deletion_contraction(cfg: VectorConfiguration, memo_threshold: int = 12) -> TuttePolynomial:
    """Recursive deletion-contraction on the first element that is neither loop nor coloop.

    Minors with at least ``memo_threshold`` elements are memoized on
    :meth:`VectorConfiguration.signature`; the cache lives for one call only.
    """
    memo: dict = {}

    def rec(c: VectorConfiguration) -> dict:
        key = c.signature() if c.n >= memo_threshold else None
        if key is not None and key in memo:
            return memo[key]
        pick = next((i for i in c.ground_set if not c.is_loop(i) and not c.is_coloop(i)), None)
        if pick is None:
            loops = len(c.loops())
            result = {(c.n - loops, loops): 1}
        else:
            result = dict(rec(c.delete(pick)))
            for k, v in rec(c.contract(pick)).items():
                result[k] = result.get(k, 0) + v
        if key is not None:
            memo[key] = result
        return result

    return TuttePolynomial(rec(cfg), cfg.n, cfg.r)


@dataclass(frozen=True)
class ActivityRecord:
    basis: frozenset[int]
    internally_active: frozenset[int]
    externally_active: frozenset[int]


def fundamental_cocircuit(cfg: VectorConfiguration, B: Sequence[int], i: int) -> set[int]:
    Bset = set(B)
    rest = Bset - {i}
    return {i} | {e for e in cfg.ground_set if e not in Bset and cfg.rank(rest | {e}) == cfg.r}


def fundamental_circuit(cfg: VectorConfiguration, B: Sequence[int], e: int) -> set[int]:
    Bset = set(B)
    return {e} | {b for b in Bset if cfg.rank((Bset - {b}) | {e}) == cfg.r}


def activities(cfg: VectorConfiguration, B: Iterable[int]) -> ActivityRecord:
    """Internal and external activity of a basis with respect to the input order."""
    B = tuple(sorted(set(B)))
    if not cfg.is_basis(B):
        raise ValueError(f"{B} is not a basis")
    internal = frozenset(i for i in B if min(fundamental_cocircuit(cfg, B, i)) == i)
    external = frozenset(
        e for e in cfg.ground_set if e not in B and min(fundamental_circuit(cfg, B, e)) == e
    )
    return ActivityRecord(frozenset(B), internal, external)


def all_activities(cfg: VectorConfiguration) -> list[ActivityRecord]:
    return [activities(cfg, B) for B in cfg.bases()]


def tutte_by_activities(cfg: VectorConfiguration) -> TuttePolynomial:
    b: dict[tuple[int, int], int] = {}
    for rec in all_activities(cfg):
        key = (len(rec.internally_active), len(rec.externally_active))
        b[key] = b.get(key, 0) + 1
    return TuttePolynomial(b, cfg.n, cfg.r)


def tutte(cfg: VectorConfiguration) -> TuttePolynomial:
    """Default route: subset sum for small ground sets, deletion-contraction otherwise."""
    return tutte_subset_sum(cfg) if cfg.n <= 12 else tutte_deletion_contraction(cfg)


def interval_decompose(cfg: VectorConfiguration, S: Iterable[int]):
    """The basis B and sets I, E with S = (B - I) | E, I within I(B), E within E(B)."""
    S = frozenset(S)
    for rec in all_activities(cfg):
        B = rec.basis
        lower = B - rec.internally_active
        upper = B | rec.externally_active
        if lower <= S <= upper:
            return B, B - S, S - B
    raise AssertionError("activity intervals failed to cover a subset")


def internal_bases(cfg: VectorConfiguration) -> list[frozenset[int]]:
    return [rec.basis for rec in all_activities(cfg) if not rec.internally_active]


# ---------------------------------------------------------------------------
# evaluations


def _one_like(values: Sequence):
    for v in values:
        if isinstance(v, Series):
            return Series.constant(1, v.vars, v.trunc, v.budget)
    return 1


def multivariate_tutte_eval(
    cfg: VectorConfiguration,
    v_vals: Sequence,
    q=None,
    *,
    q_inv=None,
    complement=None,
    cleared: bool = False,
    bound: int = SUBSET_BOUND,
):
    """Evaluate Z(q; v) = sum over subsets B of q^(-r(B)) prod_{e in B} v_e.

    Exactly one way of handling the negative powers must be chosen:

    * ``q_inv`` supplies 1/q directly, so q^(-r(B)) = q_inv^r(B);
    * ``cleared=True`` returns q^r Z = sum q^(r - r(B)) prod v_e, a polynomial in q;
    * otherwise ``q`` is inverted (a nonzero scalar or a series with nonzero constant term).

    ``complement`` (optional) multiplies each subset's term by complement^(n - |B|),
    the homogenized form used when every weight carries a common denominator.
    """
    n, r = cfg.n, cfg.r
    if n > bound:
        raise ValueError(f"subset sum over {n} elements exceeds the bound {bound}")
    if len(v_vals) != n:
        raise ValueError("one weight per element")
    if cleared:
        if q is None:
            raise ValueError("cleared evaluation needs q")
        base, expo = q, (lambda rk: r - rk)
    else:
        if q_inv is None:
            if q is None:
                raise ValueError("need q or q_inv")
            if isinstance(q, Series):
                q_inv = q.inverse()
            else:
                if q == 0:
                    raise ZeroDivisionError("q = 0 is not invertible")
                q_inv = Fraction(1) / q
        base, expo = q_inv, (lambda rk: rk)
    one = _one_like(list(v_vals) + [base, complement])
    qpow = _powers(base, r)
    cpow = _powers(complement, n) if complement is not None else None
    total = 0 * one
    for size in range(n + 1):
        for B in combinations(range(n), size):
            term = qpow[expo(cfg.rank(B))] * one
            for e in B:
                term = term * v_vals[e]
            if cpow is not None:
                term = term * cpow[n - size]
            total = total + term
    return total


def spanning_polynomial_eval(cfg: VectorConfiguration, v_vals: Sequence, *, complement=None, bound: int = SUBSET_BOUND):
    """Sum over spanning subsets S of prod_{i in S} v_i (optionally times complement^(n-|S|))."""
    n, r = cfg.n, cfg.r
    if n > bound:
        raise ValueError(f"subset sum over {n} elements exceeds the bound {bound}")
    if len(v_vals) != n:
        raise ValueError("one weight per element")
    one = _one_like(list(v_vals) + [complement])
    cpow = _powers(complement, n) if complement is not None else None
    total = 0 * one
    for size in range(r, n + 1):
        for S in combinations(range(n), size):
            if cfg.rank(S) != r:
                continue
            term = one
            for e in S:
                term = term * v_vals[e]
            if cpow is not None:
                term = term * cpow[n - size]
            total = total + term
    return total


def umbral_eval(T: TuttePolynomial, f: Callable[[int, int], object]):
    """Sum of b_ij f(i, j)."""
    total = 0
    for (i, j), c in sorted(T.b.items()):
        total = total + c * f(i, j)
    return total
