"""Brute-force ground truth: graded dimensions of power ideals by exact linear algebra.

Polynomials are dicts from exponent tuples to exact scalars; the public functions
also accept :class:`~powerideals.exactmath.Series` and use its term map, with
variables matched by position.  Degree-d components are written in the
lexicographically ordered monomial basis and ranked exactly.

The ideal I_{A,k} is generated by h^(rho(h)+k+1) over all nonzero h in V.  On
the open part of a flat X the exponent is constant, e = rho(X)+k+1, and the
powers h^e with h in a Zariski-dense subset of X span all of Sym^e(X).  So the
degree-d part of I_{A,k} is the sum over flats of Sym^e(X) * Sym^(d-e)(V),
which is what :func:`flats_ideal_dims` row-reduces.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, factorial
from typing import Iterable, Mapping, Sequence

from .arrangement import VectorConfiguration
from .exactmath import Series, as_fraction, compositions, integer_rows, monomials_of_degree, primitive, rank
from .zonotopal import GradedDims

Poly = dict


@dataclass(frozen=True)
class PowerGenerator:
    """h^e for a single nonzero direction h; e = 0 is the unit ideal."""

    direction: tuple
    exponent: int

    def __post_init__(self):
        if self.exponent < 0:
            raise ValueError("generator exponent must be nonnegative")
        if all(as_fraction(x) == 0 for x in self.direction):
            raise ValueError("generator direction must be nonzero")


@dataclass(frozen=True)
class DegreeComponent:
    degree: int
    monomial_basis_size: int
    ideal_rank: int

    @property
    def inverse_dim(self) -> int:
        return self.monomial_basis_size - self.ideal_rank


# ---------------------------------------------------------------------------
# polynomial helpers


def as_poly(f) -> Poly:
    if isinstance(f, Series):
        return dict(f.terms)
    return {tuple(e): c for e, c in dict(f).items() if c != 0}


def poly_mul(f: Poly, g: Poly) -> Poly:
    out: Poly = {}
    for ea, ca in f.items():
        for eb, cb in g.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c != 0}


def linear_form(coeffs: Sequence) -> Poly:
    dim = len(coeffs)
    return {tuple(int(i == j) for j in range(dim)): c for i, c in enumerate(coeffs) if c != 0}


def poly_power(f: Poly, e: int, dim: int) -> Poly:
    out: Poly = {(0,) * dim: 1}
    for _ in range(e):
        out = poly_mul(out, f)
    return out


def poly_derivative(f: Poly, i: int) -> Poly:
    out: Poly = {}
    for e, c in f.items():
        if e[i]:
            new = e[:i] + (e[i] - 1,) + e[i + 1 :]
            out[new] = out.get(new, 0) + c * e[i]
    return {e: c for e, c in out.items() if c != 0}


def directional_derivative(f: Poly, u: Sequence) -> Poly:
    out: Poly = {}
    for i, ui in enumerate(u):
        if ui == 0:
            continue
        for e, c in poly_derivative(f, i).items():
            out[e] = out.get(e, 0) + ui * c
    return {e: c for e, c in out.items() if c != 0}


def _same_length(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    """Pad exponent vectors with trailing zeros so both polynomials use the same variables."""
    width = max((len(e) for p in (f, g) for e in p), default=0)
    pad = lambda p: {tuple(e) + (0,) * (width - len(e)): c for e, c in p.items()}
    return pad(f), pad(g)


def apply_operator(g, f) -> Poly:
    """g(d/dy) applied to f(y)."""
    g, f = _same_length(as_poly(g), as_poly(f))
    out: Poly = {}
    for beta, cg in g.items():
        for alpha, cf in f.items():
            if all(a >= b for a, b in zip(alpha, beta)):
                coef = cg * cf
                for a, b in zip(alpha, beta):
                    coef *= factorial(a) // factorial(a - b)
                e = tuple(a - b for a, b in zip(alpha, beta))
                out[e] = out.get(e, 0) + coef
    return {e: c for e, c in out.items() if c != 0}


def homogeneous_components(f) -> dict[int, Poly]:
    out: dict[int, Poly] = {}
    for e, c in as_poly(f).items():
        out.setdefault(sum(e), {})[e] = c
    return out


def apolarity_pair(f, g):
    """<f, g> = f(d/dy) g(y) at y = 0; on monomials <x^a, y^b> = [a = b] prod a_i!.

    No 1/a! normalization is applied.
    """
    f, g = _same_length(as_poly(f), as_poly(g))
    total = 0
    for e, c in f.items():
        if e in g:
            w = 1
            for x in e:
                w *= factorial(x)
            total += c * g[e] * w
    return total


# ---------------------------------------------------------------------------
# graded ranks


def _graded_dims(dim: int, generators: Sequence[tuple[Poly, int]], D: int, unit: bool) -> list[DegreeComponent]:
    """Quotient dimensions of the ideal generated by homogeneous polys (poly, degree)."""
    comps = []
    for d in range(D + 1):
        size = comb(dim + d - 1, d) if dim else int(d == 0)
        if unit:
            comps.append(DegreeComponent(d, size, size))
            continue
        if comps and comps[-1].inverse_dim == 0 and d > 0:
            comps.append(DegreeComponent(d, size, size))
            continue
        index = {m: i for i, m in enumerate(monomials_of_degree(dim, d))}
        rows = []
        for g, e in generators:
            if e > d:
                continue
            for mono in monomials_of_degree(dim, d - e):
                row = [0] * size
                for exp, c in g.items():
                    row[index[tuple(a + b for a, b in zip(exp, mono))]] = c
                rows.append(row)
        comps.append(DegreeComponent(d, size, rank(rows)))
    return comps


def _dims(comps: Sequence[DegreeComponent]) -> GradedDims:
    return GradedDims(tuple(c.inverse_dim for c in comps))


def custom_ideal_dims(dim: int, generators: Iterable, D: int) -> GradedDims:
    """Graded dimensions of C[V]/I for I generated by powers h^e of explicit directions."""
    gens = [g if isinstance(g, PowerGenerator) else PowerGenerator(tuple(g[0]), g[1]) for g in generators]
    polys = []
    unit = False
    for g in gens:
        if len(g.direction) != dim:
            raise ValueError("generator direction has the wrong length")
        if g.exponent == 0:
            unit = True
        polys.append((poly_power(linear_form(primitive(g.direction)), g.exponent, dim), g.exponent))
    return _dims(_graded_dims(dim, polys, D, unit))


def _flat_generators(basis: Sequence[Sequence], e: int, dim: int) -> list[tuple[Poly, int]]:
    """All u-monomials of degree e for an integer basis u_1..u_s of a flat."""
    forms = [linear_form(v) for v in integer_rows(basis)]
    powers = [[{(0,) * dim: 1}] for _ in forms]
    for j, form in enumerate(forms):
        for _ in range(e):
            powers[j].append(poly_mul(powers[j][-1], form))
    out = []
    for beta in compositions(e, len(forms)):
        p: Poly = {(0,) * dim: 1}
        for j, b in enumerate(beta):
            if b:
                p = poly_mul(p, powers[j][b])
        out.append((p, e))
    return out


def flats_ideal_components(cfg: VectorConfiguration, k: int, D: int) -> list[DegreeComponent]:
    gens = []
    unit = False
    for flat in cfg.flats(min_dim=1):
        e = flat.rho + k + 1
        if e <= 0:
            unit = True
            break
        if e <= D:
            gens.extend(_flat_generators(flat.basis, e, cfg.ambient_dim))
    return _graded_dims(cfg.ambient_dim, gens, D, unit)


def flats_ideal_dims(cfg: VectorConfiguration, k: int, D: int) -> GradedDims:
    """Graded dimensions of C[V]/I_{A,k} (equivalently of C_{A,k}), any integer k."""
    return _dims(flats_ideal_components(cfg, k, D))


def lines_ideal_dims(cfg: VectorConfiguration, k: int, D: int) -> GradedDims:
    """Same, for the ideal generated only at the lines of an essential arrangement."""
    if not cfg.is_essential():
        raise ValueError("lines_ideal_dims needs an essential configuration")
    gens = []
    unit = False
    for h in cfg.lines():
        e = cfg.directional_degree(h) + k + 1
        if e <= 0:
            unit = True
        elif e <= D:
            gens.append((poly_power(linear_form(h), e, cfg.ambient_dim), e))
    return _dims(_graded_dims(cfg.ambient_dim, gens, D, unit))


def spanning_sets(cfg: VectorConfiguration, k: int) -> list[tuple[int, ...]]:
    """Index sets S whose products l_S span C_{A,k} for k in {0, -1, -2}.

    k = 0: every S.  k = -1: the complement of S spans V*.  k = -2: removing any
    further element from the complement still spans V*.  "Spans V*" means rank
    equal to the ambient dimension, so non-essential inputs give no sets.
    """
    if k not in (0, -1, -2):
        raise ValueError("spanning families are known for k in {0, -1, -2}")
    full = cfg.ambient_dim
    ground = set(cfg.ground_set)
    out = []
    for size in range(cfg.n + 1):
        for S in combinations(cfg.ground_set, size):
            rest = ground - set(S)
            if k == 0:
                ok = True
            elif k == -1:
                ok = cfg.rank(rest) == full
            else:
                ok = all(cfg.rank(rest - {x}) == full for x in rest) and cfg.rank(rest) == full
            if ok:
                out.append(S)
    return out


def product_of_forms(cfg: VectorConfiguration, S: Iterable[int]) -> Poly:
    dim = cfg.ambient_dim
    p: Poly = {(0,) * dim: 1}
    for i in S:
        p = poly_mul(p, linear_form(cfg.covectors[i]))
    return p


def spanning_set_dims(cfg: VectorConfiguration, k: int, D: int) -> GradedDims:
    """Per-degree rank of the products l_S over the spanning family for k."""
    dim = cfg.ambient_dim
    by_degree: dict[int, list[Poly]] = {}
    for S in spanning_sets(cfg, k):
        p = product_of_forms(cfg, S)
        if p:
            by_degree.setdefault(len(S), []).append(p)
    dims = []
    for d in range(D + 1):
        polys = by_degree.get(d, [])
        index = {m: i for i, m in enumerate(monomials_of_degree(dim, d))}
        rows = []
        for p in polys:
            row = [0] * len(index)
            for e, c in p.items():
                row[index[e]] = c
            rows.append(row)
        dims.append(rank(rows))
    return GradedDims(tuple(dims))


def polys_rank(polys: Sequence, dim: int) -> int:
    """Rank of a list of polynomials in ``dim`` variables (any degrees)."""
    monos: dict = {}
    rows = []
    for f in polys:
        for e in as_poly(f):
            monos.setdefault(e, len(monos))
    for f in polys:
        row = [0] * len(monos)
        for e, c in as_poly(f).items():
            row[monos[e]] = c
        rows.append(row)
    return rank(integer_rows(rows)) if rows else 0


# ---------------------------------------------------------------------------
# membership and directional degree


def annihilation_check(cfg: VectorConfiguration, k: int, candidate) -> bool:
    """True iff the candidate lies in C_{A,k}: every flat generator of degree <= deg kills it."""
    f = as_poly(candidate)
    if not f:
        return True
    deg = max(sum(e) for e in f)
    for flat in cfg.flats(min_dim=1):
        e = flat.rho + k + 1
        if e <= 0:
            return False
        if e > deg:
            continue
        basis = integer_rows(flat.basis)
        # all order-e derivatives along the basis of the flat
        level = [(f, 0)]
        for _ in range(e):
            nxt = []
            for g, start in level:
                for j in range(start, len(basis)):
                    dg = directional_derivative(g, basis[j])
                    if dg:
                        nxt.append((dg, j))
            level = nxt
            if not level:
                break
        if level:
            return False
    return True


def restrict_to_line(f, anchor: Sequence, h: Sequence) -> list:
    """Coefficients in t of f(anchor + t*h)."""
    f = as_poly(f)
    out: dict[int, Fraction] = {}
    for e, c in f.items():
        poly = [Fraction(c)]
        for ai, hi, k in zip(anchor, h, e):
            for _ in range(k):
                new = [Fraction(0)] * (len(poly) + 1)
                for d, x in enumerate(poly):
                    new[d] += x * ai
                    new[d + 1] += x * hi
                poly = new
        for d, x in enumerate(poly):
            out[d] = out.get(d, 0) + x
    top = max((d for d, x in out.items() if x != 0), default=-1)
    return [out.get(d, 0) for d in range(top + 1)]


def vanishing_order(f, h: Sequence) -> int | None:
    """Lowest order of a partial derivative of f that is nonzero at h (None if f = 0)."""
    f = as_poly(f)
    if not f:
        return None
    level = {tuple(sorted(f.items())): f}
    order = 0
    while level:
        for g in level.values():
            if _eval(g, h) != 0:
                return order
        nxt = {}
        for g in level.values():
            for i in range(len(h)):
                dg = poly_derivative(g, i)
                if dg:
                    nxt.setdefault(tuple(sorted(dg.items())), dg)
        level = nxt
        order += 1
    raise AssertionError("nonzero polynomial with all derivatives vanishing")


def _eval(f: Poly, point: Sequence):
    total = 0
    for e, c in f.items():
        term = c
        for x, k in zip(point, e):
            term *= as_fraction(x) ** k
        total += term
    return total


def directional_degree_poly(f, h: Sequence, trials: int = 8, seed: int = 0) -> int:
    """Degree of f along lines parallel to h, read off random lines (max over trials).

    For homogeneous f the reading is checked against d - (vanishing order of f at h).
    """
    if all(as_fraction(x) == 0 for x in h):
        raise ValueError("direction must be nonzero")
    f = as_poly(f)
    if not f:
        return -1
    rng = random.Random(seed)
    dim = len(h)
    best = -1
    for _ in range(trials):
        anchor = [rng.randint(-10**6, 10**6) for _ in range(dim)]
        best = max(best, len(restrict_to_line(f, anchor, h)) - 1)
    degrees = {sum(e) for e in f}
    if len(degrees) == 1:
        (d,) = degrees
        exact = d - vanishing_order(f, h)
        if exact != best:
            raise RuntimeError(f"random lines read degree {best}, derivative test gives {exact}")
    return best
