"""Hilbert series of the inverse systems C_{A,k} and their l-monomial bases.

C_{A,k} is the space of polynomials on V* killed by h(d/dx)^(rho_A(h)+k+1) for
every nonzero h in V, where rho_A(h) counts hyperplanes not containing h.

The closed forms are Tutte evaluations.  Every 1/q is folded into the
prefactor q^(n-r): the y-power j of a Tutte monomial never exceeds n - r, so
q^(n-r) * q^(-j) is stored as q^(n-r-j) and no negative power is created.

For k = -1 and k = -2 the closed forms describe essential configurations.
When the covectors do not span V*, some direction h has rho_A(h) = 0, so the
generator h^(k+1) is a constant and C_{A,k} = 0; :func:`hilbert_series`
reports that value unless ``literal=False`` asks for the bare Tutte formula.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Callable, Sequence

from .arrangement import VectorConfiguration
from .exactmath import Series, compositions, compositions_count, rank, series_vars
from .tutte import TuttePolynomial, all_activities, tutte


@dataclass(frozen=True)
class GradedDims:
    """Dimensions indexed by degree, trailing zeros trimmed."""

    dims: tuple[int, ...]
    var: str = "q"

    def __post_init__(self):
        dims = [int(d) for d in self.dims]
        while dims and dims[-1] == 0:
            dims.pop()
        if any(d < 0 for d in dims):
            raise ValueError(f"negative dimension in {dims}")
        object.__setattr__(self, "dims", tuple(dims))

    def __getitem__(self, d: int) -> int:
        return self.dims[d] if 0 <= d < len(self.dims) else 0

    def __len__(self):
        return len(self.dims)

    def __eq__(self, other):
        if isinstance(other, GradedDims):
            return self.dims == other.dims
        if isinstance(other, (list, tuple)):
            return self == GradedDims(tuple(other), self.var)
        return NotImplemented

    def __hash__(self):
        return hash(self.dims)

    @property
    def total(self) -> int:
        return sum(self.dims)

    @property
    def top_degree(self) -> int:
        return len(self.dims) - 1

    def padded(self, length: int) -> list[int]:
        return [self[d] for d in range(length)]

    def at(self, value):
        return sum(c * value**d for d, c in enumerate(self.dims))

    def as_series(self, trunc: int | None = None) -> Series:
        return Series.from_coefficients(self.dims, self.var, trunc)

    @classmethod
    def from_series(cls, s: Series, var: str | None = None) -> "GradedDims":
        var = var or (s.vars[0] if s.vars else "q")
        coeffs = s.coefficients(var) if s.vars else [s.constant_term()]
        for c in coeffs:
            if c != int(c):
                raise ValueError("dimension series has a non-integer coefficient")
        return cls(tuple(int(c) for c in coeffs), var)

    def __str__(self):
        return _poly_str(self.dims, self.var)


def _poly_str(dims: Sequence[int], var: str) -> str:
    parts = []
    for d, c in enumerate(dims):
        if c == 0:
            continue
        mono = "" if d == 0 else (var if d == 1 else f"{var}^{d}")
        parts.append(str(c) if not mono else (mono if c == 1 else f"{c}{mono}"))
    return " + ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# closed forms


def _tutte_dims(T: TuttePolynomial, n: int, r: int, x_power: Callable[[int], Series], shift: int = 0) -> Series:
    """Sum of b_ij q^(n-r-j+shift) * x_power(i) as a series in q (and whatever else)."""
    (q,) = series_vars("q")
    total = Series.constant(0, ("q",))
    for (i, j), c in T.b.items():
        total = total + c * q ** (n - r - j + shift) * x_power(i)
    return total


def hilbert_series(cfg: VectorConfiguration, k: int, *, literal: bool = True, T: TuttePolynomial | None = None) -> GradedDims:
    """Hilbert series of C_{A,k} for k >= -2.

    k >= 1 extracts [z^k] of q^(n-r) / ((1-z)(1-qz)^m) * T(1 + q/(1-qz), 1/q);
    k = 0, -1, -2 use q^(n-r) T(1+q, 1/q), q^(n-r) T(1, 1/q), q^(n-r) T(0, 1/q).
    """
    if k < -2:
        raise ValueError(f"no closed form for k = {k} < -2; use the oracle (flats_ideal_dims)")
    if literal and k < 0 and not cfg.is_essential():
        return GradedDims(())
    T = tutte(cfg) if T is None else T
    n, r, m = cfg.n, cfg.r, cfg.excess
    if k == -2:
        s = _tutte_dims(T, n, r, lambda i: 1 if i == 0 else 0)
    elif k == -1:
        s = _tutte_dims(T, n, r, lambda i: 1)
    elif k == 0:
        (q,) = series_vars("q")
        s = _tutte_dims(T, n, r, lambda i: (1 + q) ** i)
    else:
        s = _generating_coefficient(T, n, r, m, k)
    dims = GradedDims.from_series(s)
    if dims.top_degree > n + k and (k >= 0 or cfg.is_essential()):
        raise AssertionError("Hilbert series exceeds the top degree n + k")
    return dims


def _generating_coefficient(T: TuttePolynomial, n: int, r: int, m: int, k: int) -> Series:
    q, z = series_vars("q z", {"z": k})
    x_arg = 1 + q * (1 - q * z).inverse()
    powers = [Series.constant(1, ("q", "z"), {"z": k})]
    for _ in range(max((i for i, _ in T.b), default=0)):
        powers.append(powers[-1] * x_arg)
    body = Series.constant(0, ("q", "z"), {"z": k})
    for (i, j), c in T.b.items():
        body = body + c * q ** (n - r - j) * powers[i]
    prefactor = ((1 - z) * (1 - q * z) ** m).inverse()
    return (body * prefactor).coefficient("z", k)


def hilbert_generic(n: int, m: int, k: int) -> GradedDims:
    """n generic hyperplanes in dimension n + m: sum_t sum_{s<=k} C(n,t) C(s+t+m-1, s) q^(s+t)."""
    if n < 0 or m < 0 or k < 0:
        raise ValueError("hilbert_generic needs n, m, k >= 0")
    dims = [0] * (n + k + 1)
    for t in range(n + 1):
        for s in range(k + 1):
            dims[s + t] += comb(n, t) * compositions_count(s, t + m)
    return GradedDims(tuple(dims))


def generating_series(cfg: VectorConfiguration, K: int, T: TuttePolynomial | None = None) -> Series:
    """The bivariate series sum_k Hilb(C_{A,k}; q) z^k truncated at z^K."""
    T = tutte(cfg) if T is None else T
    n, r, m = cfg.n, cfg.r, cfg.excess
    q, z = series_vars("q z", {"z": K})
    x_arg = 1 + q * (1 - q * z).inverse()
    body = Series.constant(0, ("q", "z"), {"z": K})
    for (i, j), c in T.b.items():
        body = body + c * q ** (n - r - j) * x_arg**i
    return body * ((1 - z) * (1 - q * z) ** m).inverse()


# ---------------------------------------------------------------------------
# monomial bases


@dataclass(frozen=True)
class LMonomial:
    """prod_{i in A-B-E(B)} l_i * prod_{j in I} l_j^(alpha_j + 1) * u^beta.

    The u are coordinate forms completing the covectors to a basis of V*
    (see :func:`complement_forms`); beta is empty for essential configurations.
    """

    basis_B: frozenset[int]
    active_I: frozenset[int]
    alpha: tuple[tuple[int, int], ...]
    exponents: tuple[int, ...] = field(compare=False)
    complement: tuple[int, ...] = ()

    @property
    def degree(self) -> int:
        return sum(self.exponents) + sum(self.complement)

    def __str__(self):
        factors = [f"l{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(self.exponents) if e]
        factors += [f"u{j + 1}" + (f"^{e}" if e > 1 else "") for j, e in enumerate(self.complement) if e]
        return "*".join(factors) or "1"

    def expand(self, cfg: VectorConfiguration) -> Series:
        """The product of linear forms as a polynomial in y_1..y_dim."""
        names = [f"y{i + 1}" for i in range(cfg.ambient_dim)]
        gens = series_vars(names)
        out = Series.constant(1, names)
        forms = list(cfg.covectors) + [tuple(int(i == j) for i in range(cfg.ambient_dim))
                                       for j in complement_forms(cfg)]
        for vec, e in zip(forms, self.exponents + self.complement):
            if e:
                form = sum((c * g for c, g in zip(vec, gens)), Series.constant(0, names))
                out = out * form**e
        return out


def complement_forms(cfg: VectorConfiguration) -> list[int]:
    """Coordinates j whose forms y_j complete the span of the covectors to V*, chosen greedily."""
    chosen, rows = [], [list(v) for v in cfg.covectors]
    current = rank(rows) if rows else 0
    for j in range(cfg.ambient_dim):
        if current == cfg.ambient_dim:
            break
        trial = rows + [[int(i == j) for i in range(cfg.ambient_dim)]]
        if rank(trial) > current:
            rows, current = trial, current + 1
            chosen.append(j)
    return chosen


def basis_monomials(cfg: VectorConfiguration, k: int) -> list[LMonomial]:
    """The l-monomial basis of C_{A,k} for k >= -2.

    k >= 0: for each basis B, I within I(B) and alpha on I with |alpha| <= k.
    k = -1: one monomial per basis, with I empty.  k = -2: one per internal basis.
    When the covectors span a proper subspace of V*, C_{A,k} for k >= 0 also
    needs the complement coordinates: the factor u^beta shares the budget,
    |alpha| + |beta| <= k.  For k < 0 such a configuration has C_{A,k} = 0 and
    gets no monomials.

    For k = -2 the list depends on the element order and is not always inside
    C_{A,k}; the counts are right but, in some orders, l_{A-B-E(B)} for an
    internal basis B fails the annihilation test (the k = -3 example in label order is one).
    """
    if k < -2:
        raise ValueError("no monomial basis is known for k < -2")
    if k < 0 and not cfg.is_essential():
        return []
    m = len(complement_forms(cfg)) if k >= 0 else 0
    out = []
    for rec in all_activities(cfg):
        free = [i for i in cfg.ground_set if i not in rec.basis and i not in rec.externally_active]
        if k == -2 and rec.internally_active:
            continue
        if k < 0:
            subsets = [()]
        else:
            act = sorted(rec.internally_active)
            subsets = [S for size in range(len(act) + 1) for S in combinations(act, size)]
        for I in subsets:
            for total in range(max(k, 0) + 1):
                for alpha in compositions(total, len(I)):
                    exps = [0] * cfg.n
                    for i in free:
                        exps[i] = 1
                    for j, a in zip(I, alpha):
                        exps[j] = a + 1
                    for extra in range(max(k, 0) - total + 1):
                        for beta in compositions(extra, m):
                            out.append(LMonomial(rec.basis, frozenset(I), tuple(zip(I, alpha)),
                                                 tuple(exps), tuple(beta)))
    return out


def degree_counts(monomials: Sequence[LMonomial]) -> GradedDims:
    top = max((m.degree for m in monomials), default=-1)
    dims = [0] * (top + 1)
    for m in monomials:
        dims[m.degree] += 1
    return GradedDims(tuple(dims))


# ---------------------------------------------------------------------------
# deletion-contraction


class Skipped(Exception):
    """A check whose preconditions do not hold."""


def deletion_contraction_check(cfg: VectorConfiguration, i: int, k: int, series=hilbert_series) -> bool:
    """Check the deletion-contraction recurrence for the series of C_{A,k} at element i.

    Loop: unchanged by deletion.  Coloop: (1+q) Hilb(A/H) for k = 0, Hilb(A/H)
    for k = -1 and zero for k = -2.  Otherwise Hilb(A) = q Hilb(A-H) + Hilb(A/H),
    which for k = -2 needs A, A-H and A/H all coloop-free.  Raises
    :class:`Skipped` when the preconditions fail.
    """
    whole = series(cfg, k).as_series()
    (q,) = series_vars("q")
    if cfg.is_loop(i):
        return whole == series(cfg.delete(i), k).as_series()
    contracted = series(cfg.contract(i), k).as_series()
    if cfg.is_coloop(i):
        if k == 0:
            return whole == (1 + q) * contracted
        if k == -1:
            return whole == contracted
        if k == -2:
            return whole.is_zero()
        raise Skipped("coloop identities are stated for k in {0, -1, -2} only")
    deleted = cfg.delete(i)
    if k == -2 and (cfg.coloops() or deleted.coloops() or cfg.contract(i).coloops()):
        raise Skipped("k = -2 recurrence needs A, A-H and A/H coloop-free")
    return whole == q * series(deleted, k).as_series() + contracted
