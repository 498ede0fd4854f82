"""Hilbert series of the fat-point filtration attached to an arrangement.

J(f_A - k) is the ideal of polynomials vanishing at each point p to order
f_A(p) - k, where f_A(p) counts the hyperplanes through p.  Its degree n+i
part has the dimension of (C_{A,i+k})_{n+i}, which is the direct route used
here.  The quotients J_{A,k} = J(f_A - k) / J(f_A - (k-1)) telescope to the
whole polynomial ring.

Two closed forms are provided for the quotients.  :func:`fatpoint_quotient_closed`
is the formula t^(n-k)/(1-t)^m [q^(n-k)] T((2-t)/(1-t), 2-q), evaluated
as written.  Its derivation relies on T(1+ax, 1+y/a) = a^(r-n) T(1+x, 1+y),
which is false (the left side is not homogeneous in a), and the formula
disagrees with the direct route already for B_2.  :func:`fatpoint_quotient_corrected`
is what the same generating-function argument gives without that step:

    sum_k Hilb(J_{A,k}; t) s^k = s^r t^(n-r) (1-t)^(-m) T(1 + t/(s(1-t)), s/t),

equivalently Hilb(J_{A,k}; t) = t^(n-k)/(1-t)^m [q^(n-k)] q^(n-r) T(1 + q/(1-t), 1/q).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .arrangement import VectorConfiguration
from .exactmath import Series, series_vars
from .tutte import TuttePolynomial, tutte
from .zonotopal import GradedDims, hilbert_series


@dataclass(frozen=True)
class FiltrationSeries:
    k: int
    mode: str
    coefficients: GradedDims
    D: int

    def __getitem__(self, d: int) -> int:
        return self.coefficients[d]

    def padded(self) -> list[int]:
        return self.coefficients.padded(self.D + 1)


def _check_k(cfg: VectorConfiguration, k: int):
    if not 0 <= k <= cfg.n:
        raise ValueError(f"k must lie in 0..{cfg.n}, got {k}")


def _ideal_coefficients(cfg: VectorConfiguration, k: int, D: int, T: TuttePolynomial | None = None) -> list[int]:
    n = cfg.n
    out = []
    cache: dict[int, GradedDims] = {}
    for d in range(D + 1):
        kk = d - n + k
        if kk < 0:
            out.append(0)
            continue
        if kk not in cache:
            cache[kk] = hilbert_series(cfg, kk, T=T)
        out.append(cache[kk][d])
    return out


def fatpoint_ideal_series(cfg: VectorConfiguration, k: int, D: int) -> FiltrationSeries:
    """Hilbert series of J(f_A - k) up to degree D, for 0 <= k <= n."""
    _check_k(cfg, k)
    T = tutte(cfg)
    return FiltrationSeries(k, "ideal", GradedDims(tuple(_ideal_coefficients(cfg, k, D, T)), "t"), D)


def fatpoint_quotient_series(cfg: VectorConfiguration, k: int, D: int) -> FiltrationSeries:
    """Hilbert series of J_{A,k} by the direct route: ideal(k) - ideal(k-1)."""
    _check_k(cfg, k)
    T = tutte(cfg)
    upper = _ideal_coefficients(cfg, k, D, T)
    lower = _ideal_coefficients(cfg, k - 1, D, T) if k > 0 else [0] * (D + 1)
    return FiltrationSeries(k, "quotient", GradedDims(tuple(a - b for a, b in zip(upper, lower)), "t"), D)


def _finish(cfg, k, D, coeff_q: Series, t_shift: int) -> FiltrationSeries:
    (t,) = series_vars("t", {"t": D})
    s = coeff_q * t**t_shift * ((1 - t) ** cfg.excess).inverse()
    s = s.with_truncation({"t": D})
    coeffs = s.coefficients("t") if not s.is_zero() else []
    if any(c != int(c) or c < 0 for c in coeffs):
        # keep the raw values visible instead of forcing them into dimensions
        return FiltrationSeries(k, "quotient", _RawDims(tuple(coeffs)), D)
    return FiltrationSeries(k, "quotient", GradedDims(tuple(int(c) for c in coeffs), "t"), D)


class _RawDims(GradedDims):
    """Coefficient list that need not be a dimension vector (for failing formulas)."""

    def __post_init__(self):
        dims = list(self.dims)
        while dims and dims[-1] == 0:
            dims.pop()
        object.__setattr__(self, "dims", tuple(dims))


def fatpoint_quotient_closed(cfg: VectorConfiguration, k: int, D: int) -> FiltrationSeries:
    """t^(n-k)/(1-t)^m [q^(n-k)] T((2-t)/(1-t), 2-q), evaluated exactly as written.

    Checked numerically against the direct route; see the module docstring.
    """
    _check_k(cfg, k)
    n = cfg.n
    T = tutte(cfg)
    t, q = series_vars("t q", {"t": D})
    x_arg = (2 - t) * (1 - t).inverse()
    y_arg = 2 - q
    value = T.evaluate(x_arg, y_arg)
    if isinstance(value, int):
        value = Series.constant(value, ("t", "q"), {"t": D})
    return _finish(cfg, k, D, value.coefficient("q", n - k), n - k)


def fatpoint_quotient_corrected(cfg: VectorConfiguration, k: int, D: int) -> FiltrationSeries:
    """t^(n-k)/(1-t)^m [q^(n-k)] q^(n-r) T(1 + q/(1-t), 1/q), with 1/q folded into q^(n-r)."""
    _check_k(cfg, k)
    n, r = cfg.n, cfg.r
    T = tutte(cfg)
    t, q = series_vars("t q", {"t": D})
    x_arg = 1 + q * (1 - t).inverse()
    value = Series.constant(0, ("t", "q"), {"t": D})
    for (i, j), c in T.b.items():
        value = value + c * q ** (n - r - j) * x_arg**i
    return _finish(cfg, k, D, value.coefficient("q", n - k), n - k)


def principal_series(cfg: VectorConfiguration, D: int) -> GradedDims:
    """t^n/(1-t)^(r+m) truncated at degree D."""
    n, dim = cfg.n, cfg.ambient_dim
    return GradedDims(tuple(comb(dim + d - n - 1, d - n) if d >= n else 0 for d in range(D + 1)), "t")


def ring_series(cfg: VectorConfiguration, D: int) -> GradedDims:
    """1/(1-t)^(r+m) truncated at degree D."""
    dim = cfg.ambient_dim
    return GradedDims(tuple(comb(dim + d - 1, d) for d in range(D + 1)), "t")
