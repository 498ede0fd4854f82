"""Exact scalars, truncated multivariate series and rational linear algebra.

Every number in this package is a Python ``int`` or a ``fractions.Fraction``.
Large rank computations are delegated to FLINT (through ``python-flint``);
the pure-Python :func:`rref` is kept for small matrices and for kernels.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, lcm
from typing import Iterable, Mapping, Sequence

import flint

Scalar = int | Fraction
Exponent = tuple[int, ...]

DEFAULT_TERM_BUDGET = 10**6


def as_fraction(value) -> Fraction:
    """Coerce an int, Fraction or ``'p/q'`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"not an exact scalar: {value!r}")


def normalize(value: Scalar) -> Scalar:
    """Return ``value`` as an int when it is integral."""
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def compositions_count(s: int, parts: int) -> int:
    """Number of ways to write ``s`` as an ordered sum of ``parts`` nonnegative integers."""
    if s < 0 or parts < 0:
        return 0
    if parts == 0:
        return 1 if s == 0 else 0
    return comb(s + parts - 1, s)


def compositions(s: int, parts: int):
    """Yield every ordered tuple of ``parts`` nonnegative integers summing to ``s``."""
    if parts == 0:
        if s == 0:
            yield ()
        return
    if parts == 1:
        yield (s,)
        return
    for first in range(s, -1, -1):
        for rest in compositions(s - first, parts - 1):
            yield (first,) + rest


def monomials_of_degree(nvars: int, d: int) -> list[Exponent]:
    """Exponent vectors of total degree ``d`` in lexicographically decreasing order."""
    return list(compositions(d, nvars))


# ---------------------------------------------------------------------------
# linear algebra


@dataclass(frozen=True)
class RREF:
    rank: int
    reduced: list[list[Fraction]]
    pivots: tuple[int, ...]
    kernel: list[list[Fraction]]


def rref(matrix: Sequence[Sequence[Scalar]], ncols: int | None = None) -> RREF:
    """Reduced row echelon form over the rationals.

    ``ncols`` is only needed for a matrix with no rows.  The kernel basis has
    one vector per free column, with a 1 in that column.
    """
    rows = [[as_fraction(x) for x in row] for row in matrix]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if any(len(row) != ncols for row in rows):
        raise ValueError("ragged matrix")
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    reduced = rows[:r]
    free = [c for c in range(ncols) if c not in set(pivots)]
    kernel = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            v[pc] = -row[fc]
        kernel.append(v)
    return RREF(r, reduced, tuple(pivots), kernel)


def integer_rows(rows: Iterable[Sequence[Scalar]]) -> list[list[int]]:
    """Scale each row by the lcm of its denominators; the row space is unchanged."""
    out = []
    for row in rows:
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        out.append([int(x * den) for x in row])
    return out


def primitive(vector: Sequence[Scalar]) -> tuple[int, ...]:
    """Integer, content-1 multiple of a nonzero vector with first nonzero entry positive."""
    (ints,) = integer_rows([vector])
    g = 0
    for x in ints:
        g = _gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive scaling")
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        g = -g
    return tuple(x // g for x in ints)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def rank(matrix: Sequence[Sequence[Scalar]]) -> int:
    """Exact rank; FLINT-backed so that matrices with thousands of rows stay cheap."""
    rows = [row for row in matrix if any(x != 0 for x in row)]
    if not rows:
        return 0
    return flint.fmpz_mat(integer_rows(rows)).rank()


# ---------------------------------------------------------------------------
# truncated series


class SeriesBudgetError(ArithmeticError):
    """Raised when a series operation would store more terms than allowed."""


class Series:
    """Sparse multivariate polynomial or truncated power series over the rationals.

    Truncation is a map from a group of variable names to a bound on the total
    degree in that group; a term is kept only if every bound holds.  A single
    variable group is an ordinary per-variable bound.  Combining two series
    keeps every bound of both, so results are never silently extended.
    """

    __slots__ = ("vars", "terms", "trunc", "budget")

    def __init__(
        self,
        terms: Mapping[Exponent, Scalar] | None = None,
        vars: Sequence[str] = (),
        trunc: Mapping | None = None,
        budget: int = DEFAULT_TERM_BUDGET,
    ):
        self.vars = tuple(vars)
        if len(set(self.vars)) != len(self.vars):
            raise ValueError("duplicate variable names")
        self.trunc = _normalize_trunc(trunc or {}, self.vars)
        self.budget = budget
        groups = self._groups()
        clean = {}
        for exp, c in (terms or {}).items():
            if len(exp) != len(self.vars):
                raise ValueError("exponent length does not match variables")
            if c != 0 and _fits(exp, groups):
                clean[tuple(exp)] = normalize(c)
        self.terms = clean
        self._check_budget()

    # construction helpers -------------------------------------------------

    @classmethod
    def constant(cls, c: Scalar, vars: Sequence[str] = (), trunc=None, budget=DEFAULT_TERM_BUDGET):
        vars = tuple(vars)
        return cls({(0,) * len(vars): c}, vars, trunc, budget)

    @classmethod
    def gen(cls, name: str, vars: Sequence[str] | None = None, trunc=None, budget=DEFAULT_TERM_BUDGET):
        vars = tuple(vars) if vars is not None else (name,)
        exp = tuple(1 if v == name else 0 for v in vars)
        return cls({exp: 1}, vars, trunc, budget)

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[Scalar], var: str = "q", trunc: int | None = None):
        t = {var: trunc} if trunc is not None else None
        return cls({(i,): c for i, c in enumerate(coeffs)}, (var,), t)

    def _groups(self):
        return [(tuple(self.vars.index(v) for v in names), bound) for names, bound in self.trunc.items()]

    def _check_budget(self):
        if len(self.terms) > self.budget:
            raise SeriesBudgetError(f"series has {len(self.terms)} terms, budget is {self.budget}")

    def _new(self, terms, vars=None, trunc=None, budget=None) -> "Series":
        s = Series.__new__(Series)
        s.vars = self.vars if vars is None else vars
        s.trunc = self.trunc if trunc is None else trunc
        s.budget = self.budget if budget is None else budget
        s.terms = terms
        s._check_budget()
        return s

    # alignment ------------------------------------------------------------

    def _coerce(self, other) -> "Series":
        if isinstance(other, Series):
            return other
        if isinstance(other, (int, Fraction)):
            return Series.constant(other, self.vars, budget=self.budget)
        return NotImplemented

    def extend_vars(self, vars: Sequence[str]) -> "Series":
        """Same series viewed in a superset of variables (new ones appended in order)."""
        new = self.vars + tuple(v for v in vars if v not in self.vars)
        if new == self.vars:
            return self
        pad = (0,) * (len(new) - len(self.vars))
        return self._new({e + pad: c for e, c in self.terms.items()}, vars=new)

    def reorder(self, vars: Sequence[str]) -> "Series":
        vars = tuple(vars)
        if vars == self.vars:
            return self
        extra = [v for v in self.vars if v not in vars]
        if extra:
            raise ValueError(f"variables {extra} missing from new order")
        base = self.extend_vars(vars)
        idx = [base.vars.index(v) for v in vars]
        return base._new({tuple(e[i] for i in idx): c for e, c in base.terms.items()}, vars=vars)

    def _align(self, other: "Series"):
        a = self.extend_vars(other.vars)
        b = other.reorder(a.vars) if set(other.vars) <= set(a.vars) else other
        b = b.reorder(a.vars)
        trunc = dict(a.trunc)
        for names, bound in b.trunc.items():
            trunc[names] = min(bound, trunc.get(names, bound))
        return a, b, trunc, min(a.budget, b.budget)

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, trunc, budget = self._align(other)
        terms = dict(a.terms)
        for e, c in b.terms.items():
            v = terms.get(e, 0) + c
            if v == 0:
                terms.pop(e, None)
            else:
                terms[e] = normalize(v)
        return a._new(terms, trunc=trunc, budget=budget).truncated()

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return self._new({})
            return self._new({e: normalize(c * other) for e, c in self.terms.items()})
        if not isinstance(other, Series):
            return NotImplemented
        a, b, trunc, budget = self._align(other)
        groups = [(tuple(a.vars.index(v) for v in names), bound) for names, bound in trunc.items()]
        terms: dict[Exponent, Scalar] = {}
        bterms = list(b.terms.items())
        for ea, ca in a.terms.items():
            for eb, cb in bterms:
                e = tuple(x + y for x, y in zip(ea, eb))
                if groups and not _fits(e, groups):
                    continue
                terms[e] = terms.get(e, 0) + ca * cb
            if len(terms) > budget:
                raise SeriesBudgetError(f"product exceeds term budget {budget}")
        terms = {e: normalize(c) for e, c in terms.items() if c != 0}
        return a._new(terms, trunc=trunc, budget=budget)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / as_fraction(other))
        other = self._coerce(other)
        return self * other.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = Series.constant(1, self.vars, self.trunc, self.budget)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def truncated(self) -> "Series":
        groups = self._groups()
        if not groups:
            return self
        return self._new({e: c for e, c in self.terms.items() if _fits(e, groups)})

    def with_truncation(self, trunc: Mapping) -> "Series":
        """Add truncation bounds (never loosens existing ones)."""
        merged = dict(self.trunc)
        for names, bound in _normalize_trunc(trunc, self.vars).items():
            merged[names] = min(bound, merged.get(names, bound))
        return self._new(dict(self.terms), trunc=merged).truncated()

    def without_truncation(self) -> "Series":
        """Forget the bounds and treat the stored terms as an exact polynomial."""
        return self._new(dict(self.terms), trunc={})

    def inverse(self) -> "Series":
        """Multiplicative inverse of a series with nonzero constant term."""
        zero = (0,) * len(self.vars)
        c0 = self.terms.get(zero, 0)
        if c0 == 0:
            raise ZeroDivisionError("cannot invert a series with zero constant term")
        groups = self._groups()
        for e in self.terms:
            if e != zero and not any(sum(e[i] for i in idx) > 0 for idx, _ in groups):
                raise ValueError("inverse is infinite: a non-constant term escapes every truncation bound")
        inv_c0 = Fraction(1) / as_fraction(c0)
        u = self._new({e: normalize(-c * inv_c0) for e, c in self.terms.items() if e != zero})
        total = Series.constant(1, self.vars, self.trunc, self.budget)
        power = total
        while True:
            power = power * u
            if not power.terms:
                break
            total = total + power
        return total * inv_c0

    def substitute(self, var: str, value) -> "Series":
        """Replace ``var`` by ``value`` (a Series or scalar).

        When ``var`` is under a truncation bound the result keeps that bound, now
        applied to the group's remaining variables plus those of ``value``; this is
        exact provided every term of ``value`` has positive degree in that new group.
        """
        if var not in self.vars:
            return self
        if not isinstance(value, Series):
            value = Series.constant(value, ())
        pos = self.vars.index(var)
        rest = self.vars[:pos] + self.vars[pos + 1 :]
        new_vars = rest + tuple(v for v in value.vars if v not in rest)
        vidx = [new_vars.index(v) for v in value.vars]
        trunc = {}
        for names, bound in self.trunc.items():
            if var not in names:
                trunc[names] = bound
                continue
            group = tuple(sorted((set(names) - {var}) | set(value.vars)))
            for e in value.terms:
                if sum(x for v, x in zip(value.vars, e) if v in group) == 0:
                    raise ValueError(f"substituting into truncated variable {var!r} would lose exactness")
            trunc[group] = min(bound, trunc.get(group, bound))
        for names, bound in value.trunc.items():
            trunc[names] = min(bound, trunc.get(names, bound))
        value = value._new(value.terms, trunc={})
        result = Series({}, new_vars, trunc, min(self.budget, value.budget))
        by_power: dict[int, dict[Exponent, Scalar]] = {}
        for e, c in self.terms.items():
            by_power.setdefault(e[pos], {})[e[:pos] + e[pos + 1 :]] = c
        pad = (0,) * (len(new_vars) - len(rest))
        vpow = Series.constant(1, value.vars)
        for p in range(max(by_power, default=-1) + 1):
            if p in by_power:
                lifted = {}
                for e, c in vpow.terms.items():
                    full = [0] * len(new_vars)
                    for i, x in zip(vidx, e):
                        full[i] = x
                    lifted[tuple(full)] = c
                part = Series({e + pad: c for e, c in by_power[p].items()}, new_vars, trunc, result.budget)
                result = result + part * Series(lifted, new_vars, trunc, result.budget)
            vpow = vpow * value
        return result

    def coefficient(self, var: str, power: int) -> "Series":
        """Coefficient of ``var**power`` as a series in the remaining variables."""
        pos = self.vars.index(var)
        rest = self.vars[:pos] + self.vars[pos + 1 :]
        trunc = {}
        for names, bound in self.trunc.items():
            if var in names:
                left = tuple(n for n in names if n != var)
                if bound - power < 0:
                    return Series({}, rest)
                if left:
                    trunc[left] = min(bound - power, trunc.get(left, bound - power))
            else:
                trunc[names] = bound
        terms = {e[:pos] + e[pos + 1 :]: c for e, c in self.terms.items() if e[pos] == power}
        return self._new(terms, vars=rest, trunc=trunc)

    def divide_monomial(self, exponents: Mapping[str, int]) -> "Series":
        """Exact division by a monomial; raises if some term is not divisible."""
        shift = [exponents.get(v, 0) for v in self.vars]
        if any(v not in self.vars for v in exponents if exponents[v]):
            raise ValueError("monomial uses unknown variables")
        terms = {}
        for e, c in self.terms.items():
            new = tuple(x - s for x, s in zip(e, shift))
            if min(new, default=0) < 0:
                raise ValueError("series is not divisible by the monomial")
            terms[new] = c
        trunc = {}
        for names, bound in self.trunc.items():
            drop = sum(exponents.get(v, 0) for v in names)
            trunc[names] = bound - drop
        return self._new(terms, trunc=trunc).truncated()

    # inspection -----------------------------------------------------------

    def constant_term(self) -> Scalar:
        return self.terms.get((0,) * len(self.vars), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self, var: str | None = None) -> int:
        """Total degree (or degree in ``var``); -1 for the zero series."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        if var not in self.vars:
            return 0
        pos = self.vars.index(var)
        return max(e[pos] for e in self.terms)

    def coefficients(self, var: str | None = None) -> list[Scalar]:
        """Dense coefficient list of a univariate series."""
        if var is None:
            if len(self.vars) > 1:
                raise ValueError("name the variable of a multivariate series")
            var = self.vars[0] if self.vars else None
        if not self.terms:
            return []
        if var is None:
            return [self.constant_term()]
        pos = self.vars.index(var)
        if any(x for e in self.terms for i, x in enumerate(e) if i != pos):
            raise ValueError("series depends on other variables")
        out = [0] * (self.degree(var) + 1)
        for e, c in self.terms.items():
            out[e[pos]] = c
        return out

    def evaluate(self, values: Mapping[str, Scalar]) -> Scalar:
        total: Scalar = 0
        for e, c in self.terms.items():
            term = c
            for v, x in zip(self.vars, e):
                if x:
                    term *= as_fraction(values[v]) ** x
            total += term
        return normalize(total)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Series.constant(other, self.vars)
        if not isinstance(other, Series):
            return NotImplemented
        a, b, trunc, _ = self._align(other)
        groups = [(tuple(a.vars.index(v) for v in names), bound) for names, bound in trunc.items()]
        ta = {e: c for e, c in a.terms.items() if _fits(e, groups)}
        tb = {e: c for e, c in b.terms.items() if _fits(e, groups)}
        return ta == tb

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        body = format_terms(self.terms, self.vars)
        if self.trunc:
            bounds = ", ".join(f"{'+'.join(n)}<={b}" for n, b in sorted(self.trunc.items()))
            return f"Series({body}; {bounds})"
        return f"Series({body})"

    def __str__(self):
        return format_terms(self.terms, self.vars)


def _normalize_trunc(trunc: Mapping, vars: Sequence[str]) -> dict[tuple[str, ...], int]:
    out: dict[tuple[str, ...], int] = {}
    for key, bound in trunc.items():
        names = (key,) if isinstance(key, str) else tuple(key)
        names = tuple(sorted(names))
        missing = [n for n in names if n not in vars]
        if missing:
            raise ValueError(f"truncation names unknown variables {missing}")
        if bound < 0:
            raise ValueError("truncation bounds must be nonnegative")
        out[names] = min(bound, out.get(names, bound))
    return out


def _fits(exp: Exponent, groups) -> bool:
    for idx, bound in groups:
        s = 0
        for i in idx:
            s += exp[i]
        if s > bound:
            return False
    return True


def format_terms(terms: Mapping[Exponent, Scalar], vars: Sequence[str]) -> str:
    """Human-readable sum, highest total degree first."""
    if not terms:
        return "0"
    pieces = []
    for e in sorted(terms, key=lambda e: (sum(e), e), reverse=True):
        c = terms[e]
        mono = "*".join(f"{v}^{x}" if x > 1 else v for v, x in zip(vars, e) if x)
        if not mono:
            pieces.append(str(c))
        elif c == 1:
            pieces.append(mono)
        elif c == -1:
            pieces.append("-" + mono)
        else:
            pieces.append(f"{c}*{mono}")
    return " + ".join(pieces).replace("+ -", "- ")


def series_vars(names: str | Sequence[str], trunc=None, budget: int = DEFAULT_TERM_BUDGET) -> tuple[Series, ...]:
    """Generators sharing one variable list and truncation, e.g. ``q, z = series_vars("q z", {"z": 3})``."""
    names = names.split() if isinstance(names, str) else list(names)
    return tuple(Series.gen(n, names, trunc, budget) for n in names)


def geometric(x: Series) -> Series:
    """1/(1 - x) for a series ``x`` without constant term."""
    return (1 - x).inverse()
