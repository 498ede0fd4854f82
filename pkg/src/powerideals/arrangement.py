"""Vector configurations: the covectors of a central hyperplane arrangement.

A configuration is an ordered list of covectors l_1..l_n in the dual of
V = Q^dim.  Element indices are 0-based throughout the Python API.  Repeated
covectors and zero covectors (loops) are allowed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence

from .exactmath import as_fraction, primitive, rref

Vector = tuple[Fraction, ...]


class ArrangementFormatError(ValueError):
    """A malformed arrangement file; the message carries the line number."""


@dataclass(frozen=True)
class Flat:
    """An intersection X of hyperplanes, with the elements whose hyperplane contains X."""

    basis: tuple[Vector, ...]
    containing_set: frozenset[int]
    rho: int

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass(frozen=True, eq=False)
class VectorConfiguration:
    ambient_dim: int
    covectors: tuple[Vector, ...]
    labels: tuple[str, ...] | None = None
    _rank_cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if self.ambient_dim < 0:
            raise ValueError("ambient dimension must be nonnegative")
        covs = tuple(tuple(as_fraction(x) for x in c) for c in self.covectors)
        for c in covs:
            if len(c) != self.ambient_dim:
                raise ValueError(f"covector {c} does not have length {self.ambient_dim}")
        object.__setattr__(self, "covectors", covs)
        if self.labels is not None and len(self.labels) != len(covs):
            raise ValueError("one label per covector")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], dim: int | None = None, labels=None) -> "VectorConfiguration":
        rows = [tuple(r) for r in rows]
        if dim is None:
            if not rows:
                raise ValueError("dimension required for an empty configuration")
            dim = len(rows[0])
        return cls(dim, tuple(rows), labels)

    def __eq__(self, other):
        if not isinstance(other, VectorConfiguration):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.covectors == other.covectors

    def __hash__(self):
        return hash((self.ambient_dim, self.covectors))

    def __len__(self):
        return len(self.covectors)

    def __repr__(self):
        rows = ", ".join("(" + ",".join(str(x) for x in c) + ")" for c in self.covectors)
        return f"VectorConfiguration(dim={self.ambient_dim}, [{rows}])"

    # matroid data ---------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.covectors)

    @property
    def ground_set(self) -> range:
        return range(self.n)

    def rank(self, subset: Iterable[int] | None = None) -> int:
        """Rank of the span of the chosen covectors (all of them by default)."""
        key = frozenset(self.ground_set if subset is None else subset)
        cached = self._rank_cache.get(key)
        if cached is None:
            for i in key:
                if not 0 <= i < self.n:
                    raise IndexError(f"element {i} out of range")
            rows = [self.covectors[i] for i in sorted(key)]
            cached = rref(rows, self.ambient_dim).rank if rows else 0
            self._rank_cache[key] = cached
        return cached

    @property
    def r(self) -> int:
        return self.rank()

    @property
    def excess(self) -> int:
        """Excess dimension m = dim V - rank."""
        return self.ambient_dim - self.r

    def is_essential(self) -> bool:
        return self.r == self.ambient_dim

    def is_loop(self, i: int) -> bool:
        return all(x == 0 for x in self.covectors[i])

    def is_coloop(self, i: int) -> bool:
        return self.rank(set(self.ground_set) - {i}) < self.r

    def loops(self) -> list[int]:
        return [i for i in self.ground_set if self.is_loop(i)]

    def coloops(self) -> list[int]:
        return [i for i in self.ground_set if self.is_coloop(i)]

    def bases(self) -> list[tuple[int, ...]]:
        """All bases as sorted index tuples, in lexicographic order."""
        r = self.r
        return [B for B in combinations(self.ground_set, r) if self.rank(B) == r]

    def is_basis(self, B: Iterable[int]) -> bool:
        B = tuple(sorted(set(B)))
        return len(B) == self.r and self.rank(B) == self.r

    def closure(self, subset: Iterable[int]) -> frozenset[int]:
        subset = set(subset)
        base = self.rank(subset)
        return frozenset(i for i in self.ground_set if i in subset or self.rank(subset | {i}) == base)

    # minors ---------------------------------------------------------------

    def delete(self, i: int) -> "VectorConfiguration":
        keep = [j for j in self.ground_set if j != i]
        return self.restrict(keep)

    def restrict(self, elements: Iterable[int]) -> "VectorConfiguration":
        """Sub-configuration on the given elements, in the given order."""
        elements = list(elements)
        labels = tuple(self.labels[j] for j in elements) if self.labels else None
        return VectorConfiguration(self.ambient_dim, tuple(self.covectors[j] for j in elements), labels)

    def contract(self, i: int, pivot: int | None = None) -> "VectorConfiguration":
        """Images of the other covectors in V*/l_i.

        The coordinate ``pivot`` (default: the first nonzero coordinate of l_i) is
        eliminated, which is the same as restricting the forms to H_i.
        """
        li = self.covectors[i]
        if all(x == 0 for x in li):
            raise ValueError(f"cannot contract loop {i}")
        if pivot is None:
            pivot = next(p for p, x in enumerate(li) if x != 0)
        if li[pivot] == 0:
            raise ValueError("pivot coordinate of the contracted covector is zero")
        rows = []
        for j in self.ground_set:
            if j == i:
                continue
            lj = self.covectors[j]
            f = lj[pivot] / li[pivot]
            rows.append(tuple(a - f * b for p, (a, b) in enumerate(zip(lj, li)) if p != pivot))
        labels = tuple(l for j, l in enumerate(self.labels) if j != i) if self.labels else None
        return VectorConfiguration(self.ambient_dim - 1, tuple(rows), labels)

    def expand_multiset(self, a: Sequence[int]) -> "VectorConfiguration":
        """The configuration with l_i repeated a_i times, grouped by i."""
        if len(a) != self.n:
            raise ValueError("multiplicity vector must have one entry per element")
        if any(x < 0 for x in a):
            raise ValueError("multiplicities must be nonnegative")
        rows = [self.covectors[i] for i in self.ground_set for _ in range(a[i])]
        return VectorConfiguration(self.ambient_dim, tuple(rows))

    # geometry -------------------------------------------------------------

    def evaluate(self, i: int, h: Sequence) -> Fraction:
        return sum((x * as_fraction(y) for x, y in zip(self.covectors[i], h)), Fraction(0))

    def directional_degree(self, h: Sequence) -> int:
        """Number of covectors not vanishing at h, i.e. hyperplanes not containing h."""
        if len(h) != self.ambient_dim:
            raise ValueError("direction has the wrong length")
        if all(as_fraction(x) == 0 for x in h):
            raise ValueError("direction must be nonzero")
        return sum(1 for i in self.ground_set if self.evaluate(i, h) != 0)

    def flats(self, min_dim: int = 1) -> list[Flat]:
        """All intersections of hyperplanes of dimension >= min_dim, V itself included.

        Flats are the closures of independent sets; the subspace of a closed set S is
        the common kernel of its covectors, stored as the rref of a kernel basis.
        Ordered by decreasing dimension, then by containing set.
        """
        seen: dict[frozenset[int], Flat] = {}
        for size in range(self.r + 1):
            if self.ambient_dim - size < min_dim:
                break
            for S in combinations(self.ground_set, size):
                if self.rank(S) != size:
                    continue
                cl = self.closure(S)
                if cl in seen:
                    continue
                rows = [self.covectors[i] for i in sorted(cl)]
                kernel = rref(rows, self.ambient_dim).kernel
                basis = tuple(tuple(row) for row in rref(kernel, self.ambient_dim).reduced)
                seen[cl] = Flat(basis, cl, self.n - len(cl))
        return sorted(seen.values(), key=lambda f: (-f.dim, sorted(f.containing_set)))

    def lines(self) -> list[tuple[int, ...]]:
        """One primitive integer direction per 1-dimensional flat.

        Ordered by support size, then lexicographically decreasing, so coordinate
        directions come first as e_1, e_2, ...
        """
        if not self.is_essential():
            raise ValueError("lines are only defined for an essential configuration")
        out = [primitive(f.basis[0]) for f in self.flats(min_dim=1) if f.dim == 1]
        return sorted(out, key=lambda v: (sum(1 for x in v if x), tuple(-x for x in v)))

    def signature(self) -> tuple:
        """Exact, order-respecting key for the matroid: the rref of the column matrix.

        Two configurations whose covector matrices have the same row space (with
        covectors as columns) have the same matroid with the same labelling.
        """
        cols = [[self.covectors[j][i] for j in self.ground_set] for i in range(self.ambient_dim)]
        red = rref(cols, self.n).reduced if cols else []
        return (self.n, tuple(tuple(row) for row in red))


# ---------------------------------------------------------------------------
# families


def boolean(n: int, m: int = 0) -> VectorConfiguration:
    """Coordinate covectors e_1..e_n in dimension n + m."""
    if n < 0 or m < 0:
        raise ValueError("boolean(n, m) needs n, m >= 0")
    dim = n + m
    return VectorConfiguration(dim, tuple(tuple(int(i == j) for j in range(dim)) for i in range(n)))


def braid(n: int) -> VectorConfiguration:
    """Covectors e_i - e_j for i < j in dimension n."""
    if n < 1:
        raise ValueError("braid(n) needs n >= 1")
    return graphic([(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)], n)


def graphic(edges: Sequence[tuple[int, int]], num_vertices: int | None = None) -> VectorConfiguration:
    """Covector e_u - e_v for each edge (u, v); vertices are 1-based."""
    if not edges and num_vertices is None:
        raise ValueError("empty edge list needs num_vertices")
    for e in edges:
        if len(e) != 2 or min(e) < 1:
            raise ValueError(f"malformed edge {e!r}")
    dim = num_vertices if num_vertices is not None else max(max(e) for e in edges)
    if edges and max(max(e) for e in edges) > dim:
        raise ValueError("edge uses a vertex beyond num_vertices")
    rows = []
    for u, v in edges:
        row = [0] * dim
        row[u - 1] += 1
        row[v - 1] -= 1
        rows.append(tuple(row))
    return VectorConfiguration(dim, tuple(rows))


def uniform_2_3() -> VectorConfiguration:
    """Three generic lines through the origin of the plane."""
    return VectorConfiguration.from_rows([(1, 0), (0, 1), (1, 1)])


def example_g() -> VectorConfiguration:
    """y1, y2, y3, y2, y1 - y2 in dimension 3 (the second form is listed twice)."""
    return VectorConfiguration.from_rows([(1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 1, 0), (1, -1, 0)])


def example_k_minus_3() -> VectorConfiguration:
    """y1+y2, y2, -y1+y2, y1+y3, y3, -y1+y3: its k = -3 inverse system is span(1, y1)."""
    return VectorConfiguration.from_rows(
        [(1, 1, 0), (0, 1, 0), (-1, 1, 0), (1, 0, 1), (0, 0, 1), (-1, 0, 1)]
    )


def corpus() -> dict[str, VectorConfiguration]:
    """The reference configurations used by ``verify --corpus`` and the tests."""
    return {
        "B2": boolean(2, 0),
        "U23": uniform_2_3(),
        "braid3": braid(3),
        "braid4": braid(4),
        "boolean21": boolean(2, 1),
        "G": example_g(),
        "kminus3": example_k_minus_3(),
        "U23_211": uniform_2_3().expand_multiset((2, 1, 1)),
    }


# ---------------------------------------------------------------------------
# file format


def parse_arrangement(text: str, source: str = "<string>") -> VectorConfiguration:
    """Parse ``dim D`` followed by one covector per line; ``#`` starts a comment line."""
    dim = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if dim is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "dim":
                raise ArrangementFormatError(f"{source}:{lineno}: expected 'dim D', got {line!r}")
            try:
                dim = int(parts[1])
            except ValueError:
                raise ArrangementFormatError(f"{source}:{lineno}: dimension must be an integer") from None
            if dim < 1:
                raise ArrangementFormatError(f"{source}:{lineno}: dimension must be positive")
            continue
        parts = line.split()
        if len(parts) != dim:
            raise ArrangementFormatError(f"{source}:{lineno}: expected {dim} entries, found {len(parts)}")
        try:
            rows.append(tuple(Fraction(p) for p in parts))
        except (ValueError, ZeroDivisionError):
            raise ArrangementFormatError(f"{source}:{lineno}: malformed rational in {line!r}") from None
    if dim is None:
        raise ArrangementFormatError(f"{source}: missing 'dim D' line")
    return VectorConfiguration(dim, tuple(rows))


def read_arrangement(path: str | Path) -> VectorConfiguration:
    path = Path(path)
    return parse_arrangement(path.read_text(encoding="utf-8"), str(path))


def format_arrangement(cfg: VectorConfiguration, comment: str | None = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines.append(f"dim {cfg.ambient_dim}")
    lines += [" ".join(str(x) for x in c) for c in cfg.covectors]
    return "\n".join(lines) + "\n"


def parse_family(spec: str) -> VectorConfiguration:
    """Inline specs: ``braid:4``, ``boolean:3,1``, ``graphic:1-2,2-3,1-3``, ``corpus:G``."""
    if ":" not in spec:
        raise ValueError(f"not a family spec: {spec!r}")
    name, _, arg = spec.partition(":")
    try:
        if name == "braid":
            return braid(int(arg))
        if name == "boolean":
            parts = [int(x) for x in arg.split(",")]
            if len(parts) not in (1, 2):
                raise ValueError
            return boolean(*parts)
        if name == "graphic":
            edges = []
            for e in arg.split(","):
                u, v = e.split("-")
                edges.append((int(u), int(v)))
            return graphic(edges)
        if name == "corpus":
            return corpus()[arg]
    except (ValueError, KeyError):
        raise ValueError(f"malformed family spec {spec!r}") from None
    raise ValueError(f"unknown family {name!r}")
