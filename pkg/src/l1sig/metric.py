"""Finite (semi)metrics on V_n = {1, ..., n} and rational point configurations.

Vertices are labelled 1..n throughout the package. A metric is stored as its
strict upper triangle in row-major order: d(1,2), d(1,3), ..., d(n-1,n).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterator, Sequence

from .errors import FormatError, MetricError

_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+)?\Z")


def parse_rational(token: str) -> Fraction:
    """Parse an integer ``p`` or a rational ``p/q`` with ``q > 0``."""
    if not _RATIONAL.match(token):
        raise FormatError(f"not a rational number: {token!r}")
    if "/" in token:
        num, den = token.split("/")
        if int(den) == 0:
            raise FormatError(f"zero denominator: {token!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(token))


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def num_pairs(n: int) -> int:
    return n * (n - 1) // 2


def pair_index(n: int, i: int, j: int) -> int:
    """Position of the pair {i, j} (1-based, i != j) in upper-triangle order."""
    if i > j:
        i, j = j, i
    if not 1 <= i < j <= n:
        raise IndexError(f"bad pair ({i}, {j}) for n={n}")
    return (i - 1) * (2 * n - i) // 2 + (j - i - 1)


def pairs(n: int) -> Iterator[tuple[int, int]]:
    """All pairs 1 <= i < j <= n in storage order."""
    return combinations(range(1, n + 1), 2)


def normalize_p(p) -> float | int:
    """Map the accepted spellings of the exponent onto ``1`` or ``math.inf``."""
    if isinstance(p, str):
        p = p.strip().lower()
        if p == "1":
            return 1
        if p in ("inf", "infinity", "oo"):
            return math.inf
    elif p == 1:
        return 1
    elif p == math.inf:
        return math.inf
    raise ValueError(f"only p=1 and p=inf are supported, got {p!r}")


def _check_permutation(perm: Sequence[int], n: int) -> None:
    if sorted(perm) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {perm!r}")


@dataclass(frozen=True)
class FiniteMetric:
    """Symmetric matrix with zero diagonal and rational entries.

    Only structural well-formedness is enforced on construction; use
    :func:`validate` for the metric axioms.
    """

    n: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise MetricError(f"need n >= 2, got {self.n!r}")
        entries = tuple(Fraction(x) for x in self.entries)
        if len(entries) != num_pairs(self.n):
            raise MetricError(
                f"expected {num_pairs(self.n)} entries for n={self.n}, got {len(entries)}"
            )
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence]) -> FiniteMetric:
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise MetricError("matrix is not square")
        for i in range(n):
            if Fraction(rows[i][i]) != 0:
                raise MetricError(f"nonzero diagonal entry at ({i + 1}, {i + 1})")
            for j in range(i + 1, n):
                if Fraction(rows[i][j]) != Fraction(rows[j][i]):
                    raise MetricError(f"asymmetric at ({i + 1}, {j + 1})")
        return cls(n, tuple(rows[i - 1][j - 1] for i, j in pairs(n)))

    @classmethod
    def from_function(cls, n: int, fn: Callable[[int, int], object]) -> FiniteMetric:
        return cls(n, tuple(fn(i, j) for i, j in pairs(n)))

    @classmethod
    def uniform(cls, n: int, value=1) -> FiniteMetric:
        return cls(n, (Fraction(value),) * num_pairs(n))

    @classmethod
    def zero(cls, n: int) -> FiniteMetric:
        return cls.uniform(n, 0)

    def __call__(self, i: int, j: int) -> Fraction:
        if i == j:
            return Fraction(0)
        return self.entries[pair_index(self.n, i, j)]

    def matrix(self) -> list[list[Fraction]]:
        m = [[Fraction(0)] * self.n for _ in range(self.n)]
        for (i, j), v in zip(pairs(self.n), self.entries):
            m[i - 1][j - 1] = m[j - 1][i - 1] = v
        return m

    def items(self) -> Iterator[tuple[tuple[int, int], Fraction]]:
        return zip(pairs(self.n), self.entries)

    def scaled(self, factor) -> FiniteMetric:
        factor = Fraction(factor)
        return FiniteMetric(self.n, tuple(factor * x for x in self.entries))

    def __add__(self, other: FiniteMetric) -> FiniteMetric:
        if not isinstance(other, FiniteMetric):
            return NotImplemented
        if other.n != self.n:
            raise MetricError("cannot add metrics on different vertex sets")
        return FiniteMetric(self.n, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def relabeled(self, perm: Sequence[int]) -> FiniteMetric:
        """The metric sigma.d with (sigma.d)(sigma(i), sigma(j)) = d(i, j).

        ``perm[i - 1]`` is the new label of vertex ``i``.
        """
        _check_permutation(perm, self.n)
        inverse = [0] * self.n
        for old, new in enumerate(perm, start=1):
            inverse[new - 1] = old
        return FiniteMetric.from_function(
            self.n, lambda a, b: self(inverse[a - 1], inverse[b - 1])
        )

    def is_zero(self) -> bool:
        return not any(self.entries)

    def has_zero_distance(self) -> bool:
        return any(x == 0 for x in self.entries)


@dataclass(frozen=True)
class PointConfig:
    """``n`` points in Q^m, listed in vertex order."""

    points: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        pts = tuple(tuple(Fraction(c) for c in p) for p in self.points)
        if len(pts) < 1:
            raise ValueError("a point configuration needs at least one point")
        if len({len(p) for p in pts}) != 1:
            raise ValueError("points have different dimensions")
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def m(self) -> int:
        return len(self.points[0])

    def has_duplicates(self) -> bool:
        return len(set(self.points)) != len(self.points)

    def scaled(self, factor) -> PointConfig:
        factor = Fraction(factor)
        return PointConfig(tuple(tuple(factor * c for c in p) for p in self.points))

    def relabeled(self, perm: Sequence[int]) -> PointConfig:
        """Move point ``i`` to position ``perm[i - 1]``."""
        _check_permutation(perm, self.n)
        out = [None] * self.n
        for old, new in enumerate(perm):
            out[new - 1] = self.points[old]
        return PointConfig(tuple(out))


def distance(x: Sequence[Fraction], y: Sequence[Fraction], p=1) -> Fraction:
    p = normalize_p(p)
    diffs = [abs(a - b) for a, b in zip(x, y)]
    if not diffs:
        return Fraction(0)
    return sum(diffs, Fraction(0)) if p == 1 else max(diffs)


def metric_from_points(X: PointConfig, p=1) -> FiniteMetric:
    """Exact pairwise l_1 or l_inf distances of a rational point set."""
    p = normalize_p(p)
    if X.n < 2:
        raise MetricError("need at least two points")
    pts = X.points
    return FiniteMetric(X.n, tuple(distance(pts[i - 1], pts[j - 1], p) for i, j in pairs(X.n)))


# -- validation --------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    """One violated axiom.

    ``kind`` is ``"nonnegativity"``, ``"positivity"`` or ``"triangle"``. For a
    triangle violation ``indices == (i, j, k)`` means d(i,k) > d(i,j) + d(j,k).
    """

    kind: str
    indices: tuple[int, ...]

    def __str__(self):
        return f"{self.kind} {' '.join(map(str, self.indices))}"


@dataclass(frozen=True)
class ValidationReport:
    mode: str
    violations: tuple[Violation, ...]

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.valid


def validate(d: FiniteMetric, mode: str = "metric") -> ValidationReport:
    """Check nonnegativity, positivity (``mode="metric"`` only) and every triangle."""
    if mode not in ("metric", "semimetric"):
        raise ValueError(f"mode must be 'metric' or 'semimetric', got {mode!r}")
    found = []
    for (i, j), v in d.items():
        if v < 0:
            found.append(Violation("nonnegativity", (i, j)))
        elif v == 0 and mode == "metric":
            found.append(Violation("positivity", (i, j)))
    n = d.n
    rows = d.matrix()
    for i in range(n):
        for k in range(i + 1, n):
            dik = rows[i][k]
            for j in range(n):
                if j != i and j != k and dik > rows[i][j] + rows[j][k]:
                    found.append(Violation("triangle", (i + 1, j + 1, k + 1)))
    return ValidationReport(mode, tuple(found))


def require(d: FiniteMetric, mode: str) -> None:
    report = validate(d, mode)
    if not report.valid:
        shown = "; ".join(str(v) for v in report.violations[:5])
        raise MetricError(f"not a valid {mode}: {shown}")


# -- file formats -------------------------------------------------------------


def _lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip()]


def _ints(line: str, count: int, what: str) -> list[int]:
    parts = line.split()
    if len(parts) != count or not all(re.fullmatch(r"[+-]?\d+", t) for t in parts):
        raise FormatError(f"expected {count} integer(s) for {what}, got {line!r}")
    return [int(t) for t in parts]


def format_metric(d: FiniteMetric) -> str:
    return f"{d.n}\n{' '.join(format_rational(x) for x in d.entries)}\n"


def parse_metric(text: str) -> FiniteMetric:
    lines = _lines(text)
    if not lines:
        raise FormatError("empty metric file")
    (n,) = _ints(lines[0], 1, "metric header")
    if n < 2:
        raise FormatError(f"metric needs n >= 2, got {n}")
    tokens = " ".join(lines[1:]).split()
    if len(tokens) != num_pairs(n):
        raise FormatError(f"expected {num_pairs(n)} entries, got {len(tokens)}")
    return FiniteMetric(n, tuple(parse_rational(t) for t in tokens))


def format_points(X: PointConfig) -> str:
    out = [f"{X.n} {X.m}"]
    out.extend(" ".join(format_rational(c) for c in p) for p in X.points)
    return "\n".join(out) + "\n"


def parse_points(text: str) -> PointConfig:
    lines = _lines(text)
    if not lines:
        raise FormatError("empty point file")
    n, m = _ints(lines[0], 2, "point header")
    if n < 1 or m < 1:
        raise FormatError(f"bad point header {lines[0]!r}")
    if len(lines) != n + 1:
        raise FormatError(f"expected {n} point lines, got {len(lines) - 1}")
    pts = []
    for ln in lines[1:]:
        tokens = ln.split()
        if len(tokens) != m:
            raise FormatError(f"expected {m} coordinates, got {ln!r}")
        pts.append(tuple(parse_rational(t) for t in tokens))
    return PointConfig(tuple(pts))

