"""Sphere-of-influence graphs under exact rational distances.

Vertices i and j are adjacent iff d(i, j) < r_i + r_j, where the radius of
influence r_i is the distance from i to its nearest other vertex. Every
comparison is exact; a pair with d(i, j) == r_i + r_j is not an edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Iterable, Sequence

import numpy as np

from .errors import FormatError, MetricError, StructuralError
from .metric import FiniteMetric, PointConfig, _ints, _lines, normalize_p, pairs


@dataclass(frozen=True)
class LabeledGraph:
    """Simple graph on V_n = {1, ..., n}; edges are stored as pairs (i, j), i < j."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        norm = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            i, j = min(i, j), max(i, j)
            if not (1 <= i and j <= self.n):
                raise ValueError(f"edge ({i}, {j}) outside V_{self.n}")
            norm.add((i, j))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> LabeledGraph:
        return cls(n, frozenset(edges))

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def neighbors(self, i: int) -> list[int]:
        return [j for j in range(1, self.n + 1) if j != i and self.has_edge(i, j)]

    def degree(self, i: int) -> int:
        return sum(1 for e in self.edges if i in e)

    def isolated_vertices(self) -> list[int]:
        touched = {v for e in self.edges for v in e}
        return [v for v in range(1, self.n + 1) if v not in touched]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def relabeled(self, perm: Sequence[int]) -> LabeledGraph:
        if sorted(perm) != list(range(1, self.n + 1)):
            raise ValueError(f"not a permutation of 1..{self.n}")
        return LabeledGraph(self.n, frozenset((perm[i - 1], perm[j - 1]) for i, j in self.edges))


def _require_positive(d: FiniteMetric) -> None:
    for (i, j), v in d.items():
        if v <= 0:
            raise MetricError(
                f"sphere-of-influence graphs need positive distances; d({i},{j}) = {v}"
            )


def radii_of_influence(d: FiniteMetric) -> tuple[Fraction, ...]:
    _require_positive(d)
    rows = d.matrix()
    return tuple(min(v for j, v in enumerate(row) if j != i) for i, row in enumerate(rows))


def sig_from_metric(d: FiniteMetric, stats: dict | None = None) -> LabeledGraph:
    """SIG of an abstract metric with positive off-diagonal entries.

    Only positivity is checked (O(n^2)); the triangle inequality is the
    caller's responsibility. If ``stats`` is given, the number of exact
    comparisons performed is stored under ``"comparisons"``.
    """
    _require_positive(d)
    n = d.n
    rows = d.matrix()
    count = 0
    r = []
    for i in range(n):
        best = None
        for j in range(n):
            if j == i:
                continue
            if best is None:
                best = rows[i][j]
                continue
            count += 1
            if rows[i][j] < best:
                best = rows[i][j]
        r.append(best)
    edges = set()
    for (i, j), v in d.items():
        count += 1
        if v < r[i - 1] + r[j - 1]:
            edges.add((i, j))
    if stats is not None:
        stats["comparisons"] = count
    return LabeledGraph(n, frozenset(edges))


# Integer arrays are exact as long as no intermediate sum can overflow int64.
_INT64_SAFE = 2**62


def _integer_coordinates(X: PointConfig) -> list[list[int]]:
    scale = lcm(1, *(c.denominator for p in X.points for c in p))
    ints = [[int(c * scale) for c in p] for p in X.points]
    # translate so every coordinate lies in [0, spread]
    low = [min(col) for col in zip(*ints)]
    return [[c - lo for c, lo in zip(p, low)] for p in ints]


def _sig_numpy(coords: np.ndarray, p) -> LabeledGraph:
    n = coords.shape[0]
    dist = np.zeros((n, n), dtype=np.int64)
    for k in range(coords.shape[1]):
        diff = np.abs(coords[:, k][:, None] - coords[:, k][None, :])
        if p == 1:
            dist += diff
        else:
            np.maximum(dist, diff, out=dist)
    np.fill_diagonal(dist, np.iinfo(np.int64).max)
    r = dist.min(axis=1)
    adj = dist < (r[:, None] + r[None, :])
    iu, ju = np.nonzero(np.triu(adj, k=1))
    return LabeledGraph(n, frozenset(zip((iu + 1).tolist(), (ju + 1).tolist())))


def sig_from_points(X: PointConfig, p=1) -> LabeledGraph:
    """SIG of a rational point set under l_1 or l_inf.

    Coordinates are scaled to integers (the SIG is scale invariant) and the
    comparisons run on int64 arrays when that cannot overflow, otherwise on
    Python integers.
    """
    p = normalize_p(p)
    if X.has_duplicates():
        raise StructuralError("duplicate points have distance 0 and no sphere of influence")
    if X.n < 2:
        raise StructuralError("need at least two points")
    ints = _integer_coordinates(X)
    spread = max(max(row) for row in ints)
    if 4 * X.m * spread < _INT64_SAFE:
        return _sig_numpy(np.array(ints, dtype=np.int64), p)
    n = X.n
    if p == 1:
        dist = lambda a, b: sum(abs(x - y) for x, y in zip(a, b))  # noqa: E731
    else:
        dist = lambda a, b: max(abs(x - y) for x, y in zip(a, b))  # noqa: E731
    D = [[0] * n for _ in range(n)]
    for i, j in combinations(range(n), 2):
        D[i][j] = D[j][i] = dist(ints[i], ints[j])
    r = [min(D[i][j] for j in range(n) if j != i) for i in range(n)]
    edges = {(i, j) for i, j in pairs(n) if D[i - 1][j - 1] < r[i - 1] + r[j - 1]}
    return LabeledGraph(n, frozenset(edges))


def is_sig_metric(G: LabeledGraph, d: FiniteMetric) -> bool:
    """True iff the labeled SIG of ``d`` has exactly the edges of ``G``."""
    if G.n != d.n or any(v <= 0 for v in d.entries):
        return False
    return sig_from_metric(d).edges == G.edges


# -- file format ----------------------------------------------------------------


def format_graph(G: LabeledGraph) -> str:
    out = [f"{G.n} {len(G.edges)}"]
    out.extend(f"{i} {j}" for i, j in G.sorted_edges())
    return "\n".join(out) + "\n"


def parse_graph(text: str) -> LabeledGraph:
    lines = _lines(text)
    if not lines:
        raise FormatError("empty graph file")
    n, e = _ints(lines[0], 2, "graph header")
    if len(lines) != e + 1:
        raise FormatError(f"expected {e} edge lines, got {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        i, j = _ints(ln, 2, "edge")
        if not 1 <= i < j <= n:
            raise FormatError(f"edge line must read 'i j' with 1 <= i < j <= {n}: {ln!r}")
        edges.append((i, j))
    if len(set(edges)) != len(edges):
        raise FormatError("repeated edge")
    return LabeledGraph(n, frozenset(edges))
