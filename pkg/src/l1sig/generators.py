"""Graph families and random inputs used by the tests and the acceptance run."""

from __future__ import annotations

import random
from collections import deque
from fractions import Fraction
from itertools import combinations

from .metric import FiniteMetric, PointConfig, pairs
from .sig import LabeledGraph


def complete_graph(n: int) -> LabeledGraph:
    return LabeledGraph(n, frozenset(combinations(range(1, n + 1), 2)))


def path_graph(n: int) -> LabeledGraph:
    return LabeledGraph(n, frozenset((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> LabeledGraph:
    return LabeledGraph(n, frozenset([(i, i + 1) for i in range(1, n)] + [(1, n)]))


def star_graph(leaves: int) -> LabeledGraph:
    return LabeledGraph(leaves + 1, frozenset((1, v) for v in range(2, leaves + 2)))


def complete_bipartite(a: int, b: int) -> LabeledGraph:
    """K_{a,b} with parts {1..a} and {a+1..a+b}."""
    return LabeledGraph(
        a + b, frozenset((i, j) for i in range(1, a + 1) for j in range(a + 1, a + b + 1))
    )


def shortest_path_metric(G: LabeledGraph) -> FiniteMetric:
    """Hop-count metric of a connected graph (BFS from every vertex)."""
    adj = {v: G.neighbors(v) for v in range(1, G.n + 1)}
    dist = {}
    for s in adj:
        seen = {s: 0}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in seen:
                    seen[w] = seen[u] + 1
                    queue.append(w)
        if len(seen) != G.n:
            raise ValueError("graph is not connected")
        dist[s] = seen
    return FiniteMetric.from_function(G.n, lambda i, j: dist[i][j])


def random_points(rng: random.Random, n: int, m: int, lo: int = -10, hi: int = 10) -> PointConfig:
    """``n`` distinct integer points in [lo, hi]^m."""
    if (hi - lo + 1) ** m < n:
        raise ValueError("box too small for n distinct points")
    pts: list[tuple[int, ...]] = []
    seen = set()
    while len(pts) < n:
        p = tuple(rng.randint(lo, hi) for _ in range(m))
        if p not in seen:
            seen.add(p)
            pts.append(p)
    return PointConfig(tuple(pts))


def random_proper_metric(rng: random.Random, n: int, max_num: int = 20, max_den: int = 4) -> FiniteMetric:
    """Shortest-path closure of random positive rational edge weights on K_n."""
    w = [[Fraction(0)] * n for _ in range(n)]
    for i, j in combinations(range(n), 2):
        w[i][j] = w[j][i] = Fraction(rng.randint(1, max_num), rng.randint(1, max_den))
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if w[i][k] + w[k][j] < w[i][j]:
                    w[i][j] = w[i][k] + w[k][j]
    return FiniteMetric(n, tuple(w[i - 1][j - 1] for i, j in pairs(n)))


def random_permutation(rng: random.Random, n: int) -> tuple[int, ...]:
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    return tuple(perm)
