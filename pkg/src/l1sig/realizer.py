"""Search for l_1 sphere-of-influence realizations of a given graph.

For a fixed nearest-neighbour map sigma (sigma(i) is a neighbour of i that
attains r_i), every SIG condition becomes linear in the cut weights w_C of
d = sum(w_C * delta_C). Strict inequalities share one margin t, and
sum(w_C) = 1 fixes the scale:

    maximize t  subject to
        w >= 0,  sum(w) = 1
        d(i, sigma(i)) <= d(i, k)           k not in {i, sigma(i)}
        d(i, j) >= t                        every pair
        d(i, j) + t <= r_i + r_j            every edge of G
        d(i, j) >= r_i + r_j                every non-edge
    with r_i = d(i, sigma(i)).

G is realized with this sigma iff the optimum t* is positive. Because d is
built from cut weights it is l_1-embeddable by construction.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator

from . import lp
from .cutcone import (
    Cut,
    CutDecomposition,
    format_decomposition,
    num_cuts,
    parse_decomposition,
    verify_decomposition,
)
from .errors import FormatError, ResourceLimitError, StructuralError
from .metric import FiniteMetric, format_metric, format_rational, pairs, parse_metric, parse_rational
from .reduction import split_sections
from .sig import LabeledGraph, format_graph, parse_graph, radii_of_influence, sig_from_metric

logger = logging.getLogger(__name__)

DEFAULT_MAX_N = 8
DEFAULT_BUDGET = 4096

NearestNeighborMap = tuple[int, ...]  # sigma[i - 1] is the nearest neighbour of i


@dataclass(frozen=True)
class Realization:
    graph: LabeledGraph
    metric: FiniteMetric
    decomposition: CutDecomposition
    sigma: NearestNeighborMap
    margin: Fraction

    def check(self) -> bool:
        """Re-verify decomposition, SIG equality and that sigma attains the radii."""
        d = self.metric
        if not verify_decomposition(d, self.decomposition):
            return False
        if sig_from_metric(d) != self.graph:
            return False
        r = radii_of_influence(d)
        return all(r[i - 1] == d(i, s) for i, s in enumerate(self.sigma, start=1))


@dataclass(frozen=True)
class InfeasibleForSigma:
    sigma: NearestNeighborMap
    best_margin: Fraction | None  # None when even t = 0 is infeasible


@dataclass(frozen=True)
class NotRealizableStructural:
    isolated: tuple[int, ...]


@dataclass(frozen=True)
class Exhausted:
    maps_tried: int
    searched_all: bool  # every candidate sigma was refuted, not just the budget


def candidate_nn_maps(G: LabeledGraph) -> Iterator[NearestNeighborMap]:
    """Every sigma with sigma(i) adjacent to i, in lexicographic order."""
    isolated = G.isolated_vertices()
    if isolated:
        raise StructuralError(f"isolated vertices {isolated}: no SIG has one")
    choices = [G.neighbors(i) for i in range(1, G.n + 1)]
    return product(*choices)


def count_nn_maps(G: LabeledGraph) -> int:
    total = 1
    for i in range(1, G.n + 1):
        total *= G.degree(i)
    return total


def _check_sigma(G: LabeledGraph, sigma: NearestNeighborMap) -> None:
    if len(sigma) != G.n:
        raise ValueError("sigma must have one entry per vertex")
    for i, s in enumerate(sigma, start=1):
        if s == i or not G.has_edge(i, s):
            raise ValueError(f"sigma({i}) = {s} is not a neighbour of {i}")


def margin_lp(G: LabeledGraph, sigma: NearestNeighborMap) -> Realization | InfeasibleForSigma:
    _check_sigma(G, sigma)
    n = G.n
    ncut = num_cuts(n)
    inside = [[v == 1 or bool(mask >> (v - 2) & 1) for v in range(1, n + 1)] for mask in range(ncut)]

    def dist(i, j):
        """Cut-coefficient vector of d(i, j)."""
        return [int(inside[k][i - 1] != inside[k][j - 1]) for k in range(ncut)]

    d = {(i, j): dist(i, j) for i, j in pairs(n)}

    def D(i, j):
        return d[(min(i, j), max(i, j))]

    def r(i):
        return D(i, sigma[i - 1])

    # rows as (cut coefficients, t coefficient); each means row <= 0
    rows: list[tuple[list[int], int]] = []
    for i in range(1, n + 1):
        for k in range(1, n + 1):
            if k != i and k != sigma[i - 1]:
                rows.append(([a - b for a, b in zip(r(i), D(i, k))], 0))
    for i, j in pairs(n):
        rows.append(([-a for a in D(i, j)], 1))
    for i, j in pairs(n):
        ri, rj, dij = r(i), r(j), D(i, j)
        if G.has_edge(i, j):
            rows.append(([a - b - c for a, b, c in zip(dij, ri, rj)], 1))
        else:
            rows.append(([b + c - a for a, b, c in zip(dij, ri, rj)], 0))

    # row 0 is the normalization; row k >= 1 is inequality k-1 with slack
    nrows = len(rows) + 1
    columns = []
    for k in range(ncut):
        entries = {0: 1}
        for idx, (coef, _) in enumerate(rows, start=1):
            if coef[k]:
                entries[idx] = coef[k]
        columns.append(lp.column(entries))
    columns.append(lp.column({idx: tc for idx, (_, tc) in enumerate(rows, start=1) if tc}))
    for idx in range(1, nrows):
        columns.append(((idx,), (1,)))
    b = [1] + [0] * (nrows - 1)
    cost = [0] * ncut + [-1] + [0] * (nrows - 1)

    res = lp.solve(columns, b, cost)
    if res.status != lp.OPTIMAL:
        return InfeasibleForSigma(tuple(sigma), None)
    margin = -res.objective
    if margin <= 0:
        return InfeasibleForSigma(tuple(sigma), margin)
    weights = {Cut.from_mask(n, k): w for k, w in enumerate(res.x[:ncut]) if w}
    dec = CutDecomposition.from_weights(n, weights)
    real = Realization(G, dec.metric(), dec, tuple(sigma), margin)
    if not real.check():
        raise AssertionError(f"margin LP returned an unverifiable realization for sigma={sigma}")
    return real


def realize_l1_sig(
    G: LabeledGraph,
    budget: int = DEFAULT_BUDGET,
    *,
    max_n: int = DEFAULT_MAX_N,
) -> Realization | NotRealizableStructural | Exhausted:
    """Try nearest-neighbour maps in order until one admits a positive margin.

    ``Exhausted`` only reports that the tried maps failed; with
    ``searched_all`` set, every map consistent with G was refuted.
    """
    isolated = G.isolated_vertices()
    if isolated or G.n < 2:
        return NotRealizableStructural(tuple(isolated))
    if G.n > max_n:
        raise ResourceLimitError(f"realization search is limited to n <= {max_n}")
    tried = 0
    for sigma in candidate_nn_maps(G):
        if tried >= budget:
            return Exhausted(tried, False)
        tried += 1
        out = margin_lp(G, sigma)
        if isinstance(out, Realization):
            logger.debug("realized after %d maps", tried)
            return out
    return Exhausted(tried, True)


# -- report format ----------------------------------------------------------------


def format_realization(real: Realization) -> str:
    sep = "---\n"
    return (
        format_graph(real.graph)
        + sep
        + format_metric(real.metric)
        + sep
        + format_decomposition(real.decomposition)
        + sep
        + " ".join(map(str, real.sigma))
        + "\n"
        + sep
        + format_rational(real.margin)
        + "\n"
    )


def parse_realization(text: str) -> Realization:
    sections = split_sections(text)
    if len(sections) != 5:
        raise FormatError("realization report needs five '---'-separated sections")
    G = parse_graph(sections[0])
    d = parse_metric(sections[1])
    dec = parse_decomposition(sections[2])
    try:
        sigma = tuple(int(t) for t in sections[3].split())
    except ValueError:
        raise FormatError(f"bad sigma line {sections[3]!r}") from None
    margin_tokens = sections[4].split()
    if len(margin_tokens) != 1:
        raise FormatError("margin section must hold one rational")
    return Realization(G, d, dec, sigma, parse_rational(margin_tokens[0]))
