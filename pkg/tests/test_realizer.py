import random
from fractions import Fraction

import pytest

from l1sig.cutcone import CutDecomposition, enumerate_cuts
from l1sig.embedding import embed_metric
from l1sig.errors import FormatError, ResourceLimitError, StructuralError
from l1sig.generators import complete_bipartite, complete_graph, cycle_graph, path_graph, star_graph
from l1sig.metric import FiniteMetric, metric_from_points
from l1sig.realizer import (
    Exhausted,
    InfeasibleForSigma,
    NotRealizableStructural,
    Realization,
    candidate_nn_maps,
    count_nn_maps,
    format_realization,
    margin_lp,
    parse_realization,
    realize_l1_sig,
)
from l1sig.sig import LabeledGraph, radii_of_influence, sig_from_metric


def test_candidate_counts():
    assert len(list(candidate_nn_maps(complete_graph(3)))) == 8
    assert list(candidate_nn_maps(path_graph(3))) == [(2, 1, 2), (2, 3, 2)]
    assert count_nn_maps(path_graph(3)) == 2
    G = LabeledGraph.from_edges(4, [(1, 2), (2, 3), (1, 3), (3, 4), (2, 4)])
    assert len(list(candidate_nn_maps(G))) == count_nn_maps(G) == 2 * 3 * 3 * 2


def test_candidates_reject_isolated_vertex():
    with pytest.raises(StructuralError):
        candidate_nn_maps(LabeledGraph.from_edges(3, [(1, 2)]))


@pytest.mark.parametrize("sigma", list(candidate_nn_maps(complete_graph(3))))
def test_triangle_margin(sigma):
    # Sum over pairs of d equals 2 * sum(w) = 2, so min d <= 2/3 and the margin
    # (bounded by every d(i, j)) is at most 2/3; the uniform metric attains it.
    out = margin_lp(complete_graph(3), sigma)
    assert isinstance(out, Realization)
    assert out.margin == Fraction(2, 3)
    assert out.metric == FiniteMetric.uniform(3, Fraction(2, 3))


def test_path_realization_respects_non_edge():
    out = margin_lp(path_graph(3), (2, 1, 2))
    assert isinstance(out, Realization) and out.margin > 0
    d, r = out.metric, radii_of_influence(out.metric)
    assert d(1, 3) >= r[0] + r[2]
    assert sig_from_metric(d) == path_graph(3)


def test_margin_lp_rejects_bad_sigma():
    with pytest.raises(ValueError):
        margin_lp(path_graph(3), (3, 1, 2))


@pytest.mark.parametrize("n", range(2, 7))
def test_complete_graphs(n):
    out = realize_l1_sig(complete_graph(n))
    assert isinstance(out, Realization) and out.check()


def test_single_edge():
    out = realize_l1_sig(complete_graph(2))
    assert isinstance(out, Realization)
    assert out.metric.entries == (1,)


def test_star_recorded_outcome():
    G = star_graph(3)
    out = realize_l1_sig(G)
    # outcome observed when this test was written: realized with the first map
    assert isinstance(out, Realization) and out.check()
    assert out.sigma == (2, 1, 1, 1)


def test_structural_rejection():
    out = realize_l1_sig(LabeledGraph.from_edges(4, [(1, 2), (2, 3)]))
    assert out == NotRealizableStructural((4,))
    assert isinstance(realize_l1_sig(LabeledGraph(1, frozenset())), NotRealizableStructural)


def test_budget():
    G = cycle_graph(5)
    first = next(iter(candidate_nn_maps(G)))
    out = realize_l1_sig(G, budget=0)
    assert out == Exhausted(0, False)
    assert isinstance(margin_lp(G, first), (Realization, InfeasibleForSigma))


def test_size_limit():
    with pytest.raises(ResourceLimitError):
        realize_l1_sig(complete_graph(9))


def test_completeness_relative_to_sigma():
    G = complete_bipartite(2, 3)
    refuted = {s for s in candidate_nn_maps(G) if isinstance(margin_lp(G, s), InfeasibleForSigma)}
    assert (3, 3, 1, 2, 2) in refuted
    rng = random.Random(16)
    cuts = list(enumerate_cuts(5))
    hits = 0
    for _ in range(3000):
        chosen = rng.sample(cuts, rng.randint(2, 7))
        d = CutDecomposition(5, tuple((c, rng.randint(1, 2)) for c in chosen)).metric()
        if d.has_zero_distance():
            continue
        r = radii_of_influence(d)
        attained = {
            s for s in candidate_nn_maps(G) if all(d(i, x) == r[i - 1] for i, x in enumerate(s, 1))
        }
        if sig_from_metric(d) == G:
            # a realizing d only uses maps the LP accepts
            assert attained and not attained & refuted
        hits += len(attained & refuted)
    assert hits > 50


def test_realizations_are_embeddable():
    for G in (path_graph(5), cycle_graph(5), complete_graph(4)):
        out = realize_l1_sig(G)
        X = embed_metric(out.metric)
        assert metric_from_points(X, 1) == out.metric


def test_report_roundtrip():
    out = realize_l1_sig(cycle_graph(4))
    text = format_realization(out)
    back = parse_realization(text)
    assert back == out and back.check()
    assert format_realization(back) == text


def test_report_bad_sections():
    with pytest.raises(FormatError):
        parse_realization("3 0\n---\n3\n1 1 1\n")
