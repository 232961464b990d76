import random
from fractions import Fraction

import pytest

from l1sig.cutcone import Cut, CutDecomposition, verify_farkas
from l1sig.embedding import NotEmbeddable, embed_from_decomposition, embed_metric
from l1sig.errors import ResourceLimitError
from l1sig.generators import random_points
from l1sig.metric import FiniteMetric, PointConfig, metric_from_points


def test_two_term_example():
    dec = CutDecomposition(3, ((Cut(3, (1,)), 1), (Cut(3, (1, 2)), 2)))
    X = embed_from_decomposition(dec)
    assert X.points == ((1, 2), (0, 2), (0, 0))
    assert metric_from_points(X, 1).entries == (1, 3, 2)


def test_single_cut_on_two_points():
    X = embed_from_decomposition(CutDecomposition(2, ((Cut(2, (1,)), 1),)))
    assert X.points == ((1,), (0,))
    assert metric_from_points(X, 1)(1, 2) == 1


def test_empty_decomposition_lifts_to_origin():
    X = embed_from_decomposition(CutDecomposition(3, ()))
    assert X.m == 1 and X.points == ((0,), (0,), (0,))
    assert metric_from_points(X, 1).is_zero()


def test_uniform3(uniform3):
    X = embed_metric(uniform3)
    assert isinstance(X, PointConfig) and X.m == 3
    assert metric_from_points(X, 1) == uniform3


def test_k23_not_embeddable(k23):
    out = embed_metric(k23)
    assert isinstance(out, NotEmbeddable)
    assert verify_farkas(k23, out.certificate)


def test_line_roundtrip(line013):
    X = embed_metric(line013)
    assert metric_from_points(X, 1).entries == (1, 3, 2)


def test_roundtrip_and_dimension_bound():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(2, 7)
        d = metric_from_points(random_points(rng, n, rng.randint(1, 4)), 1)
        X = embed_metric(d)
        assert metric_from_points(X, 1) == d
        assert X.m <= max(1, n * (n - 1) // 2)


def test_linear_in_weights():
    rng = random.Random(12)
    dec = CutDecomposition(
        4, tuple((Cut.from_mask(4, k), Fraction(rng.randint(1, 9), 4)) for k in (0, 2, 5))
    )
    lam = Fraction(7, 3)
    X, Y = embed_from_decomposition(dec), embed_from_decomposition(dec.scaled(lam))
    assert Y == X.scaled(lam)
    assert metric_from_points(Y, 1) == metric_from_points(X, 1).scaled(lam)


def test_resource_limit_propagates():
    with pytest.raises(ResourceLimitError):
        embed_metric(FiniteMetric.uniform(5), max_n=4)
