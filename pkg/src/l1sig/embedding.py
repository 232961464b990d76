"""Explicit l_1 point sets for metrics in the cut cone.

Each term (C, w_C) of a decomposition contributes one coordinate axis: point
``i`` sits at ``w_C`` on that axis when ``i`` is in C and at 0 otherwise, so
|x_i - x_j| summed over axes is exactly sum(w_C * delta_C(i, j)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cutcone import (
    DEFAULT_MAX_N,
    CutDecomposition,
    FarkasCertificate,
    Infeasible,
    cutcone_membership,
)
from .metric import FiniteMetric, PointConfig


@dataclass(frozen=True)
class NotEmbeddable:
    certificate: FarkasCertificate


def embed_from_decomposition(dec: CutDecomposition) -> PointConfig:
    if not dec.terms:
        # zero semimetric: every point at the origin of Q^1
        return PointConfig(tuple((Fraction(0),) for _ in range(dec.n)))
    points = []
    for i in range(1, dec.n + 1):
        points.append(tuple(w if i in c.members else Fraction(0) for c, w in dec.terms))
    return PointConfig(tuple(points))


def embed_metric(d: FiniteMetric, *, max_n: int = DEFAULT_MAX_N) -> PointConfig | NotEmbeddable:
    result = cutcone_membership(d, max_n=max_n)
    if isinstance(result, Infeasible):
        return NotEmbeddable(result.certificate)
    return embed_from_decomposition(result.decomposition)
