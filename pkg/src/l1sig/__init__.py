"""Exact cut-cone membership, l1 embeddings and sphere-of-influence graphs."""

from .cutcone import (
    Cut,
    CutDecomposition,
    FarkasCertificate,
    Feasible,
    Infeasible,
    cut_metric,
    cutcone_membership,
    enumerate_cuts,
    verify_decomposition,
    verify_farkas,
)
from .embedding import NotEmbeddable, embed_from_decomposition, embed_metric
from .errors import FormatError, MetricError, ResourceLimitError, StructuralError
from .metric import FiniteMetric, PointConfig, ValidationReport, metric_from_points, validate
from .realizer import (
    Exhausted,
    InfeasibleForSigma,
    NotRealizableStructural,
    Realization,
    candidate_nn_maps,
    margin_lp,
    realize_l1_sig,
)
from .reduction import (
    No,
    ProblemBInstance,
    PromiseViolated,
    Yes,
    reduce_a_to_b,
    reduce_b_to_a,
    solve_problem_b,
)
from .sig import LabeledGraph, is_sig_metric, radii_of_influence, sig_from_metric, sig_from_points

__all__ = [
    "Cut",
    "CutDecomposition",
    "Exhausted",
    "FarkasCertificate",
    "Feasible",
    "FiniteMetric",
    "FormatError",
    "Infeasible",
    "InfeasibleForSigma",
    "LabeledGraph",
    "MetricError",
    "No",
    "NotEmbeddable",
    "NotRealizableStructural",
    "PointConfig",
    "ProblemBInstance",
    "PromiseViolated",
    "Realization",
    "ResourceLimitError",
    "StructuralError",
    "ValidationReport",
    "Yes",
    "candidate_nn_maps",
    "cut_metric",
    "cutcone_membership",
    "embed_from_decomposition",
    "embed_metric",
    "enumerate_cuts",
    "is_sig_metric",
    "margin_lp",
    "metric_from_points",
    "radii_of_influence",
    "realize_l1_sig",
    "reduce_a_to_b",
    "reduce_b_to_a",
    "sig_from_metric",
    "sig_from_points",
    "solve_problem_b",
    "validate",
    "verify_decomposition",
    "verify_farkas",
]

__version__ = "0.1.0"
