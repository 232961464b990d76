"""Cut-cone membership (problem A) and its SIG-promise variant (problem B).

Problem A asks whether a metric d lies in CUT_n. Problem B receives a pair
(G, d) promised to satisfy SIG(d) == G and asks the same question about d.
``reduce_a_to_b`` maps d to (SIG(d), d); ``reduce_b_to_a`` forgets G. Both
maps send yes-instances to yes-instances and no-instances to no-instances,
and the first lands inside the promise by construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cutcone import (
    DEFAULT_MAX_N,
    CutDecomposition,
    FarkasCertificate,
    Feasible,
    cutcone_membership,
)
from .errors import FormatError
from .metric import FiniteMetric, format_metric, parse_metric, validate
from .sig import LabeledGraph, format_graph, is_sig_metric, parse_graph, sig_from_metric

SEPARATOR = "---"


@dataclass(frozen=True)
class ProblemBInstance:
    graph: LabeledGraph
    metric: FiniteMetric

    @property
    def in_promise(self) -> bool:
        """Whether d is a metric whose labeled SIG is exactly G."""
        if self.graph.n != self.metric.n:
            return False
        return validate(self.metric, "metric").valid and is_sig_metric(self.graph, self.metric)


@dataclass(frozen=True)
class Yes:
    decomposition: CutDecomposition


@dataclass(frozen=True)
class No:
    certificate: FarkasCertificate


@dataclass(frozen=True)
class PromiseViolated:
    reason: str


def reduce_a_to_b(d: FiniteMetric, stats: dict | None = None) -> ProblemBInstance:
    """d -> (G_d, d). Costs n radii plus n(n-1)/2 strict comparisons."""
    return ProblemBInstance(sig_from_metric(d, stats), d)


def reduce_b_to_a(inst: ProblemBInstance) -> FiniteMetric:
    return inst.metric


def solve_problem_b(
    inst: ProblemBInstance, *, max_n: int = DEFAULT_MAX_N
) -> Yes | No | PromiseViolated:
    """Check the promise, then answer with a verified certificate.

    Off-promise inputs are flagged rather than answered.
    """
    G, d = inst.graph, inst.metric
    if G.n != d.n:
        return PromiseViolated(f"graph has {G.n} vertices, metric has {d.n}")
    report = validate(d, "metric")
    if not report.valid:
        return PromiseViolated(f"not a proper metric: {report.violations[0]}")
    if not is_sig_metric(G, d):
        return PromiseViolated("the sphere-of-influence graph of d differs from G")
    result = cutcone_membership(d, max_n=max_n)
    if isinstance(result, Feasible):
        return Yes(result.decomposition)
    return No(result.certificate)


def format_instance(inst: ProblemBInstance) -> str:
    return format_graph(inst.graph) + SEPARATOR + "\n" + format_metric(inst.metric)


def split_sections(text: str) -> list[str]:
    sections, current = [], []
    for line in text.splitlines():
        if line.strip() == SEPARATOR:
            sections.append("\n".join(current) + "\n")
            current = []
        else:
            current.append(line)
    sections.append("\n".join(current) + "\n")
    return sections


def parse_instance(text: str) -> ProblemBInstance:
    sections = split_sections(text)
    if len(sections) != 2:
        raise FormatError(f"instance file needs exactly one '{SEPARATOR}' separator")
    return ProblemBInstance(parse_graph(sections[0]), parse_metric(sections[1]))
