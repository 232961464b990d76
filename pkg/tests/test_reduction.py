import random
from fractions import Fraction

import pytest

from l1sig.cutcone import Feasible, cutcone_membership, verify_decomposition, verify_farkas
from l1sig.errors import FormatError, MetricError
from l1sig.generators import complete_graph, path_graph, random_proper_metric
from l1sig.metric import FiniteMetric
from l1sig.reduction import (
    No,
    ProblemBInstance,
    PromiseViolated,
    Yes,
    format_instance,
    parse_instance,
    reduce_a_to_b,
    reduce_b_to_a,
    solve_problem_b,
)
from l1sig.sig import is_sig_metric


def test_reduce_uniform(uniform3):
    inst = reduce_a_to_b(uniform3)
    assert inst.graph == complete_graph(3) and inst.metric == uniform3
    assert inst.in_promise


def test_reduce_line(line013):
    inst = reduce_a_to_b(line013)
    assert inst.graph == path_graph(3)
    assert reduce_b_to_a(inst) == line013


def test_forgetful_map(uniform3, line013):
    assert reduce_b_to_a(ProblemBInstance(complete_graph(3), uniform3)) == uniform3
    assert reduce_b_to_a(ProblemBInstance(path_graph(3), line013)) == line013


def test_reduce_rejects_zero_distance():
    with pytest.raises(MetricError):
        reduce_a_to_b(FiniteMetric(3, (0, 1, 1)))


def test_solve_yes(uniform3):
    out = solve_problem_b(ProblemBInstance(complete_graph(3), uniform3))
    assert isinstance(out, Yes)
    assert dict(out.decomposition.terms) == {c: Fraction(1, 2) for c, _ in out.decomposition.terms}
    assert len(out.decomposition) == 3


def test_solve_no(k23):
    out = solve_problem_b(reduce_a_to_b(k23))
    assert isinstance(out, No)
    assert verify_farkas(k23, out.certificate)


def test_solve_off_promise(line013):
    out = solve_problem_b(ProblemBInstance(complete_graph(3), line013))
    assert isinstance(out, PromiseViolated)


@pytest.mark.parametrize(
    "inst",
    [
        ProblemBInstance(complete_graph(4), FiniteMetric.uniform(3)),  # size mismatch
        ProblemBInstance(complete_graph(3), FiniteMetric(3, (0, 1, 1))),  # zero distance
        ProblemBInstance(path_graph(3), FiniteMetric(3, (1, 5, 1))),  # triangle violated
    ],
)
def test_other_promise_violations(inst):
    assert not inst.in_promise
    assert isinstance(solve_problem_b(inst), PromiseViolated)


def test_promise_and_answer_preservation():
    rng = random.Random(15)
    for _ in range(40):
        d = random_proper_metric(rng, rng.randint(3, 6), max_num=rng.choice([3, 10]))
        inst = reduce_a_to_b(d)
        assert inst.in_promise and is_sig_metric(inst.graph, d)
        assert reduce_b_to_a(inst) == d
        answer = solve_problem_b(inst)
        member = isinstance(cutcone_membership(d), Feasible)
        assert isinstance(answer, Yes) == member
        if member:
            assert verify_decomposition(d, answer.decomposition)
        else:
            assert verify_farkas(d, answer.certificate)


def test_instance_roundtrip(line013):
    inst = reduce_a_to_b(line013)
    text = format_instance(inst)
    assert text == "3 2\n1 2\n2 3\n---\n3\n1 3 2\n"
    assert parse_instance(text) == inst


def test_instance_needs_separator():
    with pytest.raises(FormatError):
        parse_instance("3 0\n3\n1 1 1\n")
