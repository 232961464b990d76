import random
from fractions import Fraction

import numpy as np
import pytest
from scipy.optimize import linprog

from l1sig import lp
from l1sig.errors import ResourceLimitError


def dense_columns(A):
    m, n = len(A), len(A[0])
    return [lp.column({r: A[r][j] for r in range(m)}) for j in range(n)]


def test_beale_cycling_example_terminates():
    # Beale's example, rows scaled to integers (slacks rescaled accordingly).
    # Dantzig's largest-coefficient rule cycles on it; Bland's rule must not.
    A = [
        [1, -32, -4, 36, 1, 0, 0],
        [1, -24, -1, 6, 0, 1, 0],
        [0, 0, 1, 0, 0, 0, 1],
    ]
    b = [0, 0, 1]
    c = [Fraction(-3, 4), 20, Fraction(-1, 2), 6, 0, 0, 0]
    res = lp.solve(dense_columns(A), b, c)
    assert res.status == lp.OPTIMAL
    assert res.objective == Fraction(-5, 4)
    assert res.x[:4] == [1, 0, 1, 0]


def test_infeasible_returns_farkas():
    # x1 + x2 = 1 and x1 + x2 = 2
    A = [[1, 1], [1, 1]]
    b = [1, 2]
    res = lp.solve(dense_columns(A), b)
    assert res.status == lp.INFEASIBLE
    y = res.farkas
    assert all(sum(A[r][j] * y[r] for r in range(2)) <= 0 for j in range(2))
    assert sum(b[r] * y[r] for r in range(2)) > 0


def test_unbounded():
    # min -x1 with x1 - x2 = 0
    res = lp.solve(dense_columns([[1, -1]]), [0], [-1, 0])
    assert res.status == lp.UNBOUNDED


def test_negative_rhs_rows_are_flipped():
    # -x1 = -3/2
    res = lp.solve(dense_columns([[-1]]), [Fraction(-3, 2)], [1])
    assert res.status == lp.OPTIMAL and res.x == [Fraction(3, 2)]


def test_redundant_rows():
    A = [[1, 1, 0], [1, 1, 0], [0, 1, 1]]
    b = [2, 2, 3]
    res = lp.solve(dense_columns(A), b, [1, 2, 3])
    assert res.status == lp.OPTIMAL
    assert all(sum(A[r][j] * res.x[j] for j in range(3)) == b[r] for r in range(3))
    # x2 = 2 - x1, x3 = 1 + x1, so the cost is 7 + 2 x1
    assert res.objective == 7


def test_pivot_limit():
    A = [[1, 1, 1, 0], [1, -1, 0, 1]]
    with pytest.raises(ResourceLimitError):
        lp.solve(dense_columns(A), [3, 5], [-1, -2, 0, 0], max_pivots=0)


@pytest.mark.parametrize("seed", range(6))
def test_random_programs_match_highs(seed):
    rng = random.Random(seed)
    statuses = {0: lp.OPTIMAL, 2: lp.INFEASIBLE, 3: lp.UNBOUNDED}
    for _ in range(60):
        m, n = rng.randint(1, 5), rng.randint(1, 8)
        A = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(m)]
        b = [Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(m)]
        c = [Fraction(rng.randint(-4, 4), rng.randint(1, 2)) for _ in range(n)]
        res = lp.solve(dense_columns(A), b, c)
        ref = linprog(
            [float(v) for v in c],
            A_eq=np.array(A, dtype=float),
            b_eq=[float(v) for v in b],
            bounds=[(0, None)] * n,
            method="highs",
        )
        assert res.status == statuses[ref.status]
        if res.status == lp.OPTIMAL:
            assert float(res.objective) == pytest.approx(ref.fun, abs=1e-9)
            assert all(v >= 0 for v in res.x)
            assert all(sum(A[r][j] * res.x[j] for j in range(n)) == b[r] for r in range(m))
            # dual feasibility and strong duality, exactly
            y = res.duals
            assert all(c[j] - sum(A[r][j] * y[r] for r in range(m)) >= 0 for j in range(n))
            assert sum(b[r] * y[r] for r in range(m)) == res.objective
        elif res.status == lp.INFEASIBLE:
            y = res.farkas
            assert all(sum(A[r][j] * y[r] for r in range(m)) <= 0 for j in range(n))
            assert sum(b[r] * y[r] for r in range(m)) > 0
