"""Exact two-phase revised simplex over the rationals.

Solves ``min c.x  s.t.  A x = b, x >= 0`` where ``A`` has integer entries and
``b``, ``c`` are rational. Pivoting follows Bland's rule (smallest eligible
index enters; minimum-ratio ties leave by smallest variable index), so the
method terminates on degenerate problems.

The basis inverse is kept fraction-free: ``B^-1 = M / D`` with ``M`` an
integer matrix and ``D = +-det(B)``. After a pivot on element ``a_r`` of the
entering column, ``D' = a_r`` and ``M'_i = (a_r M_i - a_i M_r) / D`` for
``i != r``; the division is exact because ``M'`` is again a signed adjugate.
Everything inside the pivot loop is integer arithmetic.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Sequence

from .errors import ResourceLimitError

logger = logging.getLogger(__name__)

# A column is a sparse pair (row indices, integer values).
Column = tuple[tuple[int, ...], tuple[int, ...]]

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass
class LPResult:
    """Outcome of :func:`solve`.

    ``x`` holds the primal values of the original columns (optimal status
    only). ``farkas`` is set when infeasible: a vector ``y`` with
    ``A^T y <= 0`` and ``b.y > 0``. ``duals`` are the optimal simplex
    multipliers for the original rows.
    """

    status: str
    x: list[Fraction] | None = None
    objective: Fraction | None = None
    farkas: list[Fraction] | None = None
    duals: list[Fraction] | None = None
    basis: list[int] = field(default_factory=list)
    pivots: int = 0


def column(entries: dict[int, int]) -> Column:
    rows = tuple(sorted(r for r, v in entries.items() if v))
    return rows, tuple(int(entries[r]) for r in rows)


def _common_scale(values: Sequence[Fraction]) -> int:
    return lcm(1, *(Fraction(v).denominator for v in values))


class _Tableau:
    """Revised-simplex state for one standard-form problem."""

    def __init__(self, columns: Sequence[Column], b: Sequence[Fraction], max_pivots: int | None):
        self.m = m = len(b)
        self.nvars = len(columns)
        self.max_pivots = max_pivots
        self.pivots = 0

        # Flip rows so that the right-hand side is nonnegative.
        self.sign = [(-1 if Fraction(v) < 0 else 1) for v in b]
        scale = _common_scale(b)
        self.b_scale = scale
        self.rhs = [int(abs(Fraction(v)) * scale) for v in b]

        cols = []
        for rows, vals in columns:
            if any(not 0 <= r < m for r in rows):
                raise ValueError("column row index out of range")
            cols.append((rows, tuple(v * self.sign[r] for r, v in zip(rows, vals))))
        # Artificial variable for row r has index nvars + r.
        cols.extend(((r,), (1,)) for r in range(m))
        self.cols = cols

        # Start from unit columns already present (slacks) where possible.
        basis = [self.nvars + r for r in range(m)]
        for j in range(self.nvars):
            rows, vals = cols[j]
            if len(rows) == 1 and vals[0] == 1 and basis[rows[0]] >= self.nvars:
                basis[rows[0]] = j
        self.basis = basis
        self.M = [[int(i == k) for k in range(m)] for i in range(m)]
        self.D = 1
        self.beta = list(self.rhs)  # x_B = beta / (D * b_scale)
        self.blocked = [False] * len(cols)
        for r in range(m):
            self.blocked[self.nvars + r] = basis[r] != self.nvars + r

    def is_artificial(self, j: int) -> bool:
        return j >= self.nvars

    def ftran(self, j: int) -> list[int]:
        rows, vals = self.cols[j]
        return [sum(Mi[r] * v for r, v in zip(rows, vals)) for Mi in self.M]

    def duals_num(self, cost: Sequence[int]) -> list[int]:
        """Numerator of y = c_B^T B^-1 (denominator ``D``)."""
        y = [0] * self.m
        for i, j in enumerate(self.basis):
            cj = cost[j]
            if cj:
                Mi = self.M[i]
                for k in range(self.m):
                    if Mi[k]:
                        y[k] += cj * Mi[k]
        return y

    def pivot(self, r: int, j: int, alpha: list[int]) -> None:
        if self.max_pivots is not None and self.pivots >= self.max_pivots:
            raise ResourceLimitError(f"simplex exceeded {self.max_pivots} pivots")
        ar, D = alpha[r], self.D
        Mr, br = self.M[r], self.beta[r]
        for i in range(self.m):
            if i == r:
                continue
            ai = alpha[i]
            Mi = self.M[i]
            if ai:
                self.M[i] = [(ar * x - ai * y) // D for x, y in zip(Mi, Mr)]
                self.beta[i] = (ar * self.beta[i] - ai * br) // D
            else:
                self.M[i] = [(ar * x) // D for x in Mi]
                self.beta[i] = (ar * self.beta[i]) // D
        self.D = ar
        self.blocked[self.basis[r]] = self.is_artificial(self.basis[r])
        self.basis[r] = j
        self.pivots += 1

    def run(self, cost: Sequence[int], allow_artificial: bool) -> str:
        """Minimize ``cost`` from the current feasible basis."""
        m = self.m
        while True:
            y = self.duals_num(cost)
            sD = 1 if self.D > 0 else -1
            basic = set(self.basis)
            entering = None
            for j, (rows, vals) in enumerate(self.cols):
                if j in basic or self.blocked[j]:
                    continue
                if not allow_artificial and j >= self.nvars:
                    break
                # sign of reduced cost c_j - y.A_j, scaled by |D|
                red = cost[j] * self.D - sum(y[r] * v for r, v in zip(rows, vals))
                if red * sD < 0:
                    entering = j
                    break
            if entering is None:
                return OPTIMAL
            alpha = self.ftran(entering)
            leave = None
            best = None
            for i in range(m):
                if alpha[i] * sD > 0:
                    ratio = Fraction(self.beta[i], alpha[i])
                    if (
                        best is None
                        or ratio < best
                        or (ratio == best and self.basis[i] < self.basis[leave])
                    ):
                        best, leave = ratio, i
            if leave is None:
                return UNBOUNDED
            self.pivot(leave, entering, alpha)

    def value(self, i: int) -> Fraction:
        return Fraction(self.beta[i], self.D * self.b_scale)

    def primal(self) -> list[Fraction]:
        x = [Fraction(0)] * self.nvars
        for i, j in enumerate(self.basis):
            if j < self.nvars:
                x[j] = self.value(i)
        return x

    def row_duals(self, cost: Sequence[int], scale: int = 1) -> list[Fraction]:
        """Simplex multipliers mapped back to the caller's row orientation."""
        y = self.duals_num(cost)
        return [Fraction(y[k] * self.sign[k], self.D * scale) for k in range(self.m)]

    def drive_out_artificials(self) -> None:
        """Pivot zero-level artificials out of the basis where possible.

        An artificial that cannot leave sits on a redundant row; every
        structural column has a zero in that row of B^-1 A, so it stays at
        zero for the rest of the solve.
        """
        for r in range(self.m):
            if not self.is_artificial(self.basis[r]):
                continue
            Mr = self.M[r]
            basic = set(self.basis)
            for j in range(self.nvars):
                if j in basic:
                    continue
                rows, vals = self.cols[j]
                if sum(Mr[k] * v for k, v in zip(rows, vals)):
                    self.pivot(r, j, self.ftran(j))
                    break


def solve(
    columns: Sequence[Column],
    b: Sequence,
    c: Sequence | None = None,
    *,
    max_pivots: int | None = None,
) -> LPResult:
    """Minimize ``c.x`` subject to ``A x = b``, ``x >= 0``, exactly.

    ``columns[j]`` is the sparse integer column of variable ``j``. With
    ``c=None`` only feasibility is decided (phase one).
    """
    b = [Fraction(v) for v in b]
    t = _Tableau(columns, b, max_pivots)
    n, m = t.nvars, t.m

    phase1 = [0] * n + [1] * m
    status = t.run(phase1, allow_artificial=True)
    assert status == OPTIMAL
    infeas = sum((t.value(i) for i, j in enumerate(t.basis) if j >= n), Fraction(0))
    if infeas > 0:
        y = t.row_duals(phase1)
        logger.debug("phase one infeasible after %d pivots", t.pivots)
        return LPResult(INFEASIBLE, farkas=y, basis=list(t.basis), pivots=t.pivots)

    t.drive_out_artificials()
    if c is None:
        return LPResult(
            OPTIMAL,
            x=t.primal(),
            objective=Fraction(0),
            basis=list(t.basis),
            pivots=t.pivots,
        )

    c = [Fraction(v) for v in c]
    if len(c) != n:
        raise ValueError("cost vector length does not match the number of columns")
    cscale = _common_scale(c)
    cost = [int(v * cscale) for v in c] + [0] * m
    status = t.run(cost, allow_artificial=False)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED, basis=list(t.basis), pivots=t.pivots)
    x = t.primal()
    return LPResult(
        OPTIMAL,
        x=x,
        objective=sum((cj * xj for cj, xj in zip(c, x)), Fraction(0)),
        duals=t.row_duals(cost, cscale),
        basis=list(t.basis),
        pivots=t.pivots,
    )
