# -*- coding: utf-8 -*-
"""
Exact rational simplex (phase 1, Bland's least-index rule) and the strict
feasibility decision built on it.

A homogeneous system ``A f > 0`` is feasible iff ``A f >= 1`` is. Instead of
solving that directly, the solver runs phase 1 on its Farkas alternative

    yᵀA = 0,  Σ y = 1,  y >= 0

which has one row per variable (plus one) and one column per inequality. A
phase-1 optimum of 0 is a feasible y: the infeasibility certificate. A positive
optimum leaves a dual solution w = (g, t) with A g + t·1 <= 0 and t > 0, so
f = -g / t satisfies A f >= 1.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from shared.config import CONFIG
from utils.errors import BudgetError

logger = logging.getLogger("lp_solver")

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"


class SimplexTableau:
    """Dense tableau for  min cᵀz  s.t.  M z = d, z >= 0, with d >= 0.

    Artificial columns (one per row) are appended after the structural ones and
    never removed, so the dual solution can be read off their reduced costs.
    """

    def __init__(self, M: Sequence[Sequence[Fraction]], d: Sequence[Fraction]):
        self.m = len(M)
        self.n = len(M[0]) if M else 0
        self.rows: List[List[Fraction]] = []
        self.rhs: List[Fraction] = []
        for i, (row, rhs) in enumerate(zip(M, d)):
            sign = -1 if rhs < 0 else 1
            artificial = [Fraction(0)] * self.m
            artificial[i] = Fraction(1)
            self.rows.append([sign * Fraction(v) for v in row] + artificial)
            self.rhs.append(sign * Fraction(rhs))
        self.signs = [-1 if rhs < 0 else 1 for rhs in d]
        self.cost = [Fraction(0)] * self.n + [Fraction(1)] * self.m
        self.basis = [self.n + i for i in range(self.m)]
        self.reduced = self._reduced_costs()
        self.pivots = 0

    @property
    def width(self) -> int:
        return self.n + self.m

    def _reduced_costs(self) -> List[Fraction]:
        reduced = list(self.cost)
        for i, b in enumerate(self.basis):
            cb = self.cost[b]
            if cb:
                row = self.rows[i]
                for j in range(self.width):
                    reduced[j] -= cb * row[j]
        return reduced

    @property
    def objective(self) -> Fraction:
        return sum((self.cost[b] * self.rhs[i] for i, b in enumerate(self.basis)), Fraction(0))

    def pivot(self, i: int, j: int) -> None:
        piv = self.rows[i][j]
        row = [v / piv for v in self.rows[i]]
        self.rows[i] = row
        self.rhs[i] /= piv
        for k in range(self.m):
            if k == i:
                continue
            f = self.rows[k][j]
            if f:
                other = self.rows[k]
                self.rows[k] = [a - f * b for a, b in zip(other, row)]
                self.rhs[k] -= f * self.rhs[i]
        f = self.reduced[j]
        if f:
            self.reduced = [a - f * b for a, b in zip(self.reduced, row)]
        self.basis[i] = j
        self.pivots += 1

    def bland_step(self) -> str:
        try:
            j = min(j for j in range(self.width) if self.reduced[j] < 0)
        except ValueError:
            return "optimal"
        candidates = [(self.rhs[i] / self.rows[i][j], self.basis[i], i)
                      for i in range(self.m) if self.rows[i][j] > 0]
        if not candidates:
            return "unbounded"
        _, _, i = min(candidates)
        self.pivot(i, j)
        return "go_on"

    def run(self, max_pivots: Optional[int] = None) -> str:
        limit = CONFIG["MAX_PIVOTS"] if max_pivots is None else max_pivots
        while True:
            status = self.bland_step()
            if status != "go_on":
                logger.debug(f"simplex {status} after {self.pivots} pivots")
                return status
            if self.pivots >= limit:
                raise BudgetError(f"simplex exceeded {limit} pivots",
                                  {"name": "max_pivots", "value": self.pivots, "limit": limit})

    def primal(self) -> List[Fraction]:
        z = [Fraction(0)] * self.width
        for i, b in enumerate(self.basis):
            z[b] = self.rhs[i]
        return z

    def duals(self) -> List[Fraction]:
        """w_i = c(artificial_i) - reduced(artificial_i), undoing the row sign flips."""
        return [self.signs[i] * (self.cost[self.n + i] - self.reduced[self.n + i]) for i in range(self.m)]


@dataclass(frozen=True)
class StrictFeasibility:
    status: str
    witness: Optional[Tuple[Fraction, ...]] = None
    certificate: Optional[Tuple[Fraction, ...]] = None
    pivots: int = 0

    @property
    def feasible(self) -> bool:
        return self.status == FEASIBLE


def row_values(A: Sequence[Sequence[Fraction]], f: Sequence[Fraction]) -> List[Fraction]:
    return [sum((Fraction(a) * v for a, v in zip(row, f)), Fraction(0)) for row in A]


def is_strict_solution(A: Sequence[Sequence[Fraction]], f: Sequence[Fraction]) -> bool:
    return all(v > 0 for v in row_values(A, f))


def is_farkas_certificate(A: Sequence[Sequence[Fraction]], y: Sequence[Fraction]) -> bool:
    """y >= 0, y != 0 and yᵀA = 0: no f has every row of A f strictly positive."""
    if len(y) != len(A) or any(v < 0 for v in y) or not any(y):
        return False
    width = len(A[0]) if A else 0
    return all(sum((y[i] * Fraction(A[i][k]) for i in range(len(A))), Fraction(0)) == 0
               for k in range(width))


def decide_strict_feasibility(A: Sequence[Sequence[Fraction]], width: Optional[int] = None,
                              max_pivots: Optional[int] = None) -> StrictFeasibility:
    """Decide whether some f has A f > 0 (every row strictly positive)."""
    A = [[Fraction(v) for v in row] for row in A]
    width = len(A[0]) if A else (width or 0)
    if not A:
        return StrictFeasibility(FEASIBLE, witness=tuple(Fraction(1) for _ in range(width)))

    # alternative system: columns are the inequalities, rows the variables plus Σy = 1
    M = [[A[i][k] for i in range(len(A))] for k in range(width)]
    M.append([Fraction(1)] * len(A))
    d = [Fraction(0)] * width + [Fraction(1)]
    tableau = SimplexTableau(M, d)
    tableau.run(max_pivots)

    if tableau.objective == 0:
        y = tuple(tableau.primal()[: len(A)])
        if not is_farkas_certificate(A, y):
            logger.error("phase 1 reached 0 but the certificate does not verify")
            raise RuntimeError("infeasibility certificate failed re-verification")
        return StrictFeasibility(INFEASIBLE, certificate=y, pivots=tableau.pivots)

    w = tableau.duals()
    g, t = w[:width], w[width]
    f = tuple(-v / t for v in g)
    if t <= 0 or not all(v >= 1 for v in row_values(A, f)):
        logger.error(f"dual multipliers do not give a witness (t={t})")
        raise RuntimeError("witness from phase-1 duals failed re-verification")
    return StrictFeasibility(FEASIBLE, witness=f, pivots=tableau.pivots)
