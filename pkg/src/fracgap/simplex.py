"""Dense two-phase tableau simplex with Bland's rule.

Solves ``max c.x  s.t.  A x = b, x >= 0``. Small dense problems only.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .config import DEFAULT, Tolerances
from .errors import InputError, LPBreakdown

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass
class LinearProgram:
    c: np.ndarray  # objective to maximize, length n
    A: np.ndarray  # m x n equality constraints
    b: np.ndarray  # length m
    row_labels: list = field(default_factory=list)

    def __post_init__(self):
        self.c = np.asarray(self.c, dtype=float).reshape(-1)
        self.A = np.asarray(self.A, dtype=float).reshape(-1, self.c.size)
        self.b = np.asarray(self.b, dtype=float).reshape(-1)
        if self.A.shape[0] != self.b.size:
            raise InputError(f"A has {self.A.shape[0]} rows but b has {self.b.size} entries")
        for arr in (self.c, self.A, self.b):
            if not np.all(np.isfinite(arr)):
                raise InputError("linear program has non-finite entries")

    @property
    def num_vars(self) -> int:
        return self.c.size

    @property
    def num_rows(self) -> int:
        return self.b.size


@dataclass
class LPSolution:
    status: str
    x: np.ndarray | None = None
    objective: float | None = None
    iterations: int = 0
    residual: float | None = None

    @property
    def optimal(self) -> bool:
        return self.status == OPTIMAL


class _Tableau:
    def __init__(self, T: np.ndarray, basis: list[int], tol: Tolerances):
        self.T = T
        self.basis = basis
        self.tol = tol
        self.iterations = 0

    def pivot(self, r: int, j: int) -> None:
        T = self.T
        piv = T[r, j]
        if abs(piv) < self.tol.lp_pivot:
            raise LPBreakdown(
                f"pivot {piv:.3e} below {self.tol.lp_pivot:g}",
                details={"row": r, "column": j, "basis": list(self.basis)},
            )
        T[r] /= piv
        col = T[:, j].copy()
        col[r] = 0.0
        T -= np.outer(col, T[r])
        T[:, j] = 0.0
        T[r, j] = 1.0
        self.basis[r] = j
        self.iterations += 1

    def run(self, ncols: int, max_iter: int) -> str:
        """Minimize the cost row (last row) over columns ``< ncols``."""
        T, eps = self.T, self.tol.lp_feasibility
        m = T.shape[0] - 1
        while True:
            if self.iterations > max_iter:
                raise LPBreakdown("iteration limit reached", details={"basis": list(self.basis)})
            cost = T[-1, :ncols]
            entering = next((j for j in range(ncols) if cost[j] < -eps), None)
            if entering is None:
                return OPTIMAL
            col = T[:m, entering]
            best_row, best_ratio = None, None
            for i in range(m):
                if col[i] > eps:
                    ratio = T[i, -1] / col[i]
                    if (best_ratio is None or ratio < best_ratio - 1e-15
                            or (abs(ratio - best_ratio) <= 1e-15 and self.basis[i] < self.basis[best_row])):
                        best_row, best_ratio = i, ratio
            if best_row is None:
                return UNBOUNDED
            self.pivot(best_row, entering)


def solve_lp(lp: LinearProgram, tol: Tolerances = DEFAULT) -> LPSolution:
    n, m = lp.num_vars, lp.num_rows
    A, b = lp.A.copy(), lp.b.copy()
    neg = b < 0
    A[neg] *= -1
    b[neg] *= -1
    max_iter = 50 * (m + n) + 1000

    # phase 1: artificials n..n+m-1 in the basis, minimize their sum
    T = np.zeros((m + 1, n + m + 1))
    T[:m, :n] = A
    T[:m, n:n + m] = np.eye(m)
    T[:m, -1] = b
    T[-1, :n] = -A.sum(axis=0)
    T[-1, -1] = -b.sum()
    tab = _Tableau(T, list(range(n, n + m)), tol)
    tab.run(n + m, max_iter)
    infeas = -tab.T[-1, -1]
    if infeas > tol.lp_feasibility * max(1.0, float(np.abs(b).max(initial=0.0))):
        return LPSolution(INFEASIBLE, iterations=tab.iterations)

    # drive remaining artificials out; rows that cannot pivot are redundant
    keep = []
    for i in range(m):
        if tab.basis[i] >= n:
            row = tab.T[i, :n]
            j = next((j for j in range(n) if abs(row[j]) > tol.lp_feasibility), None)
            if j is None:
                continue
            tab.pivot(i, j)
        keep.append(i)
    T2 = np.zeros((len(keep) + 1, n + 1))
    T2[:-1, :n] = tab.T[keep, :n]
    T2[:-1, -1] = tab.T[keep, -1]
    basis = [tab.basis[i] for i in keep]

    # phase 2: minimize -c
    cost = -lp.c
    cb = cost[basis]
    T2[-1, :n] = cost - cb @ T2[:-1, :n]
    T2[-1, -1] = -cb @ T2[:-1, -1]
    tab2 = _Tableau(T2, basis, tol)
    tab2.iterations = tab.iterations
    status = tab2.run(n, max_iter)
    if status == UNBOUNDED:
        return LPSolution(UNBOUNDED, iterations=tab2.iterations)
    x = np.zeros(n)
    for i, j in enumerate(tab2.basis):
        x[j] = max(tab2.T[i, -1], 0.0)
    residual = float(np.abs(lp.A @ x - lp.b).max(initial=0.0))
    if residual > 1e-8:
        raise LPBreakdown(f"optimal point violates constraints by {residual:.3e}", details={"basis": tab2.basis})
    return LPSolution(OPTIMAL, x, float(lp.c @ x), tab2.iterations, residual)
