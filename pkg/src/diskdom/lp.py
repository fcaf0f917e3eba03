"""Covering LP relaxation of the weighted dominating set problem, a
self-contained two-phase dense simplex, and the copy-based rounding step.

The LP has one variable per disk and one covering row per disk:

    minimize    sum_d w_d x_d
    subject to  sum_{u in N[d]} x_u >= 1   for every disk d
                x >= 0

Rows are never empty because closed neighborhoods contain the disk itself.
The solver is a plain dense tableau simplex with Bland's anti-cycling rule,
chosen for determinism over speed; instances here are desk-scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import DiskInstance
from .graph import DiskMultiset, IntersectionGraph, all_depths, build_graph

DEFAULT_TOL = 1e-7

_PIVOT_EPS = 1e-10


class LpSolveError(RuntimeError):
    """Simplex failed to reach a feasible optimum within its budget."""


class RoundingError(RuntimeError):
    """Rounded multiset violated its weight or coverage guarantee; the LP
    solution was infeasible or tolerance-corrupted."""


@dataclass(frozen=True)
class LpProblem:
    weights: tuple[float, ...]
    rows: tuple[tuple[int, ...], ...]  # row d lists the variables of N[d]

    @property
    def n(self) -> int:
        return len(self.weights)


@dataclass(frozen=True)
class LpSolution:
    x: tuple[float, ...]
    lambda_star: float
    feasibility_slack: float  # min over rows of (row sum - 1)


def build_lp(inst: DiskInstance, g: IntersectionGraph | None = None) -> LpProblem:
    if g is None:
        g = build_graph(inst)
    rows = tuple(g.closed_neighborhood(d) for d in range(g.n))
    return LpProblem(weights=inst.weights, rows=rows)


def _pivot(tableau: np.ndarray, row: int, col: int) -> None:
    tableau[row] /= tableau[row, col]
    factors = tableau[:, col].copy()
    factors[row] = 0.0
    tableau -= np.outer(factors, tableau[row])


def _bland_entering(costs: np.ndarray, allowed: int) -> int | None:
    for j in range(allowed):
        if costs[j] < -_PIVOT_EPS:
            return j
    return None


def _bland_leaving(tableau: np.ndarray, col: int, basis: list[int], m: int) -> int | None:
    best_row = None
    best_ratio = math.inf
    for i in range(m):
        coef = tableau[i, col]
        if coef > _PIVOT_EPS:
            ratio = tableau[i, -1] / coef
            if ratio < best_ratio - _PIVOT_EPS or (
                ratio < best_ratio + _PIVOT_EPS
                and (best_row is None or basis[i] < basis[best_row])
            ):
                best_ratio = ratio
                best_row = i
    return best_row


def solve_lp(problem: LpProblem, tol: float = DEFAULT_TOL) -> LpSolution:
    """Solve the covering LP to optimality.

    Returns a solution with x >= 0, every row >= 1 - tol, and the optimal
    objective.  Deterministic: Bland's rule picks the lowest-index entering
    variable and the lowest-index basic variable on ratio ties.
    """
    n = problem.n
    m = n  # one covering row per disk
    w = np.asarray(problem.weights, dtype=float)

    # Columns: n structural x, m surplus, m artificial, then the rhs.
    n_cols = n + 2 * m
    tableau = np.zeros((m, n_cols + 1))
    for d, row in enumerate(problem.rows):
        tableau[d, list(row)] = 1.0
        tableau[d, n + d] = -1.0
        tableau[d, n + m + d] = 1.0
        tableau[d, -1] = 1.0
    basis = [n + m + d for d in range(m)]

    max_pivots = 200 * (m + n_cols)

    def run_phase(costs: np.ndarray, allowed: int) -> np.ndarray:
        # Reduced costs consistent with the current basis.
        z = costs.copy()
        for i, b in enumerate(basis):
            if abs(z[b]) > 0:
                z -= z[b] * tableau[i]
        for _ in range(max_pivots):
            col = _bland_entering(z, allowed)
            if col is None:
                return z
            row = _bland_leaving(tableau, col, basis, m)
            if row is None:
                raise LpSolveError("unbounded pivot in covering LP")
            _pivot(tableau, row, col)
            z -= z[col] * tableau[row]
            basis[row] = col
        raise LpSolveError(f"simplex exceeded {max_pivots} pivots")

    # Phase 1: drive artificials to zero.
    phase1_costs = np.zeros(n_cols + 1)
    phase1_costs[n + m : n + 2 * m] = 1.0
    z1 = run_phase(phase1_costs, allowed=n_cols)
    if -z1[-1] > 1e-8:
        raise LpSolveError("phase 1 ended with positive infeasibility")
    # Pivot any artificial still basic (at zero) out of the basis if possible.
    for i in range(m):
        if basis[i] >= n + m:
            for j in range(n + m):
                if abs(tableau[i, j]) > _PIVOT_EPS:
                    _pivot(tableau, i, j)
                    basis[i] = j
                    break

    # Phase 2: artificial columns are frozen out of the entering choice.
    phase2_costs = np.zeros(n_cols + 1)
    phase2_costs[:n] = w
    run_phase(phase2_costs, allowed=n + m)

    x = np.zeros(n)
    for i, b in enumerate(basis):
        if b < n:
            x[b] = tableau[i, -1]
    x = np.maximum(x, 0.0)

    row_sums = np.array([x[list(row)].sum() for row in problem.rows])
    slack = float(row_sums.min() - 1.0)
    if slack < -tol:
        raise LpSolveError(f"solution violates a covering row by {-slack:.3e}")
    return LpSolution(
        x=tuple(float(v) for v in x),
        lambda_star=float(w @ x),
        feasibility_slack=slack,
    )


def round_to_multiset(
    sol: LpSolution,
    inst: DiskInstance,
    g: IntersectionGraph | None = None,
    tol: float = DEFAULT_TOL,
) -> DiskMultiset:
    """Turn an LP solution into the copy multiset: floor(2n * x_d) copies of
    each disk d with x_d >= 1/(2n).

    Verifies the two rounding guarantees before returning: total weight at
    most 2n * lambda_star (tolerance-adjusted) and every disk covered by at
    least n copies.  A failure means the LP solution was not really feasible.
    """
    if g is None:
        g = build_graph(inst)
    n = inst.n
    counts: dict[int, int] = {}
    for d, xd in enumerate(sol.x):
        copies = math.floor(2 * n * xd + 1e-12)
        if copies >= 1:
            counts[d] = copies
    multiset = DiskMultiset(counts)

    weight = multiset.total_weight(inst.weights)
    max_w = max(inst.weights)
    weight_cap = 2 * n * sol.lambda_star + n * max_w * tol
    if weight > weight_cap + 1e-9:
        raise RoundingError(
            f"rounded weight {weight:.6g} exceeds cap {weight_cap:.6g}"
        )
    min_depth = min(all_depths(multiset, g))
    if min_depth < n:
        raise RoundingError(
            f"rounded multiset covers some disk only {min_depth} < n={n} times; "
            "re-solve the LP at a tighter tolerance"
        )
    return multiset


def dump_lp(problem: LpProblem) -> str:
    """Serialize in LP text format, for cross-checking with external tools."""
    lines = ["Minimize"]
    obj = " + ".join(f"{w:.17g} x{d}" for d, w in enumerate(problem.weights))
    lines.append(f" obj: {obj}")
    lines.append("Subject To")
    for d, row in enumerate(problem.rows):
        terms = " + ".join(f"x{u}" for u in row)
        lines.append(f" cover{d}: {terms} >= 1")
    lines.append("Bounds")
    for d in range(problem.n):
        lines.append(f" x{d} >= 0")
    lines.append("End")
    return "\n".join(lines) + "\n"
