"""Thin floating-point LP wrapper around HiGHS, plus exact vertex recovery.

Float solves are only used to rank candidates; anything reported as a value
is rebuilt exactly from the tight constraints of the float solution.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

import highspy
import numpy as np
from gmpy2 import mpq

from .polytope import LinConstraint

TIGHT_TOL = 1e-7
INF = highspy.kHighsInf


class HighsLp:
    """A box-bounded LP ``min c.x, A x (<=|=) b`` kept warm between solves."""

    def __init__(self, n: int, constraints: Sequence[LinConstraint], objective: Sequence[float],
                 lower: float = 0.0, upper: float = 1.0):
        self.n = n
        self.lower = np.full(n, float(lower))
        self.upper = np.full(n, float(upper))
        h = highspy.Highs()
        h.setOptionValue("output_flag", False)
        h.setOptionValue("threads", 1)
        h.setOptionValue("solver", "simplex")
        h.setOptionValue("primal_feasibility_tolerance", 1e-9)
        h.setOptionValue("dual_feasibility_tolerance", 1e-9)
        h.addVars(n, self.lower, self.upper)
        h.changeObjectiveSense(highspy.ObjSense.kMinimize)
        self.h = h
        self.set_objective(objective)
        self.base_rows = 0
        self.add_rows(constraints)

    def add_rows(self, constraints: Sequence[LinConstraint]) -> None:
        if not constraints:
            return
        lo, hi, starts, idx, vals = [], [], [], [], []
        for c in constraints:
            starts.append(len(idx))
            for j, a in enumerate(c.coeffs):
                if a:
                    idx.append(j)
                    vals.append(float(a))
            hi.append(float(c.rhs))
            lo.append(float(c.rhs) if c.relation == "=" else -INF)
        self.h.addRows(len(constraints), np.array(lo), np.array(hi), len(idx),
                       np.array(starts, dtype=np.int32), np.array(idx, dtype=np.int32), np.array(vals))
        self.base_rows += len(constraints)

    def set_objective(self, objective: Sequence[float]) -> None:
        self.objective = np.asarray(objective, dtype=float)
        self.h.changeColsCost(self.n, np.arange(self.n, dtype=np.int32), np.asarray(objective, dtype=float))

    def _solve(self):
        self.h.run()
        st = self.h.getModelStatus()
        if st == highspy.HighsModelStatus.kOptimal:
            x = np.array(self.h.getSolution().col_value)
            return "optimal", x, float(self.h.getInfo().objective_function_value)
        if st == highspy.HighsModelStatus.kInfeasible:
            return "infeasible", None, None
        if st == highspy.HighsModelStatus.kUnbounded:
            return "unbounded", None, None
        raise RuntimeError(f"HiGHS returned {self.h.modelStatusToString(st)}")

    def solve(self):
        return self._solve()

    def solve_with_row(self, c: LinConstraint, objective: Sequence[float] | None = None):
        """Solve with one extra row (and optionally another objective), then restore."""
        nz = [j for j, a in enumerate(c.coeffs) if a]
        lo = float(c.rhs) if c.relation == "=" else -INF
        self.h.addRow(lo, float(c.rhs), len(nz), np.array(nz, dtype=np.int32),
                      np.array([float(c.coeffs[j]) for j in nz]))
        if objective is not None:
            saved = self.objective
            self.set_objective(objective)
        try:
            return self._solve()
        finally:
            self.h.deleteRows(1, np.array([self.base_rows], dtype=np.int32))
            if objective is not None:
                self.set_objective(saved)

    def solve_with_equality(self, c: LinConstraint):
        return self.solve_with_row(c.as_equality())

    def solve_with_fixed(self, j: int, value: float):
        self.h.changeColBounds(j, value, value)
        try:
            return self._solve()
        finally:
            self.h.changeColBounds(j, self.lower[j], self.upper[j])


def exact_vertex(constraints: Sequence[LinConstraint], lower: Sequence, upper: Sequence,
                 x: Sequence[float], tol: float = TIGHT_TOL) -> tuple[Fraction, ...] | None:
    """Rebuild the vertex near ``x`` exactly from its tight constraints.

    Returns None when the tight set does not pin down a unique point or the
    recovered point violates any constraint in exact arithmetic.
    """
    n = len(x)
    fixed: dict[int, mpq] = {}
    for j in range(n):
        if abs(x[j] - float(lower[j])) <= tol:
            fixed[j] = mpq(lower[j])
        elif upper[j] is not None and abs(x[j] - float(upper[j])) <= tol:
            fixed[j] = mpq(upper[j])
    rows = []
    for c in constraints:
        lhs = sum(a * x[j] for j, a in enumerate(c.coeffs) if a)
        if c.relation == "=" or abs(lhs - c.rhs) <= tol:
            r = mpq(c.rhs)
            coeffs = {}
            for j, a in enumerate(c.coeffs):
                if not a:
                    continue
                if j in fixed:
                    r -= a * fixed[j]
                else:
                    coeffs[j] = mpq(a)
            rows.append((coeffs, r))
    free = [j for j in range(n) if j not in fixed]
    sol = _solve_sparse(rows, free)
    if sol is None:
        return None
    sol.update(fixed)
    point = tuple(Fraction(int(sol[j].numerator), int(sol[j].denominator)) for j in range(n))
    for j, v in enumerate(point):
        if v < lower[j] or (upper[j] is not None and v > upper[j]):
            return None
    # exact feasibility check in integers over a common denominator
    den = math.lcm(*(v.denominator for v in point))
    num = [v.numerator * (den // v.denominator) for v in point]
    for c in constraints:
        lhs = sum(a * num[j] for j, a in enumerate(c.coeffs) if a)
        rhs = Fraction(c.rhs) * den
        if lhs > rhs or (c.relation == "=" and lhs != rhs):
            return None
    return point


def _solve_sparse(rows: list[tuple[dict, mpq]], free: list[int]) -> dict[int, mpq] | None:
    # Gauss-Jordan on sparse dict rows; requires a unique solution
    pivots: dict[int, tuple[dict, mpq]] = {}
    for coeffs, r in rows:
        coeffs = dict(coeffs)
        for pj, (pc, pr) in pivots.items():
            f = coeffs.get(pj)
            if f:
                for k, v in pc.items():
                    nv = coeffs.get(k, 0) - f * v
                    if nv:
                        coeffs[k] = nv
                    else:
                        coeffs.pop(k, None)
                r -= f * pr
        if not coeffs:
            if r != 0:
                return None
            continue
        pj = min(coeffs)
        inv = 1 / coeffs[pj]
        coeffs = {k: v * inv for k, v in coeffs.items()}
        r *= inv
        for qj, (qc, qr) in list(pivots.items()):
            f = qc.get(pj)
            if f:
                for k, v in coeffs.items():
                    nv = qc.get(k, 0) - f * v
                    if nv:
                        qc[k] = nv
                    else:
                        qc.pop(k, None)
                pivots[qj] = (qc, qr - f * r)
        pivots[pj] = (coeffs, r)
        if len(pivots) == len(free):
            break
    if len(pivots) < len(free):
        return None
    return {j: pivots[j][1] for j in free}
