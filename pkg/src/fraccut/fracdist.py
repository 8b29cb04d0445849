"""Fractional distance by facet sweeps over the fundamental polytope or cone.

Each facet LP minimizes the l1-weight over the feasible set intersected with
one constraint held at equality. The ``full`` method uses the whole
fundamental polytope and every constraint; the ``cone`` method uses only the
active constraints plus the box, and sweeps only inactive facets. Both give
the same minimum over nonzero values.

A parity facet with subset S forces ``sum(f) >= |S| - 1`` and a box-upper
facet forces ``sum(f) >= 1``. With ``prune=True`` facets are visited in
groups of increasing bound and a group is skipped once its bound strictly
exceeds the best value found, which never changes the minimum or the set of
minimizers discovered.

One LP per facet returns a single optimum, so vertices tied at the minimum
can hide behind each other. With ``explore=True`` the optimal face of every
facet attaining the minimum is probed further: each coordinate is minimized
and maximized over it, and every vertex found is added to gamma. This makes
gamma complete on small examples; it remains a lower bound in general.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .gf2 import BitMatrix
from .highs import HighsLp, exact_vertex
from .lp import INFEASIBLE, OPTIMAL, LpProblem, solve_min
from .polytope import (
    BOX_LOWER,
    BOX_UPPER,
    PARITY,
    ConstraintId,
    LinConstraint,
    cone_parity_constraints,
    fundamental_polytope,
    in_fundamental_polytope,
    odd_subsets,
)

log = logging.getLogger(__name__)

FULL, CONE = "full", "cone"
VALUE, ZERO_SKIPPED = "value", "zero_skipped"
OK, NO_FRACTIONAL_VERTEX = "ok", "no_fractional_vertex"
FLOAT_TIE_TOL = 1e-6

Point = tuple[Fraction, ...]


class NoFractionalVertex(RuntimeError):
    """The polytope has no nonzero vertex."""


@dataclass(frozen=True)
class FacetResult:
    cid: ConstraintId
    status: str  # VALUE, INFEASIBLE or ZERO_SKIPPED
    value: Fraction | None = None
    point: Point | None = None
    approx: float | None = None  # float optimum when only pre-screened


@dataclass(frozen=True)
class FracDistReport:
    d_frac: Fraction | None
    method: str
    gamma: tuple[Point, ...]
    per_facet: tuple[FacetResult, ...]
    lp_count: int
    status: str = OK
    engine: str = "exact"

    @property
    def value(self) -> Fraction:
        if self.status != OK:
            raise NoFractionalVertex("the polytope has no nonzero vertex")
        return self.d_frac


def _facet_groups(H: BitMatrix, method: str) -> Iterator[tuple[int, list[ConstraintId]]]:
    """Facet ids grouped by their weight lower bound, deduplicated by constraint."""
    n = H.n
    if method == FULL:
        active = [ConstraintId(BOX_LOWER, i) for i in range(n)]
        for i, r in enumerate(H.rows):
            active += [ConstraintId(PARITY, i, 1 << j) for j in r.support()]
        yield 0, active
    yield 1, [ConstraintId(BOX_UPPER, i) for i in range(n)]
    wmax = max(H.row_weights())
    for s in range(3, wmax + 1, 2):
        ids = []
        for i, r in enumerate(H.rows):
            ids += [ConstraintId(PARITY, i, mask) for mask in odd_subsets(r.support(), [s])]
        yield s - 1, ids


def _facet_constraint(H: BitMatrix, cid: ConstraintId) -> LinConstraint:
    n = H.n
    if cid.kind == PARITY:
        coeffs = [0] * n
        for j in H.rows[cid.index].support():
            coeffs[j] = 1 if (cid.subset >> j) & 1 else -1
        return LinConstraint(tuple(coeffs), cid.size - 1)
    coeffs = [0] * n
    if cid.kind == BOX_LOWER:
        coeffs[cid.index] = -1
        return LinConstraint(tuple(coeffs), 0)
    coeffs[cid.index] = 1
    return LinConstraint(tuple(coeffs), 1)


def _base_constraints(H: BitMatrix, method: str) -> list[LinConstraint]:
    if method == CONE:
        return [c for _, c in cone_parity_constraints(H)]
    return [c for cid, c in fundamental_polytope(H).constraints if cid.kind == PARITY]


def _facet_problem(n: int, base: list[LinConstraint], cid: ConstraintId, c: LinConstraint) -> LpProblem:
    lo, hi = [0] * n, [1] * n
    cons = list(base)
    if cid.kind == BOX_UPPER:
        lo[cid.index] = 1
    elif cid.kind == BOX_LOWER:
        hi[cid.index] = 0
    else:
        cons.append(c.as_equality())
    return LpProblem(n, (1,) * n, tuple(cons), tuple(lo), tuple(hi))


def _solve_exact(args) -> FacetResult:
    n, base, cid, c, method = args
    out = solve_min(_facet_problem(n, base, cid, c))
    if out.status == INFEASIBLE:
        return FacetResult(cid, INFEASIBLE)
    if out.value == 0:
        return FacetResult(cid, ZERO_SKIPPED, out.value, out.point)
    return FacetResult(cid, VALUE, out.value, out.point)


def facet_min_weight(H: BitMatrix, cid: ConstraintId, relaxed: bool = False) -> FacetResult:
    """Exact optimum of one facet LP over P(H) (or K(H) when ``relaxed``)."""
    c = _facet_constraint(H, cid)
    if relaxed and c.is_active:
        raise ValueError(f"{cid} is active; the relaxed facet LP is defined for inactive constraints only")
    method = CONE if relaxed else FULL
    return _solve_exact((H.n, _base_constraints(H, method), cid, c, method))


def fractional_distance(H: BitMatrix, method: str = CONE, engine: str = "exact",
                        prune: bool = False, jobs: int = 1, explore: bool = True) -> FracDistReport:
    """Fractional distance and the minimum-weight vertices discovered by the sweep.

    ``engine="float"`` solves each facet LP in floating point and rebuilds
    exact vertices only for the facets tied (within 1e-6) with the best float
    value; a facet whose exact rebuild fails is re-solved with the exact
    simplex.
    """
    if method not in (FULL, CONE):
        raise ValueError(f"unknown method {method!r}")
    if engine not in ("exact", "float"):
        raise ValueError(f"unknown engine {engine!r}")
    if all(r.is_zero() for r in H.rows):
        raise ValueError("parity-check matrix is all-zero")
    n = H.n
    base = _base_constraints(H, method)
    results: dict[ConstraintId, FacetResult] = {}
    seen: set[LinConstraint] = set()
    best: float | None = None
    lp_count = 0
    highs = HighsLp(n, base, [1.0] * n) if engine == "float" else None

    for bound, ids in _facet_groups(H, method):
        if prune and bound == 0:
            continue
        if prune and best is not None and bound > best + FLOAT_TIE_TOL:
            break
        todo = []
        for cid in ids:
            c = _facet_constraint(H, cid)
            if c in seen:
                continue
            seen.add(c)
            todo.append((cid, c))
        lp_count += len(todo)
        if engine == "exact":
            args = [(n, base, cid, c, method) for cid, c in todo]
            if jobs > 1 and len(args) > 1:
                with ProcessPoolExecutor(jobs) as pool:
                    group = list(pool.map(_solve_exact, args, chunksize=max(1, len(args) // (4 * jobs))))
            else:
                group = [_solve_exact(a) for a in args]
            for r in group:
                results[r.cid] = r
                if r.status == VALUE and (best is None or r.value < best):
                    best = float(r.value)
        else:
            for cid, c in todo:
                if cid.kind == BOX_UPPER:
                    st, x, val = highs.solve_with_fixed(cid.index, 1.0)
                elif cid.kind == BOX_LOWER:
                    st, x, val = highs.solve_with_fixed(cid.index, 0.0)
                else:
                    st, x, val = highs.solve_with_equality(c.as_equality())
                if st == INFEASIBLE:
                    results[cid] = FacetResult(cid, INFEASIBLE)
                elif c.is_active:
                    # origin lies on the facet
                    results[cid] = FacetResult(cid, ZERO_SKIPPED, Fraction(0), approx=val)
                else:
                    results[cid] = _with_float_point(FacetResult(cid, VALUE, approx=val), x)
                    if best is None or val < best:
                        best = val

    if engine == "float" and best is not None:
        _confirm_exact(H, method, base, results, best)

    values = [r.value for r in results.values() if r.status == VALUE and r.value is not None]
    per_facet = tuple(sorted(results.values(), key=lambda r: r.cid.key))
    if not values:
        return FracDistReport(None, method, (), per_facet, lp_count, NO_FRACTIONAL_VERTEX, engine)
    d = min(values)
    gamma = set()
    for r in per_facet:
        if r.status == VALUE and r.value == d:
            found = {r.point}
            if explore:
                found |= _explore_face(H, base, r.cid, d, engine)
            gamma |= {p for p in found if method == FULL or in_fundamental_polytope(H, p)}
    return FracDistReport(d, method, tuple(sorted(gamma)), per_facet, lp_count, OK, engine)


class _FloatPoint(tuple):
    pass


def _with_float_point(r: FacetResult, x) -> FacetResult:
    # float solution parked in ``point`` until confirmed; replaced by an exact vertex or dropped
    return FacetResult(r.cid, r.status, None, _FloatPoint(float(v) for v in x), r.approx)


def _confirm_exact(H: BitMatrix, method: str, base: list[LinConstraint],
                   results: dict[ConstraintId, FacetResult], best: float) -> None:
    n = H.n
    for cid, r in list(results.items()):
        if r.status != VALUE:
            continue
        if r.approx > best + FLOAT_TIE_TOL:
            results[cid] = FacetResult(cid, VALUE, None, None, r.approx)
            continue
        c = _facet_constraint(H, cid)
        prob = _facet_problem(n, base, cid, c)
        point = exact_vertex(prob.constraints, prob.lower, prob.upper, r.point)
        if point is None or abs(float(sum(point)) - r.approx) > FLOAT_TIE_TOL:
            log.debug("exact rebuild failed for %s; falling back to exact simplex", cid)
            results[cid] = _solve_exact((n, base, cid, c, method))
        else:
            results[cid] = FacetResult(cid, VALUE, sum(point, Fraction(0)), point, r.approx)


def _explore_face(H: BitMatrix, base: list[LinConstraint], cid: ConstraintId, d: Fraction,
                  engine: str) -> set[Point]:
    """Vertices of {facet, sum(x) = d} reached by minimizing and maximizing each coordinate."""
    n = H.n
    cons = tuple(base) + (_facet_constraint(H, cid).as_equality(), LinConstraint((1,) * n, d, "="))
    lo, hi = (0,) * n, (1,) * n
    highs = HighsLp(n, cons, [0.0] * n) if engine == "float" else None
    found = set()
    for j in range(n):
        for sign in (1, -1):
            obj = [0] * n
            obj[j] = sign
            point = None
            if highs is not None:
                highs.set_objective(obj)
                st, x, _ = highs.solve()
                if st != OPTIMAL:
                    continue
                point = exact_vertex(cons, lo, hi, list(x))
            if point is None:
                out = solve_min(LpProblem(n, obj, cons, lo, hi))
                point = out.point if out.status == OPTIMAL else None
            if point is not None and any(point):
                found.add(point)
    return found


def gamma_set(H: BitMatrix, **kw) -> tuple[Point, ...]:
    rep = fractional_distance(H, **kw)
    if rep.status != OK:
        raise NoFractionalVertex("the polytope has no nonzero vertex")
    return rep.gamma


def weight(p: Sequence) -> Fraction:
    return sum((Fraction(x) for x in p), Fraction(0))
