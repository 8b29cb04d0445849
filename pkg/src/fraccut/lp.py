"""Exact two-phase primal simplex over the rationals.

Solves ``min c.x  s.t.  a_i.x (<= or =) b_i,  lo <= x <= hi`` with bounded
variables handled natively: a nonbasic variable sits at one of its bounds and
may flip to the other without a basis change. Bland's smallest-index rule is
used for both the entering and the leaving choice, so degenerate problems
terminate and identical inputs give identical vertices.

Arithmetic runs on ``gmpy2.mpq``; the public surface uses ``Fraction``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from gmpy2 import mpq

from .polytope import LinConstraint

OPTIMAL, INFEASIBLE, UNBOUNDED = "optimal", "infeasible", "unbounded"


@dataclass(frozen=True)
class LpProblem:
    """Minimization problem. ``upper`` entries may be None (no upper bound)."""

    n: int
    objective: tuple
    constraints: tuple[LinConstraint, ...]
    lower: tuple
    upper: tuple

    def __post_init__(self):
        object.__setattr__(self, "objective", tuple(Fraction(c) for c in self.objective))
        object.__setattr__(self, "constraints", tuple(self.constraints))
        object.__setattr__(self, "lower", tuple(Fraction(x) for x in self.lower))
        object.__setattr__(self, "upper", tuple(None if x is None else Fraction(x) for x in self.upper))
        if not (len(self.objective) == len(self.lower) == len(self.upper) == self.n):
            raise ValueError("objective/bounds length does not match n")
        for i, c in enumerate(self.constraints):
            if c.n != self.n:
                raise ValueError(f"constraint {i} has {c.n} coefficients, expected {self.n}")
        for j, (lo, hi) in enumerate(zip(self.lower, self.upper)):
            if hi is not None and lo > hi:
                raise ValueError(f"variable {j}: lower bound exceeds upper bound")

    @classmethod
    def box(cls, objective: Sequence, constraints: Sequence[LinConstraint], lo=0, hi=1) -> "LpProblem":
        n = len(objective)
        return cls(n, tuple(objective), tuple(constraints), (lo,) * n, (hi,) * n)


@dataclass(frozen=True)
class LpOutcome:
    status: str
    point: tuple[Fraction, ...] | None = None
    value: Fraction | None = None
    pivots: int = 0

    @property
    def optimal(self) -> bool:
        return self.status == OPTIMAL


class SimplexError(RuntimeError):
    pass


def solve_min(prob: LpProblem, max_iter: int = 1_000_000) -> LpOutcome:
    n = prob.n
    zero, one = mpq(0), mpq(1)
    lo = [mpq(x) for x in prob.lower]
    # shifted variables y = x - lo, 0 <= y <= hi - lo
    ub: list = [None if h is None else mpq(h) - l for h, l in zip(prob.upper, lo)]

    rows: list[list] = []
    rhs: list = []
    kinds: list[str] = []
    for c in prob.constraints:
        a = [mpq(x) for x in c.coeffs]
        b = mpq(c.rhs) - sum((ai * li for ai, li in zip(a, lo) if ai), zero)
        rows.append(a)
        rhs.append(b)
        kinds.append(c.relation)

    m = len(rows)
    n_slack = sum(k == "<=" for k in kinds)
    needs_art = [k == "=" or b < 0 for k, b in zip(kinds, rhs)]
    n_art = sum(needs_art)
    N = n + n_slack + n_art
    art_start = n + n_slack

    ub += [None] * (n_slack + n_art)
    T: list[list] = []
    basis: list[int] = []
    x = [zero] * N
    s = a_idx = 0
    for i in range(m):
        row = rows[i] + [zero] * (n_slack + n_art)
        b = rhs[i]
        slack_col = None
        if kinds[i] == "<=":
            slack_col = n + s
            row[slack_col] = one
            s += 1
        if needs_art[i]:
            if b < 0:
                row = [-v for v in row]
                b = -b
            col = art_start + a_idx
            a_idx += 1
            row[col] = one
        else:
            col = slack_col
        T.append(row)
        basis.append(col)
        x[col] = b

    c2 = [mpq(v) for v in prob.objective] + [zero] * (n_slack + n_art)
    c1 = [zero] * art_start + [one] * n_art

    def reduced(cost):
        d = cost[:]
        for i, bv in enumerate(basis):
            cb = cost[bv]
            if cb:
                d = [dj - cb * tij for dj, tij in zip(d, T[i])]
        return d

    d1 = reduced(c1)
    d2 = reduced(c2)
    is_basic = [False] * N
    for bv in basis:
        is_basic[bv] = True
    pivots = 0

    def run(phase: int) -> str:
        nonlocal d1, d2, pivots
        for _ in range(max_iter):
            d = d1 if phase == 1 else d2
            q = -1
            for j in range(N):
                if is_basic[j]:
                    continue
                dj = d[j]
                if dj < 0:
                    if ub[j] is None or x[j] < ub[j]:
                        q = j
                        break
                elif dj > 0 and x[j] > 0:
                    q = j
                    break
            if q < 0:
                return OPTIMAL
            direction = 1 if d[q] < 0 else -1
            theta = ub[q]
            leave_row = -1  # -1 means bound flip of q
            leave_var = q
            for i in range(m):
                alpha = T[i][q]
                if not alpha:
                    continue
                delta = -alpha if direction > 0 else alpha
                bv = basis[i]
                if delta < 0:
                    lim = x[bv] / -delta
                elif ub[bv] is not None:
                    lim = (ub[bv] - x[bv]) / delta
                else:
                    continue
                if theta is None or lim < theta or (lim == theta and bv < leave_var):
                    theta, leave_row, leave_var = lim, i, bv
            if theta is None:
                return UNBOUNDED
            if theta:
                step = theta * direction
                x[q] += step
                for i in range(m):
                    alpha = T[i][q]
                    if alpha:
                        x[basis[i]] -= alpha * step
            if leave_row < 0:
                continue
            lv = basis[leave_row]
            _pivot(T, leave_row, q)
            d1 = _eliminate(d1, T[leave_row], q)
            d2 = _eliminate(d2, T[leave_row], q)
            is_basic[lv] = False
            is_basic[q] = True
            basis[leave_row] = q
            pivots += 1
        raise SimplexError("iteration limit reached")

    if n_art:
        run(1)
        if any(x[j] for j in range(art_start, N)):
            return LpOutcome(INFEASIBLE, pivots=pivots)
        for j in range(art_start, N):
            ub[j] = zero
    status = run(2)
    if status == UNBOUNDED:
        return LpOutcome(UNBOUNDED, pivots=pivots)
    point = tuple(Fraction(int(v.numerator), int(v.denominator)) + Fraction(l) for v, l in zip(x[:n], prob.lower))
    value = sum((c * p for c, p in zip(prob.objective, point)), Fraction(0))
    return LpOutcome(OPTIMAL, point, value, pivots)


def _pivot(T: list[list], r: int, q: int) -> None:
    pr = T[r]
    piv = pr[q]
    if piv != 1:
        pr = [v / piv for v in pr]
        T[r] = pr
    nz = [j for j, v in enumerate(pr) if v]
    for i, row in enumerate(T):
        if i == r:
            continue
        f = row[q]
        if f:
            for j in nz:
                row[j] -= f * pr[j]


def _eliminate(d: list, pr: list, q: int) -> list:
    f = d[q]
    if not f:
        return d
    return [dj - f * pj if pj else dj for dj, pj in zip(d, pr)]
