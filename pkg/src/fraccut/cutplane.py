"""Redundant parity checks that cut fractional vertices off the fundamental polytope.

A redundant row ``h`` (any GF(2) combination of the rows of H) cuts a point
``p`` when, with ``j`` the largest coordinate of ``p`` on ``Supp(h)``,

    p_j > sum_{l in Supp(h), l != j} p_l.

Appending such a row keeps every codeword but removes ``p`` from the
fundamental polytope. Only rows of H touching ``Supp(p)`` need to take part
in the combination, which keeps the search space small for sparse H.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .fracdist import CONE, OK, FracDistReport, fractional_distance
from .gf2 import BitMatrix, BitVector, in_row_space, row_echelon
from .polytope import in_fundamental_polytope

log = logging.getLogger(__name__)

Point = Sequence[Fraction]


@dataclass(frozen=True)
class CutRecord:
    iteration: int
    target_vertex: tuple[Fraction, ...]
    redundant_row: BitVector
    d_frac_before: Fraction
    d_frac_after: Fraction | None
    gamma_size_before: int
    method: str = "echelon"  # or "exhaustive"


@dataclass
class GreedyConfig:
    max_rows: int = 40
    target_dfrac: Fraction | None = None
    exhaustive_fallback_limit: int = 20
    only_improving: bool = False
    method: str = CONE
    engine: str = "exact"
    prune: bool = True
    jobs: int = 1
    check_cuts: bool = True
    explore: bool = True  # probe optimal faces for tied minimum-weight vertices

    def __post_init__(self):
        if self.max_rows < 0:
            raise ValueError("max_rows must be >= 0")
        if not 0 <= self.exhaustive_fallback_limit <= 24:
            raise ValueError("exhaustive_fallback_limit must be in [0, 24]")
        if self.target_dfrac is not None:
            self.target_dfrac = Fraction(self.target_dfrac)


@dataclass
class GreedyResult:
    final: BitMatrix
    log: list[CutRecord] = field(default_factory=list)
    report: FracDistReport | None = None  # fractional distance of ``final``
    stop_reason: str = ""


def cutting_condition(p: Point, h: BitVector) -> bool:
    if len(p) != h.n:
        raise ValueError(f"length mismatch: {len(p)} vs {h.n}")
    supp = h.support()
    if not supp:
        return False
    vals = [Fraction(p[i]) for i in supp]
    top = max(vals)
    return top > sum(vals) - top


def support_index_set(H: BitMatrix, p: Point) -> list[int]:
    """Rows of H whose support meets Supp(p), in row order."""
    if len(p) != H.n:
        raise ValueError(f"length mismatch: {len(p)} vs {H.n}")
    pmask = sum(1 << i for i, x in enumerate(p) if x)
    return [i for i, r in enumerate(H.rows) if r.word & pmask]


def search_order(p: Point) -> list[int]:
    """Columns ordered tau_2, ..., tau_n, tau_1 where tau sorts p descending.

    Ties keep the smaller column index first.
    """
    tau = sorted(range(len(p)), key=lambda i: (-Fraction(p[i]), i))
    return tau[1:] + tau[:1]


def search_redundant_row(H: BitMatrix, p: Point) -> BitVector | None:
    """Echelon-based search: the first row of the echelon form of H^Q that cuts p."""
    if not any(p):
        raise ValueError("p must be nonzero")
    Q = support_index_set(H, p)
    HQ = H.submatrix(Q)
    U = row_echelon(HQ, search_order(p)).echelon
    for u in U.rows:
        if cutting_condition(p, u):
            return u
    return None


class SearchTooLarge(ValueError):
    pass


def exhaustive_cut_search(H: BitMatrix, p: Point, limit: int = 20) -> BitVector | None:
    """First cutting combination of H^Q rows in ascending coefficient-mask order."""
    Q = support_index_set(H, p)
    if len(Q) > limit:
        raise SearchTooLarge(f"|Q| = {len(Q)} exceeds limit {limit}")
    words = [H.rows[i].word for i in Q]
    # Gray-code walk would be faster but loses the ascending-mask order
    for mask in range(1, 1 << len(Q)):
        w = 0
        for b, hw in enumerate(words):
            if (mask >> b) & 1:
                w ^= hw
        h = BitVector(H.n, w)
        if cutting_condition(p, h):
            return h
    return None


def all_cutting_rows(H: BitMatrix, p: Point, rows: Sequence[int] | None = None) -> list[tuple[int, BitVector]]:
    """Every (mask, combination) over the given rows (default: all rows) that cuts p."""
    ids = list(range(H.m)) if rows is None else list(rows)
    out = []
    for mask in range(1, 1 << len(ids)):
        w = 0
        for b, i in enumerate(ids):
            if (mask >> b) & 1:
                w ^= H.rows[i].word
        h = BitVector(H.n, w)
        if cutting_condition(p, h):
            out.append((mask, h))
    return out


def stack(H: BitMatrix, h: BitVector) -> BitMatrix:
    if h.n != H.n:
        raise ValueError(f"length mismatch: {h.n} vs {H.n}")
    if h.is_zero():
        raise ValueError("cannot stack a zero row")
    return H.stack(h)


def check_cut(H: BitMatrix, p: Point, h: BitVector) -> None:
    """Raise AssertionError unless ``h`` is a valid redundant cut of ``p``."""
    assert in_row_space(H, h), "row is not a combination of the rows of H"
    assert cutting_condition(p, h), "row does not satisfy the cutting condition"
    assert in_fundamental_polytope(H, p), "target is not in the fundamental polytope"
    assert not in_fundamental_polytope(stack(H, h), p), "target survives the cut"


def _dfrac(H: BitMatrix, cfg: GreedyConfig) -> FracDistReport:
    return fractional_distance(H, cfg.method, cfg.engine, cfg.prune, cfg.jobs, cfg.explore)


def greedy_improve(H: BitMatrix, cfg: GreedyConfig | None = None) -> GreedyResult:
    """Append cutting redundant rows until no vertex of minimum weight can be cut.

    Vertices are tried in lexicographic order; for each the echelon search is
    used, and only if it fails for every vertex is the exhaustive search over
    H^Q tried (when |Q| is within the configured limit).
    """
    cfg = cfg or GreedyConfig()
    res = GreedyResult(H)
    if cfg.max_rows == 0:
        res.stop_reason = "row budget exhausted"
        return res
    report = _dfrac(H, cfg)
    it = 0
    while True:
        if len(res.log) >= cfg.max_rows:
            res.stop_reason = "row budget exhausted"
            break
        if report.status != OK:
            res.stop_reason = "no fractional vertex"
            break
        if cfg.target_dfrac is not None and report.d_frac >= cfg.target_dfrac:
            res.stop_reason = "target reached"
            break
        gamma = sorted(report.gamma)
        accepted = None
        for how in ("echelon", "exhaustive"):
            for p in gamma:
                if how == "echelon":
                    h = search_redundant_row(H, p)
                else:
                    if len(support_index_set(H, p)) > cfg.exhaustive_fallback_limit:
                        continue
                    h = exhaustive_cut_search(H, p, cfg.exhaustive_fallback_limit)
                if h is None:
                    continue
                H2 = stack(H, h)
                after = _dfrac(H2, cfg)
                if cfg.only_improving and after.status == OK and after.d_frac < report.d_frac:
                    log.info("discarding row %s: d_frac would drop to %s", h, after.d_frac)
                    continue
                accepted = (p, h, H2, after, how)
                break
            if accepted:
                break
        if accepted is None:
            res.stop_reason = "no cutting row found"
            break
        p, h, H2, after, how = accepted
        if cfg.check_cuts:
            check_cut(H, p, h)
        it += 1
        rec = CutRecord(it, tuple(p), h, report.d_frac, after.d_frac, len(gamma), how)
        log.info("iteration %d: row %s (%s) d_frac %s -> %s", it, h, how, report.d_frac, after.d_frac)
        res.log.append(rec)
        H, report = H2, after
    res.final = H
    res.report = report
    return res
