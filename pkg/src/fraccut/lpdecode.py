"""LP decoding over the fundamental polytope for the binary symmetric channel.

The BSC cost is +1 where the received bit is 0 and -1 where it is 1. With
such costs the LP optimum is often not unique, so a decode also reports
whether its output is the only optimal point. A block is decoded correctly
only if the output is the transmitted codeword *and* it is the unique
optimum; this keeps error counts independent of how a solver breaks ties.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .gf2 import BitMatrix, BitVector
from .highs import HighsLp, exact_vertex
from .lp import OPTIMAL, LpProblem, solve_min
from .polytope import PARITY, LinConstraint, fundamental_polytope, in_fundamental_polytope

log = logging.getLogger(__name__)

CODEWORD, FRACTIONAL = "codeword", "fractional"
UNIQUE_TOL = 1e-7


@dataclass(frozen=True)
class DecodeResult:
    status: str
    output: tuple[Fraction, ...]
    objective: Fraction
    unique: bool | None = None  # only determined for codeword outputs

    @property
    def is_codeword(self) -> bool:
        return self.status == CODEWORD

    def word(self) -> BitVector | None:
        if not self.is_codeword:
            return None
        return BitVector.from_bits(int(x) for x in self.output)

    def succeeded(self, sent: BitVector) -> bool:
        return self.is_codeword and bool(self.unique) and self.word() == sent


def bsc_cost(received: BitVector) -> tuple[int, ...]:
    return tuple(-1 if b else 1 for b in received)


def guaranteed_errors(d_frac) -> int:
    """Number of bit flips the LP decoder always corrects: ceil(d_frac/2 - 1)."""
    d = Fraction(str(d_frac)) if isinstance(d_frac, float) else Fraction(d_frac)
    if d <= 0:
        raise ValueError("fractional distance must be positive")
    return math.ceil(d / 2 - 1)


def _objective(cost, point) -> Fraction:
    return sum((c * x for c, x in zip(cost, point)), Fraction(0))


def _spread(word: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    # l1 distance to a binary word as (coeffs, constant): sum_{w=0} x + sum_{w=1} (1 - x)
    return tuple(-1 if b else 1 for b in word), sum(word)


class LpDecoder:
    """Decoder for repeated use with one parity-check matrix.

    ``engine="exact"`` builds every odd-subset inequality of P(H) and runs
    the rational simplex on each call. ``engine="float"`` never builds P(H):
    it solves over the box plus a pool of cuts with HiGHS, adds the most
    violated odd-subset inequality of every row until none is violated (by
    more than 1e-9), and keeps the pool for later calls. Codeword outputs are
    exact by construction; fractional outputs are rebuilt exactly from their
    tight cuts when possible. Uniqueness is judged with a 1e-7 tolerance.
    """

    def __init__(self, H: BitMatrix, engine: str = "exact"):
        if engine not in ("exact", "float"):
            raise ValueError(f"unknown engine {engine!r}")
        self.H = H
        self.engine = engine
        self._highs = None
        if engine == "exact":
            self.constraints = tuple(c for cid, c in fundamental_polytope(H).constraints if cid.kind == PARITY)
        else:
            self.constraints = []  # the cut pool, in insertion order
            self._highs = HighsLp(H.n, (), [0.0] * H.n)
            self._supports = [np.array(r.support()) for r in H.rows]
            self._pool: set[LinConstraint] = set()

    def _problem(self, cost, extra=()) -> LpProblem:
        n = self.H.n
        return LpProblem(n, cost, self.constraints + tuple(extra), (0,) * n, (1,) * n)

    def _unique_exact(self, cost, word, value) -> bool:
        coeffs, const = _spread(word)
        out = solve_min(self._problem([-c for c in coeffs], [LinConstraint(tuple(cost), value)]))
        return const - out.value == 0

    def _unique_float(self, cost, word, value) -> bool:
        coeffs, const = _spread(word)
        row = LinConstraint(tuple(cost), value)
        while True:
            st, x, val = self._highs.solve_with_row(row, [-c for c in coeffs])
            if st != OPTIMAL:
                return False
            if not self._separate(x):
                return const - val <= UNIQUE_TOL

    def _separate(self, x) -> bool:
        """Add the most violated odd-subset cut of every row; False if none is violated."""
        cuts = []
        for supp in self._supports:
            xs = x[supp]
            inS = xs > 0.5
            if inS.sum() % 2 == 0:
                k = int(np.argmin(np.abs(xs - 0.5)))
                inS[k] = not inS[k]
            viol = xs[inS].sum() - xs[~inS].sum() - (inS.sum() - 1)
            if viol > 1e-9:
                coeffs = [0] * self.H.n
                for j, a in zip(supp, inS):
                    coeffs[j] = 1 if a else -1
                c = LinConstraint(tuple(coeffs), int(inS.sum()) - 1)
                if c not in self._pool:
                    cuts.append(c)
        if not cuts:
            return False
        self._pool.update(cuts)
        self.constraints.extend(cuts)
        self._highs.add_rows(cuts)
        return True

    def decode(self, received: BitVector) -> DecodeResult:
        if received.n != self.H.n:
            raise ValueError(f"received word has length {received.n}, code length is {self.H.n}")
        cost = bsc_cost(received)
        point = self._solve(cost)
        value = _objective(cost, point)
        if not all(x in (0, 1) for x in point):
            return DecodeResult(FRACTIONAL, point, value)
        word = tuple(int(x) for x in point)
        if self.engine == "exact":
            unique = self._unique_exact(cost, word, value)
        else:
            unique = self._unique_float(cost, word, value)
        return DecodeResult(CODEWORD, point, value, unique)

    def _solve(self, cost) -> tuple[Fraction, ...]:
        if self.engine == "exact":
            out = solve_min(self._problem(cost))
            if out.status != OPTIMAL:
                raise RuntimeError(f"LP decoding failed: {out.status}")
            return out.point
        self._highs.set_objective(cost)
        while True:
            st, x, _ = self._highs.solve()
            if st != OPTIMAL:
                raise RuntimeError(f"LP decoding failed: {st}")
            if not self._separate(x):
                break
        r = np.rint(x)
        if np.all(np.abs(x - r) <= UNIQUE_TOL):
            word = BitVector.from_bits(int(v) for v in r)
            if self.H.syndrome(word).is_zero():
                return tuple(Fraction(int(v)) for v in r)
        point = self._rebuild(x)
        if point is None:
            # only the failure matters downstream; keep a rational copy of the float optimum
            log.debug("exact rebuild of fractional output failed")
            return tuple(Fraction(float(v)).limit_denominator(1 << 20) for v in x)
        return point

    def _rebuild(self, x):
        n = self.H.n
        near = [c for c in self.constraints if abs(c.rhs - sum(a * x[j] for j, a in enumerate(c.coeffs) if a)) <= UNIQUE_TOL]
        point = exact_vertex(near, (0,) * n, (1,) * n, list(x))
        if point is None or not in_fundamental_polytope(self.H, point):
            return None
        return point


def lp_decode(H: BitMatrix, received: BitVector, engine: str = "exact") -> DecodeResult:
    return LpDecoder(H, engine).decode(received)
