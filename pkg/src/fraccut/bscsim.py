"""Seeded Monte Carlo estimate of LP-decoding block error rate on the BSC.

The all-zero codeword is always sent, which is enough because the
fundamental polytope looks the same from every codeword.

Random streams: trials are cut into consecutive blocks of ``BLOCK`` trials;
block ``b`` of a run with seed ``s`` draws from
``numpy.random.Generator(PCG64(SeedSequence([s, b])))``, one row of
``n`` uniforms per trial, and a bit flips when its uniform is below the
crossover probability. The tally is therefore the same whether blocks run in
one process or are spread over workers.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.stats import binomtest

from .gf2 import BitMatrix, BitVector
from .lpdecode import LpDecoder

BLOCK = 1000


@dataclass(frozen=True)
class SimPoint:
    crossover: float
    trials: int
    block_errors: int
    seed: int

    @property
    def bler(self) -> float:
        return self.block_errors / self.trials

    @property
    def std_error(self) -> float:
        p = self.bler
        return (p * (1 - p) / self.trials) ** 0.5


def block_rng(seed: int, block: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, block])))


def error_patterns(n: int, crossover: float, trials: int, seed: int, block: int) -> np.ndarray:
    """Flip masks (as packed integers) for one block of trials."""
    size = min(BLOCK, trials - block * BLOCK)
    flips = block_rng(seed, block).random((size, n)) < crossover
    weights = 1 << np.arange(n, dtype=object)
    return flips.astype(object) @ weights


def _check(crossover: float, trials: int) -> None:
    if not 0 <= crossover <= 0.5:
        raise ValueError(f"crossover must lie in [0, 1/2], got {crossover}")
    if trials < 1:
        raise ValueError("trials must be >= 1")


class _Tally:
    def __init__(self, H: BitMatrix, engine: str):
        self.H = H
        self.decoder = LpDecoder(H, engine)
        self.zero = BitVector.zeros(H.n)
        self.cache: dict[int, bool] = {0: True}  # all-zero word: cost > 0 everywhere else

    def ok(self, pattern: int) -> bool:
        hit = self.cache.get(pattern)
        if hit is None:
            res = self.decoder.decode(BitVector(self.H.n, pattern))
            hit = self.cache[pattern] = res.succeeded(self.zero)
        return hit

    def block(self, crossover: float, trials: int, seed: int, b: int) -> tuple[int, list[bool]]:
        outcome = [self.ok(int(w)) for w in error_patterns(self.H.n, crossover, trials, seed, b)]
        return outcome.count(False), outcome


_worker: dict = {}


def _run_block(args) -> int:
    H, engine, crossover, trials, seed, b = args
    key = (H, engine)
    if key not in _worker:
        _worker.clear()
        _worker[key] = _Tally(H, engine)
    return _worker[key].block(crossover, trials, seed, b)[0]


def simulate_bler(H: BitMatrix, crossover: float, trials: int, seed: int,
                  engine: str = "float", jobs: int = 1) -> SimPoint:
    _check(crossover, trials)
    nblocks = -(-trials // BLOCK)
    if jobs > 1 and nblocks > 1:
        with ProcessPoolExecutor(jobs) as pool:
            counts = pool.map(_run_block, [(H, engine, crossover, trials, seed, b) for b in range(nblocks)])
            errors = sum(counts)
    else:
        tally = _Tally(H, engine)
        errors = sum(tally.block(crossover, trials, seed, b)[0] for b in range(nblocks))
    return SimPoint(float(crossover), trials, errors, seed)


def sweep(H: BitMatrix, crossovers: Sequence[float], trials: int, seed: int,
          engine: str = "float", jobs: int = 1) -> list[SimPoint]:
    """One point per crossover; point ``i`` uses seed ``seed + i``."""
    return [simulate_bler(H, p, trials, seed + i, engine, jobs) for i, p in enumerate(crossovers)]


@dataclass(frozen=True)
class PairedComparison:
    crossover: float
    trials: int
    seed: int
    errors_a: int
    errors_b: int
    only_a_fails: int
    only_b_fails: int
    p_value: float  # one-sided: matrix b fails less often than matrix a


def paired_comparison(Ha: BitMatrix, Hb: BitMatrix, crossover: float, trials: int, seed: int,
                      engine: str = "float") -> PairedComparison:
    """Decode the same error patterns with two matrices and test whether b beats a.

    The test is an exact one-sided binomial (sign) test on the discordant
    trials, where exactly one of the two decoders fails.
    """
    if Ha.n != Hb.n:
        raise ValueError("matrices must have the same code length")
    _check(crossover, trials)
    ta, tb = _Tally(Ha, engine), _Tally(Hb, engine)
    ea = eb = only_a = only_b = 0
    for b in range(-(-trials // BLOCK)):
        for w in error_patterns(Ha.n, crossover, trials, seed, b):
            oa, ob = ta.ok(int(w)), tb.ok(int(w))
            ea += not oa
            eb += not ob
            only_a += ob and not oa
            only_b += oa and not ob
    disc = only_a + only_b
    p = binomtest(only_a, disc, 0.5, alternative="greater").pvalue if disc else 1.0
    return PairedComparison(float(crossover), trials, seed, ea, eb, only_a, only_b, float(p))
