import pytest

from fraccut.bscsim import BLOCK, error_patterns, paired_comparison, simulate_bler, sweep
from fraccut.codecio import read_sim_csv, write_sim_csv


def test_zero_crossover_has_no_errors(hamming_star):
    pt = simulate_bler(hamming_star, 0.0, 500, seed=1)
    assert pt.block_errors == 0 and pt.bler == 0


def test_deterministic(hamming):
    a = simulate_bler(hamming, 0.05, 1500, seed=7)
    b = simulate_bler(hamming, 0.05, 1500, seed=7)
    assert a == b
    c = simulate_bler(hamming, 0.05, 1500, seed=8)
    assert c.seed == 8


def test_jobs_do_not_change_counts(hamming):
    a = simulate_bler(hamming, 0.1, 2 * BLOCK + 17, seed=3, jobs=1)
    b = simulate_bler(hamming, 0.1, 2 * BLOCK + 17, seed=3, jobs=2)
    assert a.block_errors == b.block_errors


def test_pattern_stream_layout():
    pats = error_patterns(7, 0.5, BLOCK + 5, seed=0, block=1)
    assert len(pats) == 5
    assert all(0 <= int(p) < 1 << 7 for p in pats)


def test_redundant_rows_do_not_hurt(hamming, hamming_star):
    cmp = paired_comparison(hamming, hamming_star, 0.05, 2000, seed=11)
    assert cmp.only_b_fails == 0  # a superset of constraints can only shrink the polytope
    assert cmp.errors_b <= cmp.errors_a


def test_validation(hamming):
    with pytest.raises(ValueError):
        simulate_bler(hamming, 0.6, 10, 0)
    with pytest.raises(ValueError):
        simulate_bler(hamming, 0.1, 0, 0)


def test_sweep_and_csv(hamming_star):
    pts = sweep(hamming_star, [0.01, 0.05], 300, seed=5)
    assert [p.seed for p in pts] == [5, 6]
    rows = read_sim_csv(write_sim_csv(pts))
    assert [r["block_errors"] for r in rows] == [p.block_errors for p in pts]
    assert write_sim_csv(pts).splitlines()[0] == "crossover,trials,block_errors,bler,seed"
