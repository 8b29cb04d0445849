from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fraccut.fracdist import (CONE, FULL, OK, VALUE, ZERO_SKIPPED, NoFractionalVertex, facet_min_weight,
                              fractional_distance, gamma_set)
from fraccut.gf2 import BitMatrix, minimum_distance
from fraccut.polytope import BOX_UPPER, PARITY, ConstraintId, in_fundamental_polytope, is_vertex, fundamental_polytope

from conftest import random_matrix
from oracles import min_weight_vertices

LISTED_VERTICES = {
    (0, F(2, 3), F(2, 3), F(2, 3), 0, 0, 0),
    (F(2, 3), 0, F(2, 3), F(2, 3), 0, 0, 0),
    (F(2, 3), F(2, 3), 0, F(2, 3), 0, 0, 0),
}

COMBOS = [(m, e, pr) for m in (FULL, CONE) for e in ("exact", "float") for pr in (False, True)]


@pytest.mark.parametrize("method,engine,prune", COMBOS)
def test_hamming_value(hamming, method, engine, prune):
    rep = fractional_distance(hamming, method, engine, prune)
    assert rep.status == OK
    assert rep.d_frac == 2


@pytest.mark.parametrize("method,engine,prune", COMBOS)
def test_hamming_star_value(hamming_star, method, engine, prune):
    assert fractional_distance(hamming_star, method, engine, prune).d_frac == 3


def test_hamming_gamma_matches_vertex_enumeration(hamming):
    d, gamma = min_weight_vertices(hamming)
    assert d == 2
    assert set(gamma_set(hamming, method=FULL)) == gamma
    assert set(gamma_set(hamming, method=CONE)) == gamma
    assert LISTED_VERTICES <= gamma
    assert len(gamma) == 6


def test_single_check():
    H = BitMatrix.from_rows([[1, 1, 1]])
    rep = fractional_distance(H, FULL)
    assert rep.d_frac == 2
    assert set(rep.gamma) == {(1, 1, 0), (1, 0, 1), (0, 1, 1)}


def test_gamma_points_are_vertices(hamming):
    lin = fundamental_polytope(hamming).lin()
    for p in gamma_set(hamming):
        assert is_vertex(lin, p)
        assert sum(p) == 2


@settings(max_examples=15)
@given(st.integers(0, 2**32 - 1))
def test_random_matrices_match_vertex_enumeration(seed):
    H = random_matrix(np.random.default_rng(seed), 3, 6, 4)
    d, gamma = min_weight_vertices(H)
    for method in (FULL, CONE):
        rep = fractional_distance(H, method)
        if d is None:
            assert rep.status != OK
        else:
            assert rep.d_frac == d
            # one optimum per facet LP, so gamma may miss tied vertices but never adds wrong ones
            assert rep.gamma and set(rep.gamma) <= gamma


@settings(max_examples=15)
@given(st.integers(0, 2**32 - 1))
def test_full_equals_cone_and_bounds_dmin(seed):
    H = random_matrix(np.random.default_rng(seed), 4, 8, 4)
    a = fractional_distance(H, FULL)
    b = fractional_distance(H, CONE)
    assert a.status == b.status
    if a.status == OK:
        assert a.d_frac == b.d_frac
        assert all(in_fundamental_polytope(H, g) and sum(g) == a.d_frac for g in a.gamma + b.gamma)
        assert a.d_frac <= minimum_distance(H)
        assert fractional_distance(H, CONE, "float", True).d_frac == a.d_frac


def test_per_facet_report(hamming):
    rep = fractional_distance(hamming, FULL)
    zero = [r for r in rep.per_facet if r.status == ZERO_SKIPPED]
    assert zero and all(r.cid.kind != BOX_UPPER for r in zero)
    assert all(r.value == 0 for r in zero)
    assert min(r.value for r in rep.per_facet if r.status == VALUE) == 2
    keys = [r.cid.key for r in rep.per_facet]
    assert keys == sorted(keys)


def test_facet_lp(hamming):
    upper = ConstraintId(BOX_UPPER, 0, 0)
    r = facet_min_weight(hamming, upper)
    assert r.value >= 1 and in_fundamental_polytope(hamming, r.point)
    active = ConstraintId(PARITY, 0, 1)
    with pytest.raises(ValueError):
        facet_min_weight(hamming, active, relaxed=True)


def test_codeword_vertex_counts():
    rep = fractional_distance(BitMatrix.from_rows([[1, 1]]))  # P(H) is the segment [00, 11]
    assert rep.d_frac == 2 and rep.gamma == ((1, 1),)


def test_no_fractional_vertex():
    rep = fractional_distance(BitMatrix.from_rows([[1]]))  # P(H) = {0}
    assert rep.status != OK
    with pytest.raises(NoFractionalVertex):
        rep.value


def test_prune_keeps_value(golay):
    a = fractional_distance(golay, CONE, "float", prune=True)
    b = fractional_distance(golay, CONE, "float", prune=False)
    assert a.d_frac == b.d_frac
    assert set(a.gamma) == set(b.gamma)
    assert a.lp_count <= b.lp_count
