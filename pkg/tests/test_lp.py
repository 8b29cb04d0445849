from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fraccut.lp import INFEASIBLE, OPTIMAL, UNBOUNDED, LpProblem, solve_min
from fraccut.polytope import LinConstraint

from oracles import brute_force_lp


def test_single_variable():
    prob = LpProblem.box([1], [LinConstraint((-1,), -1)])
    out = solve_min(prob)
    assert out.status == OPTIMAL and out.value == 1 and out.point == (F(1),)


def test_fractional_optimum():
    # min x+y  s.t.  2x + y >= 1, x + 2y >= 1, box [0,1]
    cons = [LinConstraint((-2, -1), -1), LinConstraint((-1, -2), -1)]
    out = solve_min(LpProblem.box([1, 1], cons))
    assert out.value == F(2, 3)
    assert out.point == (F(1, 3), F(1, 3))


def test_equality_row():
    out = solve_min(LpProblem.box([1, -1], [LinConstraint((1, 1), 1, "=")]))
    assert out.status == OPTIMAL and out.value == -1


def test_infeasible():
    out = solve_min(LpProblem.box([1, 1], [LinConstraint((1, 1), 3, "=")]))
    assert out.status == INFEASIBLE


def test_unbounded():
    prob = LpProblem(2, (-1, 0), (LinConstraint((0, 1), 1),), (0, 0), (None, None))
    assert solve_min(prob).status == UNBOUNDED


def test_validation():
    with pytest.raises(ValueError):
        LpProblem(2, (1,), (), (0, 0), (1, 1))
    with pytest.raises(ValueError):
        LpProblem(1, (1,), (), (2,), (1,))


def _random_system(rng, n, m):
    cons = []
    for _ in range(m):
        a = tuple(int(x) for x in rng.integers(-3, 4, n))
        rel = "=" if rng.random() < 0.15 else "<="
        cons.append(LinConstraint(a, int(rng.integers(-2, 5)), rel))
    c = [int(x) for x in rng.integers(-4, 5, n)]
    return c, cons


@settings(max_examples=60)
@given(st.integers(0, 2**32 - 1), st.integers(1, 4), st.integers(0, 4))
def test_matches_vertex_enumeration(seed, n, m):
    rng = np.random.default_rng(seed)
    c, cons = _random_system(rng, n, m)
    out = solve_min(LpProblem.box(c, cons, 0, 2))
    ref = brute_force_lp(c, cons, n, 0, 2)
    if ref is None:
        assert out.status == INFEASIBLE
    else:
        assert out.status == OPTIMAL and out.value == ref
        assert all(k.satisfied(out.point) for k in cons)
        assert all(0 <= x <= 2 for x in out.point)
