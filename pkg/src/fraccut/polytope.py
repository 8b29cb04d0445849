"""Constraint systems for the single parity polytope, the fundamental
polytope and the fundamental cone.

Every constraint is kept in the normalized form ``sum(a_j f_j) <= b`` with
``a_j`` in {-1, 0, +1}; for an odd subset ``S`` of a row support ``T`` this is

    sum_{j in S} f_j - sum_{j in T \\ S} f_j <= |S| - 1.

A constraint is *active* when its hyperplane passes through the origin,
which in this form means ``b == 0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .gf2 import BitMatrix, BitVector

PARITY, BOX_LOWER, BOX_UPPER = "parity", "box_lower", "box_upper"
_GROUP = {PARITY: 0, BOX_LOWER: 1, BOX_UPPER: 2}


@dataclass(frozen=True)
class ConstraintId:
    """Identifies one constraint: an odd subset of a row, or a box side.

    ``index`` is the row for parity constraints and the variable for box
    constraints; ``subset`` is the column bitmask of S (parity only).
    """

    kind: str
    index: int
    subset: int = 0

    @property
    def key(self) -> tuple[int, int, int]:
        # global enumeration order: rows, then ascending subset mask; box_lower; box_upper
        return (_GROUP[self.kind], self.index, self.subset)

    @property
    def size(self) -> int:
        return self.subset.bit_count()

    def __lt__(self, other: "ConstraintId") -> bool:
        return self.key < other.key

    def __str__(self) -> str:
        if self.kind == PARITY:
            s = ",".join(str(j + 1) for j in BitVector(self.subset.bit_length(), self.subset).support())
            return f"parity(row {self.index + 1}, S={{{s}}})"
        return f"{self.kind}({self.index + 1})"


@dataclass(frozen=True)
class LinConstraint:
    coeffs: tuple[int, ...]
    rhs: int
    relation: str = "<="

    def __post_init__(self):
        if self.relation not in ("<=", "="):
            raise ValueError(f"bad relation {self.relation!r}")

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def lhs(self, p: Sequence) -> Fraction:
        return sum((Fraction(a) * Fraction(x) for a, x in zip(self.coeffs, p) if a), Fraction(0))

    def satisfied(self, p: Sequence) -> bool:
        v = self.lhs(p)
        return v == self.rhs if self.relation == "=" else v <= self.rhs

    def tight(self, p: Sequence) -> bool:
        return self.lhs(p) == self.rhs

    def as_equality(self) -> "LinConstraint":
        return LinConstraint(self.coeffs, self.rhs, "=")

    @property
    def is_active(self) -> bool:
        return self.rhs == 0


@dataclass(frozen=True)
class ConstraintSystem:
    n: int
    constraints: tuple[tuple[ConstraintId, LinConstraint], ...]
    active: frozenset[int] = field(init=False)
    inactive: frozenset[int] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "constraints", tuple(self.constraints))
        for cid, c in self.constraints:
            if c.n != self.n:
                raise ValueError(f"{cid} has {c.n} coefficients, expected {self.n}")
        act = frozenset(k for k, (_, c) in enumerate(self.constraints) if c.is_active)
        object.__setattr__(self, "active", act)
        object.__setattr__(self, "inactive", frozenset(range(len(self.constraints))) - act)

    def __len__(self) -> int:
        return len(self.constraints)

    def __getitem__(self, k: int) -> tuple[ConstraintId, LinConstraint]:
        return self.constraints[k]

    def ids(self) -> list[ConstraintId]:
        return [cid for cid, _ in self.constraints]

    def index_of(self, cid: ConstraintId) -> int:
        for k, (c, _) in enumerate(self.constraints):
            if c == cid:
                return k
        raise KeyError(cid)

    def lin(self) -> list[LinConstraint]:
        return [c for _, c in self.constraints]


def _parity_row(n: int, support: int, subset: int) -> LinConstraint:
    coeffs = [0] * n
    w, j = support, 0
    while w:
        if w & 1:
            coeffs[j] = 1 if (subset >> j) & 1 else -1
        w >>= 1
        j += 1
    return LinConstraint(tuple(coeffs), subset.bit_count() - 1)


def odd_subsets(support: Sequence[int], sizes: Iterable[int] | None = None) -> Iterator[int]:
    """Column bitmasks of odd subsets of ``support``.

    Without ``sizes`` the subsets come in ascending mask order; with
    ``sizes`` they are grouped by size (ascending mask within a size).
    """
    w = len(support)
    if sizes is None:
        for local in range(1, 1 << w):
            if local.bit_count() & 1:
                yield sum(1 << support[b] for b in range(w) if (local >> b) & 1)
        return
    for s in sizes:
        if s % 2 == 0 or s > w:
            continue
        masks = sorted(sum(1 << j for j in c) for c in combinations(support, s))
        yield from masks


def parity_constraints(t: BitVector, row: int = 0) -> list[tuple[ConstraintId, LinConstraint]]:
    """Odd-subset inequalities of the single parity polytope of ``t``."""
    supp = t.support()
    return [(ConstraintId(PARITY, row, s), _parity_row(t.n, t.word, s)) for s in odd_subsets(supp)]


def parity_constraint(t: BitVector, subset: int, row: int = 0) -> tuple[ConstraintId, LinConstraint]:
    if subset & ~t.word or not subset.bit_count() & 1:
        raise ValueError("subset must be an odd subset of the row support")
    return ConstraintId(PARITY, row, subset), _parity_row(t.n, t.word, subset)


def box_constraints(n: int, lower: bool = True, upper: bool = True) -> list[tuple[ConstraintId, LinConstraint]]:
    out = []
    if lower:
        for i in range(n):
            c = [0] * n
            c[i] = -1
            out.append((ConstraintId(BOX_LOWER, i), LinConstraint(tuple(c), 0)))
    if upper:
        for i in range(n):
            c = [0] * n
            c[i] = 1
            out.append((ConstraintId(BOX_UPPER, i), LinConstraint(tuple(c), 1)))
    return out


def _dedupe(items: Iterable[tuple[ConstraintId, LinConstraint]]) -> list[tuple[ConstraintId, LinConstraint]]:
    seen, out = set(), []
    for cid, c in items:
        if c in seen:
            continue
        seen.add(c)
        out.append((cid, c))
    return out


def fundamental_polytope(H: BitMatrix) -> ConstraintSystem:
    items: list[tuple[ConstraintId, LinConstraint]] = []
    for i, row in enumerate(H.rows):
        items += parity_constraints(row, i)
    items += box_constraints(H.n)
    return ConstraintSystem(H.n, tuple(_dedupe(items)))


def cone_parity_constraints(H: BitMatrix) -> list[tuple[ConstraintId, LinConstraint]]:
    """The |S| = 1 constraints f_j - sum_{l in T, l != j} f_l <= 0 of every row."""
    items = []
    for i, row in enumerate(H.rows):
        for j in row.support():
            items.append((ConstraintId(PARITY, i, 1 << j), _parity_row(H.n, row.word, 1 << j)))
    return _dedupe(items)


def fundamental_cone(H: BitMatrix) -> ConstraintSystem:
    """Active constraints of the fundamental polytope, intersected with the unit box."""
    return ConstraintSystem(H.n, tuple(_dedupe(cone_parity_constraints(H) + box_constraints(H.n))))


def constraint_count(H: BitMatrix) -> int:
    return sum(1 << (w - 1) for w in H.row_weights() if w) + 2 * H.n


def contains(sys: ConstraintSystem, p: Sequence) -> bool:
    if len(p) != sys.n:
        raise ValueError(f"point has length {len(p)}, system has {sys.n} variables")
    p = [Fraction(x) for x in p]
    return all(c.satisfied(p) for _, c in sys.constraints)


def most_violated_subset(t: BitVector, p: Sequence[Fraction]) -> tuple[int, Fraction]:
    """Odd subset S of Supp(t) maximizing the violation of its inequality at ``p``.

    Returns ``(mask, excess)`` where ``excess = lhs - rhs``; the point lies in
    the single parity polytope (given box feasibility) iff ``excess <= 0``.
    Returns ``(0, -1)`` for a zero row.
    """
    supp = t.support()
    if not supp:
        return 0, Fraction(-1)
    chosen = [j for j in supp if 2 * p[j] > 1]
    if len(chosen) % 2 == 0:
        # toggle the coordinate closest to 1/2
        k = min(supp, key=lambda j: (abs(2 * p[j] - 1), j))
        chosen = [j for j in chosen if j != k] if k in chosen else sorted(chosen + [k])
    mask = sum(1 << j for j in chosen)
    excess = sum((p[j] for j in chosen), Fraction(0)) - sum((p[j] for j in supp if not (mask >> j) & 1), Fraction(0))
    return mask, excess - (len(chosen) - 1)


def in_single_parity_polytope(t: BitVector, p: Sequence) -> bool:
    p = [Fraction(x) for x in p]
    if any(x < 0 or x > 1 for x in p):
        return False
    return most_violated_subset(t, p)[1] <= 0


def in_fundamental_polytope(H: BitMatrix, p: Sequence) -> bool:
    """Exact membership in P(H) without materializing the exponential system."""
    if len(p) != H.n:
        raise ValueError(f"point has length {len(p)}, matrix has {H.n} columns")
    p = [Fraction(x) for x in p]
    if any(x < 0 or x > 1 for x in p):
        return False
    return all(most_violated_subset(r, p)[1] <= 0 for r in H.rows)


def in_fundamental_cone(H: BitMatrix, p: Sequence) -> bool:
    if len(p) != H.n:
        raise ValueError(f"point has length {len(p)}, matrix has {H.n} columns")
    p = [Fraction(x) for x in p]
    if any(x < 0 or x > 1 for x in p):
        return False
    for r in H.rows:
        supp = r.support()
        total = sum((p[j] for j in supp), Fraction(0))
        if any(2 * p[j] > total for j in supp):
            return False
    return True


def exact_rank(rows: Sequence[Sequence]) -> int:
    """Rank over the rationals."""
    mat = [[Fraction(x) for x in r] for r in rows]
    if not mat:
        return 0
    ncol = len(mat[0])
    rk = 0
    for c in range(ncol):
        piv = next((i for i in range(rk, len(mat)) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[rk], mat[piv] = mat[piv], mat[rk]
        pr = mat[rk]
        for i in range(rk + 1, len(mat)):
            f = mat[i][c]
            if f:
                f /= pr[c]
                mat[i] = [a - f * b for a, b in zip(mat[i], pr)]
        rk += 1
        if rk == len(mat):
            break
    return rk


def is_vertex(constraints: Iterable[LinConstraint], p: Sequence) -> bool:
    """True iff ``p`` is feasible and its tight constraints have full rank."""
    p = [Fraction(x) for x in p]
    tight = []
    for c in constraints:
        if not c.satisfied(p):
            return False
        if c.tight(p):
            tight.append(c.coeffs)
    return exact_rank(tight) == len(p)
