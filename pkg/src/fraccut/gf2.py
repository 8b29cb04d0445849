"""Binary vectors and matrices over GF(2).

Rows are packed into Python integers (bit ``j`` holds column ``j``), so row
addition is a single XOR. Column indices are 0-based throughout the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np


@dataclass(frozen=True)
class BitVector:
    n: int
    word: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative length")
        if self.word < 0 or self.word >> self.n:
            raise ValueError(f"word has bits beyond length {self.n}")

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BitVector":
        bits = list(bits)
        word = 0
        for j, b in enumerate(bits):
            if b not in (0, 1, True, False):
                raise ValueError(f"entry {j} is not binary: {b!r}")
            if b:
                word |= 1 << j
        return cls(len(bits), word)

    @classmethod
    def from_support(cls, n: int, support: Iterable[int]) -> "BitVector":
        word = 0
        for j in support:
            if not 0 <= j < n:
                raise ValueError(f"index {j} out of range for length {n}")
            word |= 1 << j
        return cls(n, word)

    @classmethod
    def from_string(cls, s: str) -> "BitVector":
        s = s.strip()
        if not s or set(s) - {"0", "1"}:
            raise ValueError(f"not a bit string: {s!r}")
        return cls.from_bits(int(c) for c in s)

    @classmethod
    def zeros(cls, n: int) -> "BitVector":
        return cls(n, 0)

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, j: int) -> int:
        if not -self.n <= j < self.n:
            raise IndexError(j)
        return (self.word >> (j % self.n)) & 1

    def __iter__(self) -> Iterator[int]:
        w = self.word
        for _ in range(self.n):
            yield w & 1
            w >>= 1

    def __xor__(self, other: "BitVector") -> "BitVector":
        _check_len(self, other)
        return BitVector(self.n, self.word ^ other.word)

    __add__ = __xor__

    def __and__(self, other: "BitVector") -> "BitVector":
        _check_len(self, other)
        return BitVector(self.n, self.word & other.word)

    def dot(self, other: "BitVector") -> int:
        _check_len(self, other)
        return (self.word & other.word).bit_count() & 1

    @property
    def weight(self) -> int:
        return self.word.bit_count()

    def support(self) -> tuple[int, ...]:
        w, out, j = self.word, [], 0
        while w:
            if w & 1:
                out.append(j)
            w >>= 1
            j += 1
        return tuple(out)

    def is_zero(self) -> bool:
        return self.word == 0

    def bits(self) -> tuple[int, ...]:
        return tuple(self)

    def __str__(self) -> str:
        return "".join(map(str, self))


def _check_len(a: BitVector, b: BitVector) -> None:
    if a.n != b.n:
        raise ValueError(f"length mismatch: {a.n} vs {b.n}")


@dataclass(frozen=True)
class BitMatrix:
    n: int
    rows: tuple[BitVector, ...]

    def __post_init__(self):
        if not self.rows:
            raise ValueError("a parity-check matrix needs at least one row")
        object.__setattr__(self, "rows", tuple(self.rows))
        for i, r in enumerate(self.rows):
            if r.n != self.n:
                raise ValueError(f"row {i} has length {r.n}, expected {self.n}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "BitMatrix":
        vecs = [BitVector.from_bits(r) for r in rows]
        if not vecs:
            raise ValueError("a parity-check matrix needs at least one row")
        return cls(vecs[0].n, tuple(vecs))

    @classmethod
    def from_vectors(cls, rows: Sequence[BitVector]) -> "BitMatrix":
        rows = tuple(rows)
        if not rows:
            raise ValueError("a parity-check matrix needs at least one row")
        return cls(rows[0].n, rows)

    @classmethod
    def from_numpy(cls, a) -> "BitMatrix":
        a = np.asarray(a)
        if a.ndim != 2:
            raise ValueError("expected a 2-D array")
        return cls.from_rows(a.astype(int).tolist())

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.m, self.n

    def __getitem__(self, i: int) -> BitVector:
        return self.rows[i]

    def __iter__(self) -> Iterator[BitVector]:
        return iter(self.rows)

    def __len__(self) -> int:
        return self.m

    def to_numpy(self) -> np.ndarray:
        return np.array([r.bits() for r in self.rows], dtype=np.uint8)

    def row_weights(self) -> list[int]:
        return [r.weight for r in self.rows]

    def column(self, j: int) -> BitVector:
        return BitVector(self.m, sum(((r.word >> j) & 1) << i for i, r in enumerate(self.rows)))

    def submatrix(self, row_ids: Sequence[int]) -> "BitMatrix":
        return BitMatrix(self.n, tuple(self.rows[i] for i in row_ids))

    def stack(self, other: "BitMatrix | BitVector") -> "BitMatrix":
        extra = other.rows if isinstance(other, BitMatrix) else (other,)
        return BitMatrix(self.n, self.rows + tuple(extra))

    def syndrome(self, x: BitVector) -> BitVector:
        return BitVector(self.m, sum(r.dot(x) << i for i, r in enumerate(self.rows)))

    def combine(self, coeffs: Iterable[int]) -> BitVector:
        """Sum of the rows selected by a 0/1 coefficient sequence."""
        w = 0
        for a, r in zip(coeffs, self.rows):
            if a:
                w ^= r.word
        return BitVector(self.n, w)

    def __str__(self) -> str:
        return "\n".join(str(r) for r in self.rows)


@dataclass(frozen=True)
class RowOp:
    """One elementary row operation: ``swap`` rows a, b or ``add`` row b into row a."""

    kind: str
    a: int
    b: int


@dataclass(frozen=True)
class Echelon:
    echelon: BitMatrix
    rank: int
    ops: tuple[RowOp, ...]
    pivots: tuple[int, ...]  # pivot column of each nonzero row


def row_echelon(mat: BitMatrix, col_order: Sequence[int] | None = None) -> Echelon:
    """Forward Gaussian elimination with columns visited in ``col_order``.

    Pivot is the first row (in current order) with a one in the column.
    Only rows below the pivot are cleared.
    """
    n = mat.n
    order = list(range(n)) if col_order is None else list(col_order)
    if sorted(order) != list(range(n)):
        raise ValueError("col_order must be a permutation of the columns")
    rows = [r.word for r in mat.rows]
    m = len(rows)
    ops: list[RowOp] = []
    pivots: list[int] = []
    r = 0
    for c in order:
        if r == m:
            break
        bit = 1 << c
        piv = next((i for i in range(r, m) if rows[i] & bit), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            ops.append(RowOp("swap", r, piv))
        for i in range(r + 1, m):
            if rows[i] & bit:
                rows[i] ^= rows[r]
                ops.append(RowOp("add", i, r))
        pivots.append(c)
        r += 1
    ech = BitMatrix(n, tuple(BitVector(n, w) for w in rows))
    return Echelon(ech, r, tuple(ops), tuple(pivots))


def replay(mat: BitMatrix, ops: Iterable[RowOp]) -> BitMatrix:
    rows = [r.word for r in mat.rows]
    for op in ops:
        if op.kind == "swap":
            rows[op.a], rows[op.b] = rows[op.b], rows[op.a]
        elif op.kind == "add":
            rows[op.a] ^= rows[op.b]
        else:
            raise ValueError(f"unknown row operation {op.kind!r}")
    return BitMatrix(mat.n, tuple(BitVector(mat.n, w) for w in rows))


def _basis(words: Iterable[int]) -> dict[int, int]:
    # keyed by highest set bit; each stored word has a distinct leading bit
    basis: dict[int, int] = {}
    for w in words:
        while w:
            top = w.bit_length() - 1
            if top not in basis:
                basis[top] = w
                break
            w ^= basis[top]
    return basis


def rank(mat: BitMatrix) -> int:
    return len(_basis(r.word for r in mat.rows))


def in_row_space(mat: BitMatrix, v: BitVector) -> bool:
    if v.n != mat.n:
        raise ValueError(f"length mismatch: {v.n} vs {mat.n}")
    basis = _basis(r.word for r in mat.rows)
    w = v.word
    while w:
        top = w.bit_length() - 1
        if top not in basis:
            return False
        w ^= basis[top]
    return True


def null_space_basis(mat: BitMatrix) -> list[BitVector]:
    """Basis of ``{x : x H^T = 0}`` from the reduced row echelon form."""
    n = mat.n
    rows = [r.word for r in mat.rows]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        bit = 1 << c
        piv = next((i for i in range(r, len(rows)) if rows[i] & bit), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] & bit:
                rows[i] ^= rows[r]
        pivots.append(c)
        r += 1
    basis = []
    for f in (c for c in range(n) if c not in set(pivots)):
        w = 1 << f
        for i, p in enumerate(pivots):
            if (rows[i] >> f) & 1:
                w |= 1 << p
        basis.append(BitVector(n, w))
    return basis


class DimensionTooLarge(ValueError):
    pass


def enumerate_codewords(mat: BitMatrix, cap: int = 1 << 16) -> set[BitVector]:
    """All codewords of the code with parity-check matrix ``mat``.

    Raises DimensionTooLarge when the code has more than ``cap`` words.
    """
    basis = null_space_basis(mat)
    if 1 << len(basis) > cap:
        raise DimensionTooLarge(f"code has 2^{len(basis)} codewords, cap is {cap}")
    words = [0]
    for b in basis:
        words += [w ^ b.word for w in words]
    return {BitVector(mat.n, w) for w in words}


def minimum_distance(mat: BitMatrix, cap: int = 1 << 16) -> int:
    ws = [c.weight for c in enumerate_codewords(mat, cap) if c.weight]
    return min(ws) if ws else 0
