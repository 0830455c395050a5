"""Exact integer and rational linear algebra.

Determinants, Pfaffians and Smith normal forms run on the integer kernels in
``_backend`` (compiled when available).  Signatures of rational symmetric
matrices are read off the characteristic polynomial with Descartes' rule,
which is exact because a real symmetric matrix has only real eigenvalues.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from nspairs import _backend
from nspairs import upoly
from nspairs.errors import DimensionError, StructureError


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple  # row-major, Python ints

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")
        if all(type(v) is int for v in self.entries):
            return
        for v in self.entries:
            if isinstance(v, bool) or not isinstance(v, int):
                raise StructureError(f"non-integer entry {v!r}")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: int | None = None) -> IntMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for i, r in enumerate(rows):
            if len(r) != cols:
                raise DimensionError(f"row {i} has {len(r)} entries, expected {cols}")
        return cls(len(rows), cols, tuple(v for r in rows for v in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> IntMatrix:
        return IntMatrix(self.cols, self.rows,
                         tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_skew(self) -> bool:
        if not self.is_square:
            return False
        n = self.rows
        return all(self[i, j] == -self[j, i] for i in range(n) for j in range(i, n))

    def __str__(self):
        return "[" + ", ".join(str(list(self.row(i))) for i in range(self.rows)) + "]"


@dataclass(frozen=True)
class SmithNormalForm:
    invariant_factors: tuple  # length min(rows, cols); zeros after the rank
    rank: int
    rows: int
    cols: int

    @property
    def cokernel_free_rank(self) -> int:
        # columns are images of domain generators, so the codomain has `rows` generators
        return self.rows - self.rank

    @property
    def cokernel_torsion(self) -> tuple:
        return tuple(d for d in self.invariant_factors if d > 1)

    @property
    def is_unimodular(self) -> bool:
        return self.rows == self.cols and all(d == 1 for d in self.invariant_factors)

    def cokernel_str(self, unicode: bool = True) -> str:
        z = "ℤ" if unicode else "Z"
        parts = [f"{z}/{d}" for d in self.cokernel_torsion]
        if self.cokernel_free_rank:
            parts.append(z if self.cokernel_free_rank == 1 else f"{z}^{self.cokernel_free_rank}")
        if not parts:
            return "0"
        return (" ⊕ " if unicode else " + ").join(parts)


@dataclass(frozen=True)
class ExactSignature:
    positive: int
    negative: int
    zero: int

    @property
    def signature(self) -> int:
        return self.positive - self.negative


def _as_int_matrix(m) -> IntMatrix:
    if isinstance(m, IntMatrix):
        return m
    return IntMatrix.from_rows(m)


def determinant(m) -> int:
    m = _as_int_matrix(m)
    if not m.is_square:
        raise DimensionError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    return _backend.det(m.to_rows())


def pfaffian(m) -> int:
    m = _as_int_matrix(m)
    if not m.is_square:
        raise StructureError(f"Pfaffian of a non-square {m.rows}x{m.cols} matrix")
    if m.rows % 2:
        raise StructureError(f"Pfaffian needs even size, got {m.rows}")
    if not m.is_skew():
        raise StructureError("Pfaffian needs a skew-symmetric matrix with zero diagonal")
    return _backend.pfaffian(m.to_rows())


def smith_normal_form(m) -> SmithNormalForm:
    m = _as_int_matrix(m)
    diag = _backend.smith_diagonal(m.to_rows(), m.cols)
    rank = sum(1 for d in diag if d)
    return SmithNormalForm(tuple(diag), rank, m.rows, m.cols)


def _rational_rows(m) -> list[list[Fraction]]:
    if isinstance(m, IntMatrix):
        return [[Fraction(v) for v in r] for r in m.to_rows()]
    rows = [[Fraction(v) for v in r] for r in m]
    for i, r in enumerate(rows):
        if len(r) != len(rows):
            raise DimensionError(f"row {i} has {len(r)} entries in a {len(rows)}-row matrix")
    return rows


def charpoly(rows) -> list[int]:
    """Characteristic polynomial det(xI - A) of an integer matrix.

    Berkowitz's division-free algorithm; coefficients constant term first.
    """
    n = len(rows)
    if n == 0:
        return [1]
    # vect holds coefficients highest degree first while iterating
    vect = [1, -rows[0][0]]
    for r in range(1, n):
        # A_r = rows[:r][:r], R = row r cols :r, C = col r rows :r, a = A[r][r]
        a = rows[r][r]
        R = rows[r][:r]
        C = [rows[i][r] for i in range(r)]
        A = [row[:r] for row in rows[:r]]
        # Toeplitz column: 1, -a, -R C, -R A C, -R A^2 C, ...
        col = [1, -a]
        v = C
        for _ in range(r):
            col.append(-sum(x * y for x, y in zip(R, v)))
            v = [sum(A[i][j] * v[j] for j in range(r)) for i in range(r)]
        # multiply lower-triangular Toeplitz (r+2)x(r+1) by vect
        new = []
        for i in range(r + 2):
            s = 0
            for j in range(min(i, r) + 1):
                s += col[i - j] * vect[j]
            new.append(s)
        vect = new
    return list(reversed(vect))


def exact_signature(m) -> ExactSignature:
    """Inertia of a symmetric rational matrix."""
    rows = _rational_rows(m)
    n = len(rows)
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise StructureError(f"matrix is not symmetric at ({i}, {j})")
    if n == 0:
        return ExactSignature(0, 0, 0)
    den = lcm(*(v.denominator for r in rows for v in r))
    ints = [[int(v * den) for v in r] for r in rows]
    p = charpoly(ints)
    zero = next(i for i, c in enumerate(p) if c != 0)
    positive = upoly.sign_changes(p)
    negative = upoly.sign_changes([c if i % 2 == 0 else -c for i, c in enumerate(p)])
    if positive + negative + zero != n:
        raise AssertionError("characteristic polynomial of a symmetric matrix has non-real roots")
    return ExactSignature(positive, negative, zero)
