"""Dense exact matrices and fraction-free elimination.

Integer matrices go through Bareiss elimination so that every intermediate
value is itself a minor of the input (no rational blow-up).  Matrices with
non-integral entries are scaled to a common denominator first.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from numbers import Rational
from typing import Iterable, Sequence

import numpy as np


class RationalMatrix:
    """Square matrix of :class:`fractions.Fraction`, stored row-major."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable[Rational | int]]):
        rows = tuple(tuple(Fraction(x) for x in r) for r in rows)
        dim = len(rows)
        if any(len(r) != dim for r in rows):
            raise ValueError("matrix must be square")
        self._rows = rows

    @classmethod
    def zeros(cls, dim: int) -> "RationalMatrix":
        return cls([[0] * dim for _ in range(dim)])

    @classmethod
    def identity(cls, dim: int) -> "RationalMatrix":
        return cls([[int(i == j) for j in range(dim)] for i in range(dim)])

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        if not (0 <= i < self.dim and 0 <= j < self.dim):
            raise IndexError(f"entry ({i}, {j}) outside {self.dim}x{self.dim}")
        return self._rows[i][j]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RationalMatrix):
            return self._rows == other._rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        body = ", ".join(
            "[" + ", ".join(str(x) for x in r) + "]" for r in self._rows
        )
        return f"RationalMatrix([{body}])"

    def _check_same(self, other: "RationalMatrix") -> None:
        if not isinstance(other, RationalMatrix) or other.dim != self.dim:
            raise ValueError("dimension mismatch")

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_same(other)
        return RationalMatrix(
            [a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)
        )

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_same(other)
        return RationalMatrix(
            [a - b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)
        )

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix([-a for a in r] for r in self._rows)

    def scale(self, factor: Rational | int) -> "RationalMatrix":
        f = Fraction(factor)
        return RationalMatrix([a * f for a in r] for r in self._rows)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_same(other)
        cols = list(zip(*other._rows))
        return RationalMatrix(
            [sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols]
            for r in self._rows
        )

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(zip(*self._rows))

    def is_symmetric(self) -> bool:
        return self == self.transpose()

    def trace(self) -> Fraction:
        return sum((self._rows[i][i] for i in range(self.dim)), Fraction(0))

    def row_sums(self) -> list[Fraction]:
        return [sum(r, Fraction(0)) for r in self._rows]

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for r in self._rows for x in r)

    def to_int_rows(self) -> list[list[int]]:
        if not self.is_integral():
            raise ValueError("matrix has non-integral entries")
        return [[x.numerator for x in r] for r in self._rows]

    def to_numpy(self) -> np.ndarray:
        return np.array([[float(x) for x in r] for r in self._rows], dtype=float)

    def submatrix(self, keep: Sequence[int]) -> "RationalMatrix":
        """Principal submatrix on the 0-based indices ``keep``."""
        return RationalMatrix([self._rows[i][j] for j in keep] for i in keep)

    def leading(self, k: int) -> "RationalMatrix":
        return self.submatrix(range(k))

    def delete(self, *indices: int) -> "RationalMatrix":
        drop = set(indices)
        return self.submatrix([i for i in range(self.dim) if i not in drop])

    def det(self) -> Fraction:
        return determinant(self)

    def to_json(self) -> list[list[list[int]]]:
        """``[[num, den], ...]`` per row."""
        return [[[x.numerator, x.denominator] for x in r] for r in self._rows]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[Sequence[int]]]) -> "RationalMatrix":
        return cls([Fraction(num, den) for num, den in r] for r in data)


def _scaled_integer_rows(m: RationalMatrix) -> tuple[list[list[int]], int]:
    den = lcm(*(x.denominator for r in m.rows for x in r)) if m.dim else 1
    return [[(x * den).numerator for x in r] for r in m.rows], den


def bareiss_det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by fraction-free Bareiss elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def determinant(m: RationalMatrix) -> Fraction:
    rows, den = _scaled_integer_rows(m)
    return Fraction(bareiss_det(rows), den ** m.dim)


def adjugate_and_det(rows: Sequence[Sequence[int]]) -> tuple[list[list[int]], int]:
    """Fraction-free Gauss-Jordan on ``[A | I]``.

    Returns ``(R, d)`` with ``A^{-1} = R / d``.  Without row exchanges ``d``
    is ``det A`` and ``R`` is the adjugate; with exchanges both pick up the
    same sign, so the quotient is unaffected.  Raises ``ZeroDivisionError``
    for singular input.
    """
    n = len(rows)
    a = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(rows)]
    width = 2 * n
    prev = 1
    for k in range(n):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    break
            else:
                raise ZeroDivisionError("singular matrix")
        pivot = a[k][k]
        row_k = a[k]
        for i in range(n):
            if i == k:
                continue
            row_i = a[i]
            aik = row_i[k]
            for j in range(width):
                if j == k:
                    continue
                row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    d = a[0][0]
    return [r[n:] for r in a], d


def inverse(m: RationalMatrix) -> RationalMatrix:
    rows, den = _scaled_integer_rows(m)
    adj, d = adjugate_and_det(rows)
    # (A*den)^{-1} = adj/d  =>  A^{-1} = den*adj/d
    return RationalMatrix([Fraction(den * x, d) for x in r] for r in adj)
