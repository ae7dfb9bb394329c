"""Exact linear algebra over the rationals.

Everything here works on Python ints and :class:`fractions.Fraction`; there is
no floating point. Rank, kernel and solve share one fraction-free
(Bareiss-style) elimination over the integers: each row is first scaled by
the lcm of its denominators, then every division performed is exact.

Ranks over Q coincide with ranks over C for rational matrices, so nothing is
lost by working over Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from numbers import Rational
from typing import Optional, Sequence

from .errors import DimensionMismatch, SizeGuardExceeded

MINOR_GUARD = 12


def as_rational(x) -> Rational:
    """Coerce to an exact rational; integral values come back as ``int``."""
    if isinstance(x, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, str):
        return as_rational(Fraction(x))
    if isinstance(x, Rational):
        return as_rational(Fraction(x.numerator, x.denominator))
    raise TypeError(f"not an exact rational: {x!r}")


@dataclass(frozen=True)
class Matrix:
    """Dense row-major rational matrix. Empty shapes (0 rows or 0 cols) are legal."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatch("negative shape")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: Optional[int] = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise DimensionMismatch("column count required for a matrix with no rows")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatch("ragged rows")
        return cls(len(rows), cols, tuple(as_rational(x) for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def tolist(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix.from_rows(
            [[self.entries[i * self.cols + j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def take_rows(self, indices: Sequence[int]) -> "Matrix":
        return Matrix.from_rows([self.row(i) for i in indices], cols=self.cols)

    def apply(self, v: Sequence) -> tuple:
        """Matrix-vector product ``M @ v``."""
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.cols} columns")
        v = [as_rational(x) for x in v]
        return tuple(
            as_rational(sum((a * x for a, x in zip(self.row(i), v)), 0))
            for i in range(self.rows)
        )

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch("inner dimensions differ")
        ot = other.transpose()
        return Matrix.from_rows(
            [[sum((a * b for a, b in zip(self.row(i), ot.row(j))), 0) for j in range(other.cols)]
             for i in range(self.rows)],
            cols=other.cols,
        )


def _integer_row(row: Sequence) -> list:
    den = 1
    for x in row:
        if not isinstance(x, int):
            den = lcm(den, x.denominator)
    if den == 1:
        return [int(x) for x in row]
    return [int(x * den) for x in row]


def _bareiss_forward(a: list, ncols: int) -> int:
    """In-place fraction-free forward elimination; returns the rank."""
    m = len(a)
    prev = 1
    r = 0
    for c in range(ncols):
        if r == m:
            break
        p = next((i for i in range(r, m) if a[i][c]), None)
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
        prow = a[r]
        piv = prow[c]
        for i in range(r + 1, m):
            row = a[i]
            f = row[c]
            if f == 0 and prev == piv:
                continue
            a[i] = [(piv * x - f * y) // prev for x, y in zip(row, prow)]
        prev = piv
        r += 1
    return r


def _bareiss_jordan(a: list, ncols: int) -> tuple:
    """In-place fraction-free Gauss-Jordan on the first ``ncols`` columns.

    On return every pivot entry equals the returned scale ``D`` and the
    pivot columns are otherwise zero, i.e. the leading block is ``D * rref``.
    """
    m = len(a)
    prev = 1
    pivots = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        p = next((i for i in range(r, m) if a[i][c]), None)
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
        prow = a[r]
        piv = prow[c]
        for i in range(m):
            if i == r:
                continue
            row = a[i]
            f = row[c]
            if f == 0 and prev == piv:
                continue
            a[i] = [(piv * x - f * y) // prev for x, y in zip(row, prow)]
        prev = piv
        pivots.append(c)
        r += 1
    return pivots, prev


def rank(M: Matrix) -> int:
    """Rank over Q. Zero for empty matrices."""
    if M.rows == 0 or M.cols == 0:
        return 0
    a = [_integer_row(M.row(i)) for i in range(M.rows)]
    return _bareiss_forward(a, M.cols)


def _primitive(v: list) -> tuple:
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        return tuple(v)
    lead = next(x for x in v if x)
    if lead < 0:
        g = -g
    return tuple(x // g for x in v)


def kernel_basis(M: Matrix) -> list:
    """Basis of the right null space as primitive integer vectors.

    One vector per non-pivot column, in increasing column order; each has a
    positive entry at its own free column and zeros at the other free columns.
    """
    n = M.cols
    if M.rows == 0:
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    a = [_integer_row(M.row(i)) for i in range(M.rows)]
    pivots, scale = _bareiss_jordan(a, n)
    pivot_set = set(pivots)
    basis = []
    for f in range(n):
        if f in pivot_set:
            continue
        v = [0] * n
        v[f] = scale
        for i, p in enumerate(pivots):
            v[p] = -a[i][f]
        basis.append(_primitive(v))
    return basis


def solve(M: Matrix, b: Sequence) -> Optional[tuple]:
    """One exact solution of ``M x = b``, or ``None`` when inconsistent.

    Free variables are set to zero, so the answer is deterministic; it is the
    unique solution when ``rank(M) == M.cols``.
    """
    if len(b) != M.rows:
        raise DimensionMismatch(f"right-hand side of length {len(b)} for {M.rows} rows")
    b = [as_rational(x) for x in b]
    if M.rows == 0:
        return tuple(Fraction(0) for _ in range(M.cols))
    a = [_integer_row(list(M.row(i)) + [b[i]]) for i in range(M.rows)]
    pivots, scale = _bareiss_jordan(a, M.cols)
    for i in range(len(pivots), M.rows):
        if a[i][M.cols] != 0:
            return None
    x = [Fraction(0)] * M.cols
    for i, p in enumerate(pivots):
        x[p] = Fraction(a[i][M.cols], scale)
    return tuple(x)


def _det(rows: list) -> Fraction:
    # textbook rational elimination; deliberately shares nothing with the Bareiss path
    a = [[Fraction(x) for x in r] for r in rows]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det


def rank_by_minors(M: Matrix) -> int:
    """Rank as the size of the largest nonzero minor, by exhaustive search.

    Independent oracle for :func:`rank`; limited to 12x12 matrices.
    """
    if M.rows > MINOR_GUARD or M.cols > MINOR_GUARD:
        raise SizeGuardExceeded(f"{M.rows}x{M.cols} exceeds the {MINOR_GUARD}x{MINOR_GUARD} guard")
    rows = M.tolist()
    for k in range(min(M.rows, M.cols), 0, -1):
        for rs in combinations(range(M.rows), k):
            for cs in combinations(range(M.cols), k):
                if _det([[rows[i][j] for j in cs] for i in rs]) != 0:
                    return k
    return 0
