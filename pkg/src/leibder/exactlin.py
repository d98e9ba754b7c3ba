"""Exact rational scalars and dense matrices.

Scalars are :class:`fractions.Fraction` (arbitrary precision, always in
lowest terms with positive denominator).  Matrices are immutable, dense,
row-major.  Elimination uses plain rational pivoting; every result is exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import InputError

Scalar = Fraction
Vector = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def scalar(x) -> Fraction:
    """Coerce an int, a Fraction or a string "p/q" (or "p") to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad rational literal {x!r}") from exc
    raise InputError(f"cannot interpret {x!r} as an exact rational")


def scalar_str(q: Fraction) -> str:
    """Canonical serialization: "p/q", or just "p" when q = 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def vector(xs: Iterable) -> Vector:
    return tuple(scalar(x) for x in xs)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(ONE if j == i else ZERO for j in range(n))


def vec_add(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Vector, b: Vector) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(c: Fraction, a: Vector) -> Vector:
    return tuple(c * x for x in a)


def is_zero_vector(a: Vector) -> bool:
    return all(x == 0 for x in a)


class Matrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence[Sequence]):
        entries = tuple(tuple(scalar(x) for x in row) for row in entries)
        if len(entries) != rows or any(len(row) != cols for row in entries):
            raise InputError(f"matrix shape mismatch: expected {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> "Matrix":
        rows = [list(r) for r in rows]
        if not rows:
            return Matrix(0, 0, [])
        return Matrix(len(rows), len(rows[0]), rows)

    @staticmethod
    def from_cols(cols: Sequence[Sequence]) -> "Matrix":
        cols = [list(c) for c in cols]
        if not cols:
            return Matrix(0, 0, [])
        n = len(cols[0])
        return Matrix(n, len(cols), [[cols[j][i] for j in range(len(cols))] for i in range(n)])

    @staticmethod
    def zeros(rows: int, cols: int) -> "Matrix":
        return Matrix(rows, cols, [[ZERO] * cols for _ in range(rows)])

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(n, n, [[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @staticmethod
    def diag_blocks(a: "Matrix", b: "Matrix") -> "Matrix":
        """Block-diagonal sum a ⊕ b."""
        rows = []
        for i in range(a.rows):
            rows.append(list(a.entries[i]) + [ZERO] * b.cols)
        for i in range(b.rows):
            rows.append([ZERO] * a.cols + list(b.entries[i]))
        return Matrix(a.rows + b.rows, a.cols + b.cols, rows)

    # -- arithmetic ----------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise InputError("matrix addition: shape mismatch")
        return Matrix(
            self.rows,
            self.cols,
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(Fraction(-1))

    def __neg__(self) -> "Matrix":
        return self.scale(Fraction(-1))

    def scale(self, c) -> "Matrix":
        c = scalar(c)
        return Matrix(self.rows, self.cols, [[c * x for x in row] for row in self.entries])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise InputError("matrix product: inner dimension mismatch")
        ot = list(zip(*other.entries)) if other.entries else [()] * other.cols
        return Matrix(
            self.rows,
            other.cols,
            [
                [sum((a * b for a, b in zip(row, col)), ZERO) for col in ot]
                for row in self.entries
            ],
        )

    def apply(self, v: Sequence) -> Vector:
        """Matrix-vector product."""
        v = vector(v)
        if len(v) != self.cols:
            raise InputError("matrix apply: length mismatch")
        return tuple(sum((a * b for a, b in zip(row, v)), ZERO) for row in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, list(zip(*self.entries)) if self.entries else [])

    def col(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def __repr__(self):
        body = "; ".join(" ".join(scalar_str(x) for x in row) for row in self.entries)
        return f"Matrix({self.rows}x{self.cols}: {body})"

    # -- elimination ---------------------------------------------------

    def _echelon(self):
        """Row-reduce a working copy; returns (rows, pivot column list)."""
        m = [list(row) for row in self.entries]
        pivots = []
        r = 0
        for c in range(self.cols):
            pr = next((i for i in range(r, self.rows) if m[i][c] != 0), None)
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            inv = 1 / m[r][c]
            m[r] = [x * inv for x in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [x - f * y for x, y in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return m, pivots

    def rank(self) -> int:
        return len(self._echelon()[1])

    def kernel_basis(self) -> list[Vector]:
        """Basis of the null space, in the echelon convention.

        Each basis vector has a 1 in one free column and back-substituted
        pivot coordinates; m @ v = 0 exactly for every returned v.
        """
        m, pivots = self._echelon()
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        basis = []
        for fc in free:
            v = [ZERO] * self.cols
            v[fc] = ONE
            for r, pc in enumerate(pivots):
                v[pc] = -m[r][fc]
            basis.append(tuple(v))
        return basis

    def solve(self, b: Sequence) -> Optional[Vector]:
        """Some x with m @ x = b, or None when the system is inconsistent.

        Free variables are set to zero (echelon particular solution).
        """
        b = vector(b)
        if len(b) != self.rows:
            raise InputError("solve: right-hand side length mismatch")
        aug = Matrix(self.rows, self.cols + 1, [list(row) + [bi] for row, bi in zip(self.entries, b)])
        m, pivots = aug._echelon()
        if self.cols in pivots:
            return None
        x = [ZERO] * self.cols
        for r, pc in enumerate(pivots):
            x[pc] = m[r][self.cols]
        return tuple(x)


def hstack(mats: Sequence[Matrix]) -> Matrix:
    rows = mats[0].rows
    if any(m.rows != rows for m in mats):
        raise InputError("hstack: row count mismatch")
    return Matrix(
        rows,
        sum(m.cols for m in mats),
        [[x for m in mats for x in m.entries[i]] for i in range(rows)],
    )


def vstack(mats: Sequence[Matrix]) -> Matrix:
    cols = mats[0].cols
    if any(m.cols != cols for m in mats):
        raise InputError("vstack: column count mismatch")
    return Matrix(sum(m.rows for m in mats), cols, [row for m in mats for row in m.entries])
