"""Exact representative flag matrices over the field {a + b*sqrt(2)}.

Entries are pairs of rationals, so membership in the special orthogonal
group (form identity and unit determinant) is decided exactly, with no
floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .clans import MINUS, PLUS, DIIIClan

_Scalar = Union[int, Fraction, "QSqrt2"]


@dataclass(frozen=True)
class QSqrt2:
    """An element a + b*sqrt(2) with rational a, b; exact field arithmetic."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @classmethod
    def of(cls, value: _Scalar) -> "QSqrt2":
        if isinstance(value, QSqrt2):
            return value
        return cls(Fraction(value))

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __add__(self, other: _Scalar) -> "QSqrt2":
        o = QSqrt2.of(other)
        return QSqrt2(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> "QSqrt2":
        return QSqrt2(-self.a, -self.b)

    def __sub__(self, other: _Scalar) -> "QSqrt2":
        return self + (-QSqrt2.of(other))

    def __rsub__(self, other: _Scalar) -> "QSqrt2":
        return (-self) + QSqrt2.of(other)

    def __mul__(self, other: _Scalar) -> "QSqrt2":
        o = QSqrt2.of(other)
        return QSqrt2(self.a * o.a + 2 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def conjugate(self) -> "QSqrt2":
        return QSqrt2(self.a, -self.b)

    def inverse(self) -> "QSqrt2":
        norm = self.a * self.a - 2 * self.b * self.b
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt 2)")
        return QSqrt2(self.a / norm, -self.b / norm)

    def __truediv__(self, other: _Scalar) -> "QSqrt2":
        return self * QSqrt2.of(other).inverse()

    def __rtruediv__(self, other: _Scalar) -> "QSqrt2":
        return QSqrt2.of(other) * self.inverse()

    def __str__(self) -> str:
        if not self.b:
            return str(self.a)
        if not self.a:
            return f"{self.b}√2"
        sign = "+" if self.b > 0 else "-"
        return f"{self.a}{sign}{abs(self.b)}√2"

    def to_json_dict(self) -> dict:
        return {"a": str(self.a), "b": str(self.b)}


ZERO = QSqrt2()
ONE = QSqrt2(Fraction(1))
INV_SQRT2 = QSqrt2(Fraction(0), Fraction(1, 2))  # 1/sqrt(2) = sqrt(2)/2

_PRETTY = {
    ZERO: "0",
    ONE: "1",
    -ONE: "-1",
    INV_SQRT2: "1/√2",
    -INV_SQRT2: "-1/√2",
}


@dataclass(frozen=True)
class FlagMatrix:
    """A 2n x 2n matrix over Q(sqrt 2) representing an isotropic flag;
    rows[r][c] is the entry in row r+1, column c+1."""

    clan: DIIIClan
    rows: tuple[tuple[QSqrt2, ...], ...]

    @property
    def size(self) -> int:
        return len(self.rows)

    def column(self, c: int) -> tuple[QSqrt2, ...]:
        return tuple(self.rows[r][c - 1] for r in range(self.size))

    def pretty(self) -> str:
        cells = [[_PRETTY.get(e, str(e)) for e in row] for row in self.rows]
        width = max(len(s) for row in cells for s in row)
        return "\n".join(
            "[ " + "  ".join(s.rjust(width) for s in row) + " ]" for row in cells
        )

    def to_json_dict(self) -> dict:
        return {
            "n": self.clan.n,
            "clan": self.clan.spaced(),
            "entries": [[e.to_json_dict() for e in row] for row in self.rows],
        }


def representative_matrix(clan: DIIIClan) -> FlagMatrix:
    """Columns are basis vectors at sign positions (routed through the
    default permutation) and mixed +-1/sqrt(2) combinations on each family
    of four mate positions."""
    clan = clan.to_diii()
    m = 2 * clan.n
    sigma = clan.default_permutation()
    cols: list[list[QSqrt2] | None] = [None] * m

    def basis(r: int) -> list[QSqrt2]:
        col = [ZERO] * m
        col[r - 1] = ONE
        return col

    def mix(r: int, s: int, minus: bool) -> list[QSqrt2]:
        col = [ZERO] * m
        col[r - 1] = INV_SQRT2
        col[s - 1] = -INV_SQRT2 if minus else INV_SQRT2
        return col

    for pos, symbol in enumerate(clan.symbols, start=1):
        if symbol in (PLUS, MINUS):
            cols[pos - 1] = basis(sigma(pos))
    for (i, j, jj, ii) in clan.classify_pairs().families:
        cols[i - 1] = mix(sigma(i), sigma(j), minus=False)
        cols[j - 1] = mix(sigma(i), sigma(j), minus=True)
        cols[ii - 1] = mix(sigma(ii), sigma(jj), minus=False)
        cols[jj - 1] = mix(sigma(ii), sigma(jj), minus=True)
    if any(c is None for c in cols):
        raise AssertionError("flag construction left empty columns")
    rows = tuple(
        tuple(cols[c][r] for c in range(m)) for r in range(m)
    )
    return FlagMatrix(clan, rows)


def _antidiagonal(m: int) -> list[list[QSqrt2]]:
    return [[ONE if r + c == m - 1 else ZERO for c in range(m)] for r in range(m)]


def _matmul(a: Sequence[Sequence[QSqrt2]], b: Sequence[Sequence[QSqrt2]]) -> list[list[QSqrt2]]:
    m = len(a)
    return [
        [sum((a[r][k] * b[k][c] for k in range(m)), ZERO) for c in range(m)]
        for r in range(m)
    ]


def exact_determinant(rows: Sequence[Sequence[QSqrt2]]) -> QSqrt2:
    """Gaussian elimination with exact pivots over the field."""
    m = len(rows)
    work = [list(row) for row in rows]
    det = ONE
    for col in range(m):
        pivot_row = next((r for r in range(col, m) if work[r][col]), None)
        if pivot_row is None:
            return ZERO
        if pivot_row != col:
            work[col], work[pivot_row] = work[pivot_row], work[col]
            det = -det
        pivot = work[col][col]
        det = det * pivot
        inv = pivot.inverse()
        for r in range(col + 1, m):
            factor = work[r][col] * inv
            if factor:
                for c in range(col, m):
                    work[r][c] = work[r][c] - factor * work[col][c]
    return det


def exact_rank(rows: Sequence[Sequence[QSqrt2]]) -> int:
    nrows = len(rows)
    if nrows == 0:
        return 0
    ncols = len(rows[0])
    work = [list(row) for row in rows]
    rank = 0
    for col in range(ncols):
        pivot_row = next((r for r in range(rank, nrows) if work[r][col]), None)
        if pivot_row is None:
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        inv = work[rank][col].inverse()
        for r in range(rank + 1, nrows):
            factor = work[r][col] * inv
            if factor:
                for c in range(col, ncols):
                    work[r][c] = work[r][c] - factor * work[rank][c]
        rank += 1
        if rank == nrows:
            break
    return rank


def verify_special_orthogonal(matrix: FlagMatrix) -> bool:
    """Exact check of the antidiagonal form identity and unit determinant."""
    m = matrix.size
    j = _antidiagonal(m)
    g = [list(row) for row in matrix.rows]
    gt = [[g[c][r] for c in range(m)] for r in range(m)]
    if _matmul(_matmul(gt, j), g) != j:
        return False
    return exact_determinant(g) == ONE


def intersection_dimension(matrix: FlagMatrix) -> int:
    """Dimension of the meet of the span of the first n columns with the
    span of the first n basis vectors, by exact rank."""
    m = matrix.size
    n = m // 2
    stacked: list[list[QSqrt2]] = []
    for c in range(1, n + 1):
        stacked.append(list(matrix.column(c)))
    for r in range(1, n + 1):
        stacked.append([ONE if k == r - 1 else ZERO for k in range(m)])
    return 2 * n - exact_rank(stacked)


def intersection_parity(matrix: FlagMatrix) -> int:
    return intersection_dimension(matrix) % 2
