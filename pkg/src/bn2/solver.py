"""Dense exact linear algebra over the rationals.

Two independent elimination strategies are provided: plain Gaussian
elimination on Fraction entries, and fraction-free (Bareiss) elimination on
denominator-cleared integer rows.  The test suite uses them as mutual
oracles; ``solve_exact`` additionally verifies its answer by substitution
into every equation before returning.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

__all__ = [
    "RationalMatrix",
    "DimensionMismatchError",
    "SingularMatrixError",
    "solve_exact",
    "rank",
    "det",
    "det_is_nonzero",
    "nullspace",
]


class DimensionMismatchError(ValueError):
    """Operands have incompatible shapes."""


class SingularMatrixError(ValueError):
    """The matrix is singular; ``rank`` carries the rank attained."""

    def __init__(self, message: str, rank: int):
        super().__init__(message)
        self.rank = rank


class RationalMatrix:
    """Dense matrix of Fractions, immutable by convention."""

    __slots__ = ("_rows",)

    def __init__(self, entries):
        rows = [[Fraction(x) for x in row] for row in entries]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise DimensionMismatchError("rows have unequal lengths")
        self._rows = rows

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "RationalMatrix":
        return cls([[Fraction(0)] * ncols for _ in range(nrows)])

    @property
    def nrows(self) -> int:
        return len(self._rows)

    @property
    def ncols(self) -> int:
        return len(self._rows[0]) if self._rows else 0

    def entry(self, i: int, j: int) -> Fraction:
        return self._rows[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return tuple(self._rows[i])

    def rows(self) -> list[list[Fraction]]:
        """A mutable copy of the entries."""
        return [list(r) for r in self._rows]

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def matvec(self, v) -> list[Fraction]:
        if len(v) != self.ncols:
            raise DimensionMismatchError(f"matvec: {self.ncols} columns vs {len(v)} entries")
        vv = [Fraction(x) for x in v]
        return [sum((r[j] * vv[j] for j in range(self.ncols)), Fraction(0)) for r in self._rows]

    def matmul(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.ncols != other.nrows:
            raise DimensionMismatchError(
                f"matmul: {self.nrows}x{self.ncols} times {other.nrows}x{other.ncols}"
            )
        out = [[Fraction(0)] * other.ncols for _ in range(self.nrows)]
        for i, row in enumerate(self._rows):
            orow = out[i]
            for t, a in enumerate(row):
                if a == 0:
                    continue
                brow = other._rows[t]
                for j, b in enumerate(brow):
                    if b != 0:
                        orow[j] += a * b
        return RationalMatrix(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __repr__(self) -> str:
        return f"RationalMatrix({self.nrows}x{self.ncols})"


def _scaled_int_rows(rows: list[list[Fraction]]) -> tuple[list[list[int]], list[int]]:
    """Clear denominators row by row; returns integer rows and the scales."""
    out, scales = [], []
    for row in rows:
        mult = 1
        for x in row:
            mult = mult * x.denominator // gcd(mult, x.denominator)
        out.append([int(x * mult) for x in row])
        scales.append(mult)
    return out, scales


def _bareiss_echelon(int_rows: list[list[int]], pivot_limit: int | None = None):
    """Fraction-free row echelon form.  Pivots are chosen inside each column
    by largest bit length.  Returns (rows, pivots, sign) where pivots is a
    list of (row, col)."""
    m = [r[:] for r in int_rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    limit = nc if pivot_limit is None else pivot_limit
    pivots: list[tuple[int, int]] = []
    prev = 1
    pr = 0
    sign = 1
    for c in range(limit):
        best, best_bits = -1, -1
        for r in range(pr, nr):
            v = m[r][c]
            if v != 0:
                bits = abs(v).bit_length()
                if bits > best_bits:
                    best, best_bits = r, bits
        if best < 0:
            continue
        if best != pr:
            m[pr], m[best] = m[best], m[pr]
            sign = -sign
        p = m[pr][c]
        prow = m[pr]
        for r in range(pr + 1, nr):
            row = m[r]
            f = row[c]
            for cc in range(c + 1, nc):
                row[cc] = (p * row[cc] - f * prow[cc]) // prev
            row[c] = 0
        prev = p
        pivots.append((pr, c))
        pr += 1
        if pr == nr:
            break
    return m, pivots, sign


def _gauss_echelon(rows: list[list[Fraction]], pivot_limit: int | None = None):
    """Rational row echelon form with the same pivot rule as Bareiss."""
    m = [list(r) for r in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    limit = nc if pivot_limit is None else pivot_limit
    pivots: list[tuple[int, int]] = []
    pr = 0
    for c in range(limit):
        best, best_bits = -1, -1
        for r in range(pr, nr):
            if m[r][c] != 0:
                bits = abs(m[r][c].numerator).bit_length()
                if bits > best_bits:
                    best, best_bits = r, bits
        if best < 0:
            continue
        if best != pr:
            m[pr], m[best] = m[best], m[pr]
        p = m[pr][c]
        prow = m[pr]
        for r in range(pr + 1, nr):
            f = m[r][c]
            if f != 0:
                ratio = f / p
                row = m[r]
                for cc in range(c, nc):
                    row[cc] -= ratio * prow[cc]
        pivots.append((pr, c))
        pr += 1
        if pr == nr:
            break
    return m, pivots


def rank(matrix: RationalMatrix, method: str = "bareiss") -> int:
    """Exact rank via the chosen elimination strategy."""
    if method == "bareiss":
        int_rows, _ = _scaled_int_rows(matrix.rows())
        _, pivots, _ = _bareiss_echelon(int_rows)
    elif method == "gauss":
        _, pivots = _gauss_echelon(matrix.rows())
    else:
        raise ValueError(f"unknown elimination method {method!r}")
    return len(pivots)


def det(matrix: RationalMatrix) -> Fraction:
    """Exact determinant via fraction-free elimination."""
    if not matrix.is_square():
        raise DimensionMismatchError(f"det needs a square matrix, got {matrix!r}")
    n = matrix.nrows
    if n == 0:
        return Fraction(1)
    int_rows, scales = _scaled_int_rows(matrix.rows())
    rows, pivots, sign = _bareiss_echelon(int_rows)
    if len(pivots) < n:
        return Fraction(0)
    pr, pc = pivots[-1]
    value = Fraction(sign * rows[pr][pc])
    for s in scales:
        value /= s
    return value


def det_is_nonzero(matrix: RationalMatrix) -> bool:
    return det(matrix) != 0


def _back_substitute(rows, pivots, ncols: int, rhs_col: int) -> list[Fraction]:
    x: list[Fraction] = [Fraction(0)] * rhs_col
    for pr, pc in reversed(pivots):
        row = rows[pr]
        acc = Fraction(row[rhs_col])
        for c in range(pc + 1, rhs_col):
            if row[c] != 0 and x[c] != 0:
                acc -= Fraction(row[c]) * x[c]
        x[pc] = acc / row[pc]
    return x


def solve_exact(matrix: RationalMatrix, b, method: str = "bareiss") -> list[Fraction]:
    """Unique exact solution of a square nonsingular system.

    The result is substituted back into every original equation before being
    returned.  Raises SingularMatrixError (with the rank attained) or
    DimensionMismatchError.
    """
    if not matrix.is_square():
        raise DimensionMismatchError(
            f"solve_exact needs a square matrix, got {matrix.nrows}x{matrix.ncols}"
        )
    n = matrix.nrows
    if len(b) != n:
        raise DimensionMismatchError(f"rhs length {len(b)} vs order {n}")
    aug = [row + [Fraction(v)] for row, v in zip(matrix.rows(), b)]
    if method == "bareiss":
        int_rows, _ = _scaled_int_rows(aug)
        rows, pivots, _ = _bareiss_echelon(int_rows, pivot_limit=n)
    elif method == "gauss":
        rows, pivots = _gauss_echelon(aug, pivot_limit=n)
    else:
        raise ValueError(f"unknown elimination method {method!r}")
    if len(pivots) < n:
        raise SingularMatrixError(
            f"matrix of order {n} is singular (rank {len(pivots)})", rank=len(pivots)
        )
    x = _back_substitute(rows, pivots, n, n)
    if matrix.matvec(x) != [Fraction(v) for v in b]:
        raise ArithmeticError("internal error: solution has a nonzero residual")
    return x


def nullspace(matrix: RationalMatrix) -> list[list[Fraction]]:
    """Basis of the right kernel, one vector per free column, each with its
    first nonzero coordinate normalized to 1."""
    rows, pivots = _gauss_echelon(matrix.rows())
    nc = matrix.ncols
    pivot_cols = {pc for _, pc in pivots}
    basis: list[list[Fraction]] = []
    for fc in range(nc):
        if fc in pivot_cols:
            continue
        v = [Fraction(0)] * nc
        v[fc] = Fraction(1)
        for pr, pc in reversed(pivots):
            if pc > fc:
                continue
            row = rows[pr]
            acc = Fraction(0)
            for c in range(pc + 1, nc):
                if row[c] != 0 and v[c] != 0:
                    acc -= row[c] * v[c]
            v[pc] = acc / row[pc]
        first = next((c for c in range(nc) if v[c] != 0), None)
        if first is not None and v[first] != 1:
            scale = v[first]
            v = [x / scale for x in v]
        basis.append(v)
    return basis
