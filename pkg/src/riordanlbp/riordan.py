"""Riordan arrays and the triangular matrix algebra around them.

A Riordan array is a pair of truncated series (g, f) with g(0) invertible,
f(0) = 0 and f'(0) invertible; its (n, k) entry is [t^n] g * f^k.  The group
law is (g1, f1) * (g2, f2) = (g1 * g2(f1), f2(f1)), the identity is (1, t)
and inversion uses the compositional inverse of f.

The production matrix of an invertible lower-triangular block M is
M^{-1} * (M with its top row removed); for a Riordan array it has the
characteristic column-shift structure (every column from the second on is
the previous one pushed down), which is also a practical test for showing
that a matrix is NOT Riordan.
"""

from __future__ import annotations

from .scalars import scalar_inv, scalar_is_zero, zero_like
from .series import DEFAULT_ORDER, TruncatedSeries


class LowerTriangularMatrix:
    """Immutable lower-triangular block; row n carries n+1 entries."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        cleaned = []
        for n, row in enumerate(rows):
            row = tuple(row)
            if len(row) != n + 1:
                raise ValueError(f"row {n} must have {n + 1} entries, got {len(row)}")
            cleaned.append(row)
        if not cleaned:
            raise ValueError("empty matrix")
        self.rows = tuple(cleaned)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def entry(self, n: int, k: int):
        if k > n:
            return zero_like(self.rows[0][0])
        return self.rows[n][k]

    def first_column(self) -> list:
        return [row[0] for row in self.rows]

    def column(self, k: int) -> list:
        return [self.entry(n, k) for n in range(self.dim)]

    def __eq__(self, other):
        if not isinstance(other, LowerTriangularMatrix):
            return NotImplemented
        n = min(self.dim, other.dim)
        return all(self.rows[i] == other.rows[i] for i in range(n))

    __hash__ = None

    def __mul__(self, other):
        if not isinstance(other, LowerTriangularMatrix):
            return NotImplemented
        n = min(self.dim, other.dim)
        rows = []
        for i in range(n):
            row = []
            for j in range(i + 1):
                acc = self.rows[i][j] * other.rows[j][j]
                for m in range(j + 1, i + 1):
                    acc = acc + self.rows[i][m] * other.rows[m][j]
                row.append(acc)
            rows.append(row)
        return LowerTriangularMatrix(rows)

    def inverse(self) -> "LowerTriangularMatrix":
        """Back-substitution down the triangle; exact in any field."""
        n = self.dim
        for i in range(n):
            if scalar_is_zero(self.rows[i][i]):
                raise ZeroDivisionError(f"zero diagonal entry at {i}")
        inv_diag = [scalar_inv(self.rows[i][i]) for i in range(n)]
        out = [[None] * (i + 1) for i in range(n)]
        for j in range(n):
            out[j][j] = inv_diag[j]
            for i in range(j + 1, n):
                acc = self.rows[i][j] * out[j][j]
                for m in range(j + 1, i):
                    acc = acc + self.rows[i][m] * out[m][j]
                out[i][j] = -inv_diag[i] * acc
        return LowerTriangularMatrix(out)

    def __repr__(self):
        return f"LowerTriangularMatrix(dim={self.dim})"


class RiordanArray:
    """The pair (g, f) with entries [t^n] g * f^k."""

    __slots__ = ("g", "f")

    def __init__(self, g: TruncatedSeries, f: TruncatedSeries):
        if scalar_is_zero(g.coeffs[0]):
            raise ValueError("g(0) must be invertible")
        if not scalar_is_zero(f.coeffs[0]):
            raise ValueError("f(0) must vanish")
        if f.order < 1 or scalar_is_zero(f.coeffs[1]):
            raise ValueError("f'(0) must be invertible")
        self.g = g
        self.f = f

    @classmethod
    def identity(cls, order: int = DEFAULT_ORDER) -> "RiordanArray":
        return cls(TruncatedSeries([1], order), TruncatedSeries.identity(order))

    @property
    def order(self) -> int:
        return min(self.g.order, self.f.order)

    def entry(self, n: int, k: int):
        if not 0 <= k <= n <= self.order:
            raise IndexError("need 0 <= k <= n <= truncation order")
        col = self.g
        for _ in range(k):
            col = col * self.f
        return col.coeffs[n]

    def matrix(self, dim: int | None = None) -> LowerTriangularMatrix:
        if dim is None:
            dim = self.order + 1
        if dim > self.order + 1:
            raise ValueError("block larger than the truncation order allows")
        rows = [[None] * (n + 1) for n in range(dim)]
        col = self.g
        for k in range(dim):
            for n in range(k, dim):
                rows[n][k] = col.coeffs[n]
            if k + 1 < dim:
                col = col * self.f
        return LowerTriangularMatrix(rows)

    def __mul__(self, other):
        if not isinstance(other, RiordanArray):
            return NotImplemented
        return RiordanArray(
            self.g * other.g.compose(self.f), other.f.compose(self.f)
        )

    def inverse(self) -> "RiordanArray":
        fbar = self.f.reversion()
        return RiordanArray(self.g.compose(fbar).reciprocal(), fbar)

    def __eq__(self, other):
        if not isinstance(other, RiordanArray):
            return NotImplemented
        return self.g == other.g and self.f == other.f

    __hash__ = None

    def __repr__(self):
        return f"RiordanArray(order={self.order})"


def binomial_array(b, order: int = DEFAULT_ORDER) -> RiordanArray:
    """(1/(1-bt), t/(1-bt)); entries binomial(n, k) * b^(n-k)."""
    return RiordanArray(
        TruncatedSeries.ratio([1], [1, -b], order),
        TruncatedSeries.ratio([0, 1], [1, -b], order),
    )


def production_matrix(m: LowerTriangularMatrix) -> list[list]:
    """Solve M X = (M minus its top row) by forward substitution.

    Output is the square block of dimension m.dim - 1, the part of the
    production matrix the finite block determines.
    """
    dim = m.dim - 1
    if dim < 1:
        raise ValueError("need at least a 2x2 block")
    for i in range(dim):
        if scalar_is_zero(m.rows[i][i]):
            raise ZeroDivisionError(f"zero diagonal entry at {i}")
    inv_diag = [scalar_inv(m.rows[i][i]) for i in range(dim)]
    out = [[None] * dim for _ in range(dim)]
    for j in range(dim):
        for i in range(dim):
            acc = m.entry(i + 1, j)
            for k in range(i):
                acc = acc - m.rows[i][k] * out[k][j]
            out[i][j] = acc * inv_diag[i]
    return out


def has_column_shift(p: list[list]) -> bool:
    """Riordan production structure: column k >= 2 is column 1 pushed down."""
    dim = len(p)
    if dim < 3:
        raise ValueError("block too small to test the shift structure")
    zero = zero_like(p[0][0])
    for k in range(2, dim):
        for i in range(dim):
            want = p[i - k + 1][1] if i - k + 1 >= 0 else zero
            if not p[i][k] == want:
                return False
    return True
