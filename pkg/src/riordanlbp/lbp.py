"""Laurent biorthogonal polynomial families and their moment theory.

A family is defined by the recurrence

    P_n(x) = (x - c_{n-1}) P_{n-1}(x) - b_{n-1} x P_{n-2}(x),   n >= 2,

with P_0 = 1 and P_1 = x - c_0.  When b and c are constant the coefficient
array is the Riordan array (1/(1+ct), t(1-bt)/(1+ct)) and the moment matrix
is its inverse; the moment sequence mu_n (the inverse's first column) begins
1, c, c(b+c), c(b+c)(2b+c), ...

Five independent routes compute the moments and must agree:

* matrix_inverse     -- invert the materialized coefficient block (works for
                        arbitrary, e.g. periodic, coefficient sequences);
* catalan_sum        -- mu_n = sum_k C(2n-k-1, 2n-2k) C_{n-k} b^(n-k) c^k;
* lagrange           -- the k = 0 case of the Lagrange-inversion entry formula;
* shifted_tfraction  -- solve u = 1/(1 - ct - btu) order by order and shift
                        through mu(t) = 1 + c t u(t);
* gf_expansion       -- expand the closed form
                        (c + 2b - c^2 t - c sqrt(1 - 2(2b+c)t + c^2 t^2))/(2b).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinat import binomial, catalan
from .riordan import LowerTriangularMatrix, RiordanArray
from .scalars import XPoly, coerce_scalar, scalar_is_zero, zero_like
from .series import DEFAULT_ORDER, TruncatedSeries

MOMENT_ROUTES = (
    "matrix_inverse",
    "catalan_sum",
    "lagrange",
    "shifted_tfraction",
    "gf_expansion",
)


@dataclass(frozen=True)
class LBPFamily:
    """Recurrence data; b_seq and c_seq are cycled indefinitely by index."""

    b_seq: tuple
    c_seq: tuple
    order: int = DEFAULT_ORDER

    def __post_init__(self):
        object.__setattr__(self, "b_seq", tuple(coerce_scalar(v) for v in self.b_seq))
        object.__setattr__(self, "c_seq", tuple(coerce_scalar(v) for v in self.c_seq))
        if not self.b_seq or not self.c_seq:
            raise ValueError("coefficient sequences must be nonempty")
        for v in (*self.b_seq, *self.c_seq):
            if scalar_is_zero(v):
                raise ValueError("recurrence coefficients must be nonzero")

    @classmethod
    def constant(cls, b, c, order: int = DEFAULT_ORDER) -> "LBPFamily":
        return cls((b,), (c,), order)

    @classmethod
    def periodic(cls, b_seq, c_seq, order: int = DEFAULT_ORDER) -> "LBPFamily":
        return cls(tuple(b_seq), tuple(c_seq), order)

    @property
    def is_constant(self) -> bool:
        return all(v == self.b_seq[0] for v in self.b_seq) and all(
            v == self.c_seq[0] for v in self.c_seq
        )

    def b_at(self, n: int):
        return self.b_seq[n % len(self.b_seq)]

    def c_at(self, n: int):
        return self.c_seq[n % len(self.c_seq)]

    @property
    def b(self):
        if any(v != self.b_seq[0] for v in self.b_seq):
            raise ValueError("family does not have constant b")
        return self.b_seq[0]

    @property
    def c(self):
        if any(v != self.c_seq[0] for v in self.c_seq):
            raise ValueError("family does not have constant c")
        return self.c_seq[0]


@dataclass(frozen=True)
class MomentSequence:
    values: tuple
    route: str

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if not self.values or not self.values[0] == 1:
            raise ValueError("moment sequences are normalized to mu_0 = 1")

    def __getitem__(self, n: int):
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other):
        if isinstance(other, MomentSequence):
            other = other.values
        return list(self.values) == list(other)


def rows_by_recurrence(family: LBPFamily, n_max: int | None = None) -> list[list]:
    """Polynomial rows as ascending coefficient lists; row n has length n+1."""
    if n_max is None:
        n_max = family.order
    one = coerce_scalar(1)
    rows = [XPoly([one])]
    if n_max >= 1:
        rows.append(XPoly([-family.c_at(0), one]))
    for n in range(2, n_max + 1):
        x_shifted = rows[n - 1].shift(1)
        rows.append(
            x_shifted
            - family.c_at(n - 1) * rows[n - 1]
            - family.b_at(n - 1) * rows[n - 2].shift(1)
        )
    return [rows[n].padded(n + 1) for n in range(n_max + 1)]


def coefficient_matrix(family: LBPFamily, dim: int | None = None) -> LowerTriangularMatrix:
    if dim is None:
        dim = family.order + 1
    return LowerTriangularMatrix(rows_by_recurrence(family, dim - 1))


def coefficient_array(family: LBPFamily, order: int | None = None) -> RiordanArray:
    """(1/(1+ct), t(1-bt)/(1+ct)); constant-coefficient families only."""
    if not family.is_constant:
        raise ValueError("only constant-coefficient families form a Riordan array")
    if order is None:
        order = family.order
    b, c = family.b, family.c
    return RiordanArray(
        TruncatedSeries.ratio([1], [1, c], order),
        TruncatedSeries.ratio([0, 1, -b], [1, c], order),
    )


def moment_matrix(family: LBPFamily, dim: int | None = None) -> LowerTriangularMatrix:
    """Inverse of the coefficient block; first column is the moment sequence."""
    return coefficient_matrix(family, dim).inverse()


def entry_closed_form(n: int, k: int, b, c):
    """Coefficient-array entry sum_j C(k,j) C(n-j, n-k-j) (-b)^j (-c)^(n-k-j)."""
    if not 0 <= k <= n:
        raise IndexError("need 0 <= k <= n")
    b, c = coerce_scalar(b), coerce_scalar(c)
    total = zero_like(b)
    for j in range(n - k + 1):
        coeff = binomial(k, j) * binomial(n - j, n - k - j)
        if not coeff:
            continue
        total = total + coeff * (-b) ** j * (-c) ** (n - k - j)
    return total


def inverse_entry_lagrange(n: int, k: int, b, c):
    """Moment-matrix entry via the Lagrange-inversion double sum."""
    if not 0 <= k <= n:
        raise IndexError("need 0 <= k <= n")
    b, c = coerce_scalar(b), coerce_scalar(c)
    if n == 0:
        return b ** 0
    total = zero_like(b)
    for j in range(n + 1):
        w = k * binomial(n, j) * binomial(2 * n - k - j - 1, n - k - j)
        if w:
            total = total + Fraction(w, n) * c ** j * b ** (n - k - j)
    for j in range(n + 1):
        w = (k + 1) * binomial(n, j) * binomial(2 * n - k - j - 2, n - k - j - 1)
        if w:
            total = total + Fraction(w, n) * c ** (j + 1) * b ** (n - k - j - 1)
    return total


def moment_gf(b, c, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Closed form (c + 2b - c^2 t - c sqrt(1 - 2(2b+c)t + c^2 t^2)) / (2b)."""
    b, c = coerce_scalar(b), coerce_scalar(c)
    root = TruncatedSeries([1, -2 * (2 * b + c), c * c], order).sqrt()
    num = TruncatedSeries([c + 2 * b, -c * c], order) - c * root
    return num / (2 * b)


def moment_gf_catalan_form(b, c, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Same series as moment_gf via 1 + (ct/(1-ct)) * Cat(bt/(1-ct)^2)."""
    from .series import catalan_series

    b, c = coerce_scalar(b), coerce_scalar(c)
    cat = catalan_series(order)
    inner = TruncatedSeries.ratio([0, b], [1, -2 * c, c * c], order)
    prefix = TruncatedSeries.ratio([0, c], [1, -c], order)
    return 1 + prefix * cat.compose(inner)


def tfraction_fixed_point(b, c, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Solve u = 1/(1 - ct - btu), i.e. u_n = c u_{n-1} + b [t^(n-1)] u^2."""
    b, c = coerce_scalar(b), coerce_scalar(c)
    u = [b ** 0]
    for n in range(1, order + 1):
        square = zero_like(u[0])
        for i in range(n):
            square = square + u[i] * u[n - 1 - i]
        u.append(c * u[n - 1] + b * square)
    return TruncatedSeries(u)


def moments(family: LBPFamily, route: str = "matrix_inverse",
            n_max: int | None = None) -> MomentSequence:
    if route not in MOMENT_ROUTES:
        raise ValueError(f"unknown moment route {route!r}; choose from {MOMENT_ROUTES}")
    if n_max is None:
        n_max = family.order
    if route == "matrix_inverse":
        values = moment_matrix(family, n_max + 1).first_column()
        return MomentSequence(tuple(values), route)
    if not family.is_constant:
        raise ValueError(f"route {route!r} applies to constant-coefficient families only")
    b, c = family.b, family.c
    if route == "catalan_sum":
        values = []
        for n in range(n_max + 1):
            acc = zero_like(b)
            for k in range(n + 1):
                w = binomial(2 * n - k - 1, 2 * n - 2 * k) * catalan(n - k)
                if w:
                    acc = acc + w * b ** (n - k) * c ** k
            values.append(acc)
    elif route == "lagrange":
        values = [inverse_entry_lagrange(n, 0, b, c) for n in range(n_max + 1)]
    elif route == "shifted_tfraction":
        u = tfraction_fixed_point(b, c, max(n_max - 1, 0))
        values = [b ** 0] + [c * u.coeffs[n - 1] for n in range(1, n_max + 1)]
    else:  # gf_expansion
        values = list(moment_gf(b, c, n_max).coeffs)
    return MomentSequence(tuple(values), route)


def bivariate_gf_rows(b, c, order: int = DEFAULT_ORDER) -> list[list]:
    """Rows of the family recovered from 1/(1 + ct + xt(bt - 1)).

    The generating function is expanded as a series in t whose scalars are
    polynomials in x; coefficient n is P_n(x).
    """
    b, c = coerce_scalar(b), coerce_scalar(c)
    one = XPoly([b ** 0])
    den = TruncatedSeries(
        [one, XPoly([c, -(b ** 0)]), XPoly([zero_like(b), b])], order
    )
    expansion = TruncatedSeries([one], order) / den
    return [expansion.coeffs[n].padded(n + 1) for n in range(order + 1)]
