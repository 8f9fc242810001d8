"""Truncated formal power series over exact scalars.

A series is an eager coefficient list of length order + 1.  Binary operations
truncate to the smaller operand order, so every result is exact through the
order it reports.  Composition requires the inner series to vanish at 0;
division requires an invertible constant term; reversion solves f(g(t)) = t
order by order; square root assumes constant term 1 and a ring containing 1/2.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import coerce_scalar, scalar_inv, scalar_is_zero, zero_like

DEFAULT_ORDER = 16


class TruncatedSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs, order: int | None = None):
        cs = [coerce_scalar(v) for v in coeffs]
        if not cs:
            raise ValueError("a series needs at least the constant coefficient")
        if order is not None:
            if order < 0:
                raise ValueError("order must be >= 0")
            if len(cs) > order + 1:
                cs = cs[: order + 1]
            else:
                pad = zero_like(cs[0])
                cs.extend(pad for _ in range(order + 1 - len(cs)))
        self.coeffs = tuple(cs)

    # -- constructors --------------------------------------------------------

    @classmethod
    def constant(cls, value, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls([value], order)

    @classmethod
    def monomial(cls, k: int, coeff=1, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        if k > order:
            raise ValueError("monomial degree beyond truncation order")
        coeffs = [0] * (order + 1)
        coeffs[k] = coeff
        return cls(coeffs, order)

    @classmethod
    def identity(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        """The series t."""
        return cls.monomial(1, 1, order)

    @classmethod
    def ratio(cls, num, den, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        """Series of num(t)/den(t) for polynomial coefficient lists."""
        return cls(num, order) / cls(den, order)

    # -- structure ----------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int):
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def __getitem__(self, n: int):
        return self.coefficient(n)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: order + 1])

    def valuation(self) -> int | None:
        for n, v in enumerate(self.coeffs):
            if not scalar_is_zero(v):
                return n
        return None

    # -- ring operations -----------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, TruncatedSeries):
            return other
        try:
            return TruncatedSeries([coerce_scalar(other)])
        except TypeError:
            return None

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            n = min(self.order, other.order)
            return TruncatedSeries(
                [self.coeffs[k] + other.coeffs[k] for k in range(n + 1)]
            )
        try:
            value = coerce_scalar(other)
        except TypeError:
            return NotImplemented
        return TruncatedSeries((self.coeffs[0] + value,) + self.coeffs[1:])

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-v for v in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, TruncatedSeries):
            return self + (-other)
        try:
            value = coerce_scalar(other)
        except TypeError:
            return NotImplemented
        return self + (-value)

    def __rsub__(self, other):
        if isinstance(other, TruncatedSeries):
            return other + (-self)
        try:
            value = coerce_scalar(other)
        except TypeError:
            return NotImplemented
        return (-self) + value

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            try:
                value = coerce_scalar(other)
            except TypeError:
                return NotImplemented
            return TruncatedSeries([v * value for v in self.coeffs])
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for m in range(n + 1):
            acc = a[0] * b[m]
            for k in range(1, m + 1):
                acc = acc + a[k] * b[m - k]
            out.append(acc)
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return _series_div(self, other)
        try:
            value = coerce_scalar(other)
        except TypeError:
            return NotImplemented
        return self * scalar_inv(value)

    def __rtruediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return _series_div(other, self)
        try:
            value = coerce_scalar(other)
        except TypeError:
            return NotImplemented
        return _series_div(TruncatedSeries([value], self.order), self)

    def reciprocal(self) -> "TruncatedSeries":
        return _series_div(TruncatedSeries([1], self.order), self)

    def __pow__(self, exp: int):
        if exp < 0:
            return self.reciprocal() ** (-exp)
        result = TruncatedSeries([1], self.order)
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base
            exp >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return all(self.coeffs[k] == other.coeffs[k] for k in range(n + 1))

    __hash__ = None

    # -- shifts --------------------------------------------------------------

    def shift_up(self, k: int) -> "TruncatedSeries":
        """Multiply by t^k; all new coefficients are known, so order grows."""
        if k == 0:
            return self
        pad = zero_like(self.coeffs[0])
        return TruncatedSeries([pad] * k + list(self.coeffs))

    def shift_down(self, k: int) -> "TruncatedSeries":
        """Divide by t^k; requires the first k coefficients to vanish."""
        if k == 0:
            return self
        if k > self.order:
            raise ValueError("shift below constant term")
        if any(not scalar_is_zero(v) for v in self.coeffs[:k]):
            raise ValueError("series not divisible by t^k")
        return TruncatedSeries(self.coeffs[k:])

    # -- composition, reversion, square root ---------------------------------

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """self(inner(t)); inner must have zero constant term."""
        if not scalar_is_zero(inner.coeffs[0]):
            raise ValueError("composition requires inner series with f(0) = 0")
        n = min(self.order, inner.order)
        inner = inner.truncate(n)
        result = TruncatedSeries([self.coeffs[n]], n)
        for k in range(n - 1, -1, -1):
            result = result * inner + self.coeffs[k]
        return result

    def reversion(self) -> "TruncatedSeries":
        """Compositional inverse g with self(g(t)) = t, solved order by order."""
        if not scalar_is_zero(self.coeffs[0]):
            raise ValueError("reversion requires f(0) = 0")
        if scalar_is_zero(self.coeffs[1]):
            raise ValueError("reversion requires an invertible linear coefficient")
        n = self.order
        inv1 = scalar_inv(self.coeffs[1])
        zero = zero_like(self.coeffs[0])
        g = [zero, inv1 * 1] + [zero] * (n - 1)
        for m in range(2, n + 1):
            h = self.truncate(m).compose(TruncatedSeries(g[: m + 1]))
            g[m] = -h.coeffs[m] * inv1
        return TruncatedSeries(g)

    def sqrt(self) -> "TruncatedSeries":
        """Square root of a series with constant term 1."""
        if not self.coeffs[0] == 1:
            raise ValueError("sqrt requires constant term 1")
        half = Fraction(1, 2)
        out = [self.coeffs[0]]
        for m in range(1, self.order + 1):
            acc = self.coeffs[m]
            for k in range(1, m):
                acc = acc - out[k] * out[m - k]
            out.append(acc * half)
        return TruncatedSeries(out)

    # -- comparison helpers ---------------------------------------------------

    def agrees_with(self, other: "TruncatedSeries", through: int | None = None) -> bool:
        n = min(self.order, other.order)
        if through is not None:
            if through > n:
                raise ValueError("comparison order beyond both truncations")
            n = through
        return all(self.coeffs[k] == other.coeffs[k] for k in range(n + 1))

    def __str__(self):
        return " + ".join(f"({v})*t^{n}" for n, v in enumerate(self.coeffs))

    def __repr__(self):
        return f"TruncatedSeries(order={self.order}, [{', '.join(str(v) for v in self.coeffs[:5])}...])"


def _series_div(num: TruncatedSeries, den: TruncatedSeries) -> TruncatedSeries:
    if scalar_is_zero(den.coeffs[0]):
        raise ZeroDivisionError("series division needs an invertible constant term")
    n = min(num.order, den.order)
    inv0 = scalar_inv(den.coeffs[0])
    out = [num.coeffs[0] * inv0]
    for m in range(1, n + 1):
        acc = num.coeffs[m]
        for k in range(1, m + 1):
            acc = acc - den.coeffs[k] * out[m - k]
        out.append(acc * inv0)
    return TruncatedSeries(out)


def catalan_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Generating function of the Catalan numbers, (1 - sqrt(1-4t))/(2t)."""
    inner = TruncatedSeries([1, -4], order + 1)
    num = 1 - inner.sqrt()
    return num.shift_down(1) * Fraction(1, 2)
