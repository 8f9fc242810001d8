"""Continued fractions attached to the moment sequences.

Three shapes, all in the minus convention:

    S:  1/(1 - a1 t/(1 - a2 t/(1 - ...)))
    J:  1/(1 - d0 t - l1 t^2/(1 - d1 t - l2 t^2/(1 - ...)))
    T:  1/(1 - c0 t - b1 t/(1 - c1 t - b2 t/(1 - ...)))

Descriptors store a finite prefix of levels; expansion truncates the fraction
by replacing the first unstored level with 1, which is exact to the order the
adequacy rule guarantees (level k first touches t^k for S/T shapes and t^(2k)
for the J shape).

The moment series mu(t) is expanded by the S-fraction with coefficients
(c, b, b+c, b, b+c, ...) and by the J-fraction with diagonal (c, 2b+c,
2b+c, ...) over couplings (bc, b(b+c), b(b+c), ...).  The T-fraction with
constant coefficients expands the shifted moments mu~(t), where
mu(t) = 1 + c t mu~(t).  The J-fraction is also recoverable from raw moments
through ratios of Hankel determinants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinat import binomial, catalan
from .hankel_toeplitz import determinant
from .report import Check, ScenarioReport, check_equal
from .scalars import coerce_scalar, scalar_inv, scalar_is_zero, zero_like
from .series import DEFAULT_ORDER, TruncatedSeries


@dataclass(frozen=True)
class SFraction:
    alphas: tuple

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(coerce_scalar(v) for v in self.alphas))

    def levels_for(self, order: int) -> int:
        if len(self.alphas) < order:
            raise ValueError(f"{len(self.alphas)} levels cannot reach order {order}")
        return order


@dataclass(frozen=True)
class JFraction:
    diag: tuple
    sub: tuple

    def __post_init__(self):
        object.__setattr__(self, "diag", tuple(coerce_scalar(v) for v in self.diag))
        object.__setattr__(self, "sub", tuple(coerce_scalar(v) for v in self.sub))

    def levels_for(self, order: int) -> int:
        if 2 * len(self.diag) < order or 2 * len(self.sub) + 1 < order:
            raise ValueError(
                f"{len(self.diag)} diagonal / {len(self.sub)} coupling levels "
                f"cannot reach order {order}"
            )
        return min(len(self.diag), (order + 2) // 2)


@dataclass(frozen=True)
class TFraction:
    diag: tuple
    num: tuple

    def __post_init__(self):
        object.__setattr__(self, "diag", tuple(coerce_scalar(v) for v in self.diag))
        object.__setattr__(self, "num", tuple(coerce_scalar(v) for v in self.num))

    def levels_for(self, order: int) -> int:
        if len(self.diag) < order or len(self.num) < order - 1:
            raise ValueError(
                f"{len(self.diag)} diagonal / {len(self.num)} numerator levels "
                f"cannot reach order {order}"
            )
        return order


def cf_expand(cf, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Truncated series of the fraction, exact through the requested order."""
    levels = cf.levels_for(order)
    one = TruncatedSeries.constant(1, order)
    t = TruncatedSeries.identity(order)
    value = one
    if isinstance(cf, SFraction):
        for a in reversed(cf.alphas[:levels]):
            value = one / (one - a * t * value)
        return value
    if isinstance(cf, JFraction):
        t2 = t * t
        for k in reversed(range(levels)):
            body = one - cf.diag[k] * t
            if k < len(cf.sub):
                body = body - cf.sub[k] * t2 * value
            value = one / body
        return value
    if isinstance(cf, TFraction):
        for k in reversed(range(levels)):
            body = one - cf.diag[k] * t
            if k < len(cf.num):
                body = body - cf.num[k] * t * value
            value = one / body
        return value
    raise TypeError(f"not a continued fraction descriptor: {type(cf).__name__}")


def moment_sfraction(b, c, order: int = DEFAULT_ORDER) -> SFraction:
    """Coefficients (c, b, b+c, b, b+c, ...), enough levels for `order`."""
    b, c = coerce_scalar(b), coerce_scalar(c)
    alphas = [c]
    while len(alphas) < order:
        alphas.append(b if len(alphas) % 2 == 1 else b + c)
    return SFraction(tuple(alphas[:max(order, 1)]))


def moment_jfraction(b, c, order: int = DEFAULT_ORDER) -> JFraction:
    """Diagonal (c, 2b+c, ...), couplings (bc, b(b+c), ...)."""
    b, c = coerce_scalar(b), coerce_scalar(c)
    depth = order // 2 + 1
    diag = (c,) + (2 * b + c,) * (depth - 1)
    sub = (b * c,) + (b * (b + c),) * (depth - 1)
    return JFraction(diag, sub)


def constant_tfraction(b, c, order: int = DEFAULT_ORDER) -> TFraction:
    """The T-shape with constant entries; expands the shifted moments."""
    b, c = coerce_scalar(b), coerce_scalar(c)
    return TFraction((c,) * max(order, 1), (b,) * max(order, 1))


def catalan_sfraction(b, order: int = DEFAULT_ORDER) -> SFraction:
    """All coefficients b; expands sum b^n C_n t^n."""
    b = coerce_scalar(b)
    return SFraction((b,) * max(order, 1))


def tfraction_closed_form(b, c, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Shifted moments mu~(t) = (1 - ct - sqrt(1 - 2(2b+c)t + c^2 t^2))/(2bt)."""
    b, c = coerce_scalar(b), coerce_scalar(c)
    root = TruncatedSeries([1, -2 * (2 * b + c), c * c], order + 1).sqrt()
    num = TruncatedSeries([1, -c], order + 1) - root
    return num.shift_down(1) / (2 * b)


def tfraction_via_transform(b, c, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """mu~(t) by pushing the Catalan series through (1/(1-ct), t/(1-ct)^2)."""
    from .series import catalan_series

    b, c = coerce_scalar(b), coerce_scalar(c)
    cat = catalan_series(order)
    inner = TruncatedSeries.ratio([0, b], [1, -2 * c, c * c], order)
    prefix = TruncatedSeries.ratio([1], [1, -c], order)
    return prefix * cat.compose(inner)


def shifted_moment_sum(b, c, n: int):
    """mu~_n = sum_k binom(n+k, 2k) c^(n-k) b^k C_k."""
    b, c = coerce_scalar(b), coerce_scalar(c)
    total = zero_like(b)
    for k in range(n + 1):
        w = binomial(n + k, 2 * k) * catalan(k)
        if w:
            total = total + w * c ** (n - k) * b ** k
    return total


def moment_sum(b, c, n: int):
    """mu_n = 0^n + sum_{k<n} binom(n+k-1, 2k) c^(n-k) b^k C_k."""
    b, c = coerce_scalar(b), coerce_scalar(c)
    total = coerce_scalar(1) if n == 0 else zero_like(b)
    for k in range(n):
        w = binomial(n + k - 1, 2 * k) * catalan(k)
        if w:
            total = total + w * c ** (n - k) * b ** k
    return total


def jfraction_from_moments(mu, depth: int | None = None) -> JFraction:
    """Recover the J-fraction from raw moments via Hankel determinant ratios.

    With h_n = det(mu_{i+j})_{0..n} and s_n the same determinant with its
    last column advanced one step, the diagonal entries are consecutive
    differences of s_n/h_n and the couplings are h_n h_{n-2} / h_{n-1}^2.
    """
    values = [coerce_scalar(v) for v in mu]
    if depth is None:
        depth = (len(values) - 2) // 2
    if len(values) < 2 * depth + 2:
        raise ValueError(f"need {2 * depth + 2} moments for depth {depth}")
    h = []
    s = []
    for n in range(depth + 1):
        h.append(determinant(
            [[values[i + j] for j in range(n + 1)] for i in range(n + 1)]
        ))
        if scalar_is_zero(h[n]):
            raise ZeroDivisionError(f"vanishing Hankel determinant at depth {n}")
        s.append(determinant(
            [[values[i + j] if j < n else values[i + n + 1] for j in range(n + 1)]
             for i in range(n + 1)]
        ))
    ratios = [s[n] * scalar_inv(h[n]) for n in range(depth + 1)]
    diag = [ratios[0]]
    diag.extend(ratios[n] - ratios[n - 1] for n in range(1, depth + 1))
    sub = [h[1] * scalar_inv(h[0] * h[0])]
    sub.extend(
        h[n] * h[n - 2] * scalar_inv(h[n - 1] * h[n - 1]) for n in range(2, depth + 1)
    )
    return JFraction(tuple(diag), tuple(sub))


def hankel_from_jfraction(sub, n_max: int) -> list:
    """h_n = prod_k lambda_k^(n+1-k); inverse direction of the extraction."""
    subs = [coerce_scalar(v) for v in sub]
    if len(subs) < n_max:
        raise ValueError(f"need {n_max} couplings")
    out = [coerce_scalar(1)]
    for n in range(1, n_max + 1):
        acc = coerce_scalar(1)
        for k in range(1, n + 1):
            acc = acc * subs[k - 1] ** (n + 1 - k)
        out.append(acc)
    return out


def verify_uv_equality(c, order: int = 12) -> ScenarioReport:
    """The constant T-fraction in c equals the S-fraction (c+1, 1, c+1, ...)."""
    c = coerce_scalar(c)
    u = cf_expand(TFraction((c,) * order, (coerce_scalar(1),) * order), order)
    alphas = tuple(c + 1 if i % 2 == 0 else coerce_scalar(1) for i in range(order))
    v = cf_expand(SFraction(alphas), order)
    checks = [Check("t-shape u equals s-shape v", u == v,
                    "" if u == v else "series differ")]
    closed = tfraction_closed_form(1, c, order)
    checks.append(Check("u equals shifted-moment closed form at b=1", u == closed))
    return ScenarioReport("uv-equality", checks)
