"""Companion orthogonal-polynomial families attached to an LBP family.

All three share the quadratic denominator D(t) = 1 + (2b+c)t + b(b+c)t^2
and the three-term recurrence

    y_n(x) = (x - (2b+c)) y_{n-1}(x) - b(b+c) y_{n-2}(x),

differing only in their numerators and hence in their low-order rows:

    kind "q"      ((1+bt)^2/D, t/D)   Q_1 = x - c         recurrence from n=3
    kind "qtilde" ((1+bt)/D,   t/D)   Q~_1 = x - (b+c)    recurrence from n=2
    kind "qhat"   (1/D,        t/D)   Q^_1 = x - (2b+c)   recurrence from n=2

The "q" rows 0..2 are fixed by the array itself; the recurrence only takes
over afterwards (it misses Q_2 by exactly b^2).  The moment sequence of the
LBP family is the first column of the "q" array's inverse, and the shifted
moments (mu_{n+1}/c) form the first column of the "qtilde" array's inverse.

The factorization suite checks how the LBP coefficient array L splits off
each companion array through a binomial-type prefactor, together with the
equivalent polynomial identities mixing P_n from Q_k with binomial weights.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinat import binomial
from .lbp import LBPFamily, rows_by_recurrence
from .report import Check, ScenarioReport
from .riordan import RiordanArray, binomial_array
from .scalars import XPoly, coerce_scalar
from .series import DEFAULT_ORDER, TruncatedSeries

ORTHO_KINDS = ("q", "qtilde", "qhat")

_NUMERATORS = {
    "q": lambda b: [1, 2 * b, b * b],
    "qtilde": lambda b: [1, b],
    "qhat": lambda b: [1],
}


def _check_kind(kind: str) -> None:
    if kind not in ORTHO_KINDS:
        raise ValueError(f"unknown kind {kind!r}; choose from {ORTHO_KINDS}")


def ortho_array(kind: str, b, c, order: int = DEFAULT_ORDER) -> RiordanArray:
    _check_kind(kind)
    b, c = coerce_scalar(b), coerce_scalar(c)
    den = [1, 2 * b + c, b * (b + c)]
    return RiordanArray(
        TruncatedSeries.ratio(_NUMERATORS[kind](b), den, order),
        TruncatedSeries.ratio([0, 1], den, order),
    )


def ortho_rows_by_recurrence(kind: str, b, c, n_max: int) -> list[list]:
    _check_kind(kind)
    b, c = coerce_scalar(b), coerce_scalar(c)
    one = b ** 0
    first = {"q": c, "qtilde": b + c, "qhat": 2 * b + c}[kind]
    rows = [XPoly([one]), XPoly([-first, one])]
    if kind == "q":
        rows.append(XPoly([c * (b + c), -2 * (b + c), one]))
    shift, drop = 2 * b + c, b * (b + c)
    for n in range(len(rows), n_max + 1):
        rows.append(rows[n - 1].shift(1) - shift * rows[n - 1] - drop * rows[n - 2])
    return [rows[n].padded(n + 1) for n in range(n_max + 1)]


@dataclass(frozen=True)
class OrthoFamily:
    kind: str
    b: object
    c: object
    order: int = DEFAULT_ORDER

    def __post_init__(self):
        _check_kind(self.kind)
        object.__setattr__(self, "b", coerce_scalar(self.b))
        object.__setattr__(self, "c", coerce_scalar(self.c))

    @property
    def array(self) -> RiordanArray:
        return ortho_array(self.kind, self.b, self.c, self.order)

    def rows(self, n_max: int | None = None) -> list[list]:
        if n_max is None:
            n_max = self.order
        return ortho_rows_by_recurrence(self.kind, self.b, self.c, n_max)


def ortho_inverse_f_closed_form(b, c, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Second component of the "q" array's inverse:

        (1 - (2b+c)t - sqrt(1 - 2(2b+c)t + c^2 t^2)) / (2b(b+c)t).
    """
    b, c = coerce_scalar(b), coerce_scalar(c)
    root = TruncatedSeries([1, -2 * (2 * b + c), c * c], order + 1).sqrt()
    num = TruncatedSeries([1, -(2 * b + c)], order + 1) - root
    return num.shift_down(1) / (2 * b * (b + c))


def _lbp_array(b, c, order: int) -> RiordanArray:
    return RiordanArray(
        TruncatedSeries.ratio([1], [1, c], order),
        TruncatedSeries.ratio([0, 1, -b], [1, c], order),
    )


def verify_factorizations(b, c, order: int = 8) -> ScenarioReport:
    """Split L off each companion array and cross-check the row identities."""
    b, c = coerce_scalar(b), coerce_scalar(c)
    lbp = _lbp_array(b, c, order)
    q = ortho_array("q", b, c, order)
    qtilde = ortho_array("qtilde", b, c, order)
    qhat = ortho_array("qhat", b, c, order)

    one = TruncatedSeries.constant(1, order)
    t_over = TruncatedSeries.ratio([0, 1], [1, -b], order)
    checks = [
        Check("lbp = (1, t/(1-bt)) * q-array",
              RiordanArray(one, t_over) * q == lbp),
        Check("lbp = binomial(b) * qtilde-array",
              binomial_array(b, order) * qtilde == lbp),
        Check("q-array = (1+bt, t) * qtilde-array",
              RiordanArray(TruncatedSeries([1, b], order),
                           TruncatedSeries.identity(order)) * qtilde == q),
        Check("lbp = (1/(1-bt)^2, t/(1-bt)) * qhat-array",
              RiordanArray(TruncatedSeries.ratio([1], [1, -2 * b, b * b], order),
                           t_over) * qhat == lbp),
    ]

    n_max = min(order, 6)
    p_rows = [XPoly(row) for row in rows_by_recurrence(LBPFamily.constant(b, c), n_max)]
    for name, rows, weight in (
        ("p_n = sum binom(n-1, n-k) b^(n-k) q_k",
         ortho_rows_by_recurrence("q", b, c, n_max),
         lambda n, k: binomial(n - 1, n - k)),
        ("p_n = sum binom(n, k) b^(n-k) qtilde_k",
         ortho_rows_by_recurrence("qtilde", b, c, n_max),
         lambda n, k: binomial(n, k)),
        ("p_n = sum binom(n+1, k+1) b^(n-k) qhat_k",
         ortho_rows_by_recurrence("qhat", b, c, n_max),
         lambda n, k: binomial(n + 1, k + 1)),
    ):
        ok, detail = True, ""
        for n in range(n_max + 1):
            mixed = XPoly([])
            for k in range(n + 1):
                w = weight(n, k)
                if w:
                    mixed = mixed + w * b ** (n - k) * XPoly(rows[k])
            if mixed != p_rows[n]:
                ok, detail = False, f"row {n}"
                break
        checks.append(Check(name, ok, detail))

    checks.append(Check(
        "q-array inverse second component matches closed form",
        q.inverse().f == ortho_inverse_f_closed_form(b, c, order),
    ))
    return ScenarioReport("factorizations", checks)
