"""The polynomial family, its coefficient array, and the moment routes."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from riordanlbp.lbp import (
    MOMENT_ROUTES,
    LBPFamily,
    MomentSequence,
    bivariate_gf_rows,
    coefficient_array,
    coefficient_matrix,
    entry_closed_form,
    inverse_entry_lagrange,
    moment_gf,
    moment_gf_catalan_form,
    moment_matrix,
    moments,
    rows_by_recurrence,
)
from riordanlbp.riordan import has_column_shift, production_matrix
from riordanlbp.scalars import PARAM_B, PARAM_C, coerce_scalar, scalar_is_zero

# First moments of the symbolic constant-coefficient family, normalized to
# start at 1.  Frozen from the inverse of the coefficient array.
SYMBOLIC_MOMENT_FACTORS = [
    lambda b, c: b**0,
    lambda b, c: c,
    lambda b, c: c * (b + c),
    lambda b, c: c * (b + c) * (2 * b + c),
    lambda b, c: c * (b + c) * (5 * b * b + 5 * b * c + c * c),
    lambda b, c: c * (b + c) * (2 * b + c) * (7 * b * b + 7 * b * c + c * c),
]

nonzero_fractions = st.fractions(
    min_value=-4, max_value=4, max_denominator=3
).filter(lambda q: q != 0)

param_pairs = st.tuples(nonzero_fractions, nonzero_fractions).filter(
    lambda bc: bc[0] + bc[1] != 0
)


def unit_family(order=10):
    return LBPFamily.constant(1, 1, order=order)


def symbolic_family(order=8):
    return LBPFamily.constant(PARAM_B, PARAM_C, order=order)


class TestFamilyConstruction:
    def test_zero_coefficients_rejected(self):
        with pytest.raises(ValueError):
            LBPFamily.constant(0, 1)
        with pytest.raises(ValueError):
            LBPFamily.periodic([1, 2], [1, 0])

    def test_periodic_cycling(self):
        fam = LBPFamily.periodic([1, 2], [5])
        assert [fam.b_at(n) for n in range(4)] == [
            coerce_scalar(v) for v in (1, 2, 1, 2)
        ]
        assert fam.c_at(3) == coerce_scalar(5)

    def test_constant_accessors(self):
        fam = LBPFamily.periodic([3, 3], [4])
        assert fam.is_constant
        assert fam.b == coerce_scalar(3)
        fam2 = LBPFamily.periodic([1, 2], [1])
        assert not fam2.is_constant
        with pytest.raises(ValueError):
            fam2.b


class TestRecurrenceRows:
    def test_unit_family_rows(self):
        rows = rows_by_recurrence(unit_family(), 4)
        assert rows == [
            [coerce_scalar(v) for v in row]
            for row in (
                [1],
                [-1, 1],
                [1, -3, 1],
                [-1, 5, -5, 1],
                [1, -7, 13, -7, 1],
            )
        ]

    def test_rows_match_closed_form_symbolically(self):
        b, c = PARAM_B, PARAM_C
        rows = rows_by_recurrence(symbolic_family(), 5)
        for n, row in enumerate(rows):
            for k, got in enumerate(row):
                assert scalar_is_zero(got - entry_closed_form(n, k, b, c)), (n, k)

    def test_coefficient_array_agrees_with_recurrence(self):
        fam = LBPFamily.constant(Fraction(3, 2), Fraction(-1, 3), order=8)
        rows = rows_by_recurrence(fam, 6)
        arr = coefficient_array(fam)
        for n, row in enumerate(rows):
            for k, got in enumerate(row):
                assert got == arr.entry(n, k), (n, k)

    def test_coefficient_array_requires_constant_family(self):
        with pytest.raises(ValueError):
            coefficient_array(LBPFamily.periodic([1, 2], [1]))


class TestMoments:
    def test_symbolic_prefix(self):
        mu = moments(symbolic_family(6), n_max=5)
        for n, factor in enumerate(SYMBOLIC_MOMENT_FACTORS):
            assert scalar_is_zero(mu[n] - factor(PARAM_B, PARAM_C)), n

    def test_unit_family_is_shifted_schroeder(self):
        mu = moments(unit_family(), n_max=9)
        assert list(mu) == [
            coerce_scalar(v)
            for v in (1, 1, 2, 6, 22, 90, 394, 1806, 8558, 41586)
        ]

    @pytest.mark.parametrize("route", MOMENT_ROUTES)
    def test_all_routes_agree_symbolically(self, route):
        fam = symbolic_family(8)
        baseline = moments(fam, n_max=8)
        got = moments(fam, route=route, n_max=8)
        assert got.route == route
        for n in range(9):
            assert scalar_is_zero(got[n] - baseline[n]), (route, n)

    @given(param_pairs)
    @settings(max_examples=12, deadline=None)
    def test_all_routes_agree_numerically(self, bc):
        bv, cv = bc
        fam = LBPFamily.constant(bv, cv, order=7)
        baseline = moments(fam, n_max=7)
        for route in MOMENT_ROUTES[1:]:
            got = moments(fam, route=route, n_max=7)
            assert list(got) == list(baseline), route

    def test_unknown_route_rejected(self):
        with pytest.raises(ValueError):
            moments(unit_family(), route="divination")

    def test_closed_form_routes_need_constant_coefficients(self):
        fam = LBPFamily.periodic([1, 2], [1], order=6)
        moments(fam, n_max=6)  # matrix route is fine
        with pytest.raises(ValueError):
            moments(fam, route="catalan_sum", n_max=6)

    def test_moment_sequence_requires_unit_start(self):
        with pytest.raises(ValueError):
            MomentSequence((coerce_scalar(2),), "matrix_inverse")


class TestClosedFormEntries:
    def test_inverse_entry_against_matrix_inverse(self):
        fam = unit_family()
        inv = coefficient_matrix(fam, 7).inverse()
        for n in range(7):
            for k in range(n + 1):
                assert inv.entry(n, k) == inverse_entry_lagrange(n, k, 1, 1), (n, k)

    def test_inverse_entry_against_matrix_inverse_symbolic(self):
        inv = coefficient_matrix(symbolic_family(5), 5).inverse()
        for n in range(5):
            for k in range(n + 1):
                diff = inv.entry(n, k) - inverse_entry_lagrange(
                    n, k, PARAM_B, PARAM_C
                )
                assert scalar_is_zero(diff), (n, k)

    def test_specific_inverse_entry(self):
        assert inverse_entry_lagrange(3, 1, 1, 1) == coerce_scalar(10)


class TestGeneratingFunctions:
    def test_sqrt_and_catalan_forms_agree(self):
        a = moment_gf(PARAM_B, PARAM_C, 8)
        b = moment_gf_catalan_form(PARAM_B, PARAM_C, 8)
        assert a == b

    def test_gf_matches_moments(self):
        mu = moments(symbolic_family(7), n_max=7)
        gf = moment_gf(PARAM_B, PARAM_C, 7)
        for n in range(8):
            assert scalar_is_zero(gf[n] - mu[n]), n

    def test_bivariate_rows_match_recurrence(self):
        rows = bivariate_gf_rows(PARAM_B, PARAM_C, 6)
        expected = rows_by_recurrence(symbolic_family(6), 6)
        assert len(rows) == 7
        for n in range(7):
            for k in range(n + 1):
                assert scalar_is_zero(rows[n][k] - expected[n][k]), (n, k)


class TestProductionStructure:
    def test_moment_matrix_production_shifts(self):
        fam = symbolic_family(8)
        p = production_matrix(moment_matrix(fam, 8))
        assert has_column_shift(p)

    def test_coefficient_array_production_shifts(self):
        fam = symbolic_family(8)
        p = production_matrix(coefficient_matrix(fam, 8))
        assert has_column_shift(p)

    def test_moment_production_entries(self):
        # first column b^i c, interior columns b^(i-k) (b+c), superdiagonal 1
        b, c = PARAM_B, PARAM_C
        p = production_matrix(moment_matrix(symbolic_family(7), 7))
        for i, row in enumerate(p):
            for k, got in enumerate(row):
                if k == 0:
                    expected = b**i * c
                elif k <= i:
                    expected = b ** (i - k) * (b + c)
                elif k == i + 1:
                    expected = b**0
                else:
                    expected = coerce_scalar(0)
                assert scalar_is_zero(got - expected), (i, k)
