from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from derange.exact import factorial
from derange.series import (
    Family,
    FamilySpec,
    InvalidFamilyParams,
    OrderMismatch,
    TruncatedSeries,
    egf_values,
    geom_pow,
    series_exp,
    series_mul,
)


def S(*coeffs):
    return TruncatedSeries(tuple(F(c) for c in coeffs))


class TestSeriesMul:
    def test_difference_of_squares(self):
        assert series_mul(S(1, 1, 0), S(1, -1, 0)).coeffs == (1, 0, -1)

    def test_zero_absorbs(self):
        a = S(3, F(1, 2), -2, 7)
        assert series_mul(a, S(0, 0, 0, 0)).coeffs == (0, 0, 0, 0)

    def test_exp_times_exp_minus(self):
        prod = series_mul(series_exp(1, 6), series_exp(-1, 6))
        assert prod.coeffs == (1, 0, 0, 0, 0, 0, 0)

    def test_order_mismatch(self):
        with pytest.raises(OrderMismatch):
            series_mul(S(1, 2), S(1, 2, 3))


def test_series_exp():
    assert series_exp(0, 3).coeffs == (1, 0, 0, 0)
    assert series_exp(-1, 4).coeffs == (1, -1, F(1, 2), F(-1, 6), F(1, 24))
    assert series_exp(F(1, 2), 2).coeffs == (1, F(1, 2), F(1, 8))


def test_geom_pow():
    assert geom_pow(F(7, 3), 0, 4).coeffs == (1, 0, 0, 0, 0)
    assert geom_pow(1, 1, 3).coeffs == (1, 1, 1, 1)
    assert geom_pow(2, 2, 2).coeffs == (1, 4, 12)


class TestEgfValues:
    def test_classic_paper_values(self):
        assert egf_values(FamilySpec(Family.CLASSIC), 5) == [1, 0, 1, 2, 9]

    def test_generalized_at_minus_one_is_signed_classic(self):
        vals = egf_values(FamilySpec(Family.GENERALIZED, 1, F(-1)), 5)
        assert vals == [1, 0, 1, -2, 9]

    def test_cyclic_r2(self):
        assert egf_values(FamilySpec(Family.CYCLIC, 2), 4) == [1, 1, 5, 29]

    def test_order_r_numbers_r2(self):
        assert egf_values(FamilySpec(Family.ORDER_R_NUMBERS, 2), 4) == [1, 1, 3, 11]

    def test_count_must_be_positive(self):
        with pytest.raises(ValueError):
            egf_values(FamilySpec(Family.CLASSIC), 0)

    def test_r_derangement_needs_positive_r(self):
        with pytest.raises(InvalidFamilyParams):
            FamilySpec(Family.R_DERANGEMENT_NUMBERS, 0)

    def test_poly_family_needs_x(self):
        with pytest.raises(InvalidFamilyParams):
            FamilySpec(Family.GENERALIZED, 2)

    def test_r_derangement_leading_zeros(self):
        vals = egf_values(FamilySpec(Family.R_DERANGEMENT_NUMBERS, 3), 8)
        assert vals[:3] == [0, 0, 0]
        assert vals[3] != 0

    def test_r_derangement_poly_at_minus_one_matches_numbers(self):
        for r in (1, 2, 3):
            nums = egf_values(FamilySpec(Family.R_DERANGEMENT_NUMBERS, r), 10)
            poly = egf_values(FamilySpec(Family.R_DERANGEMENT_POLY, r, F(-1)), 10)
            assert nums == poly

    def test_integrality_of_number_families(self):
        for spec in (FamilySpec(Family.CLASSIC),
                     FamilySpec(Family.ORDER_R_NUMBERS, 3),
                     FamilySpec(Family.CYCLIC, 4),
                     FamilySpec(Family.R_DERANGEMENT_NUMBERS, 2)):
            assert all(v.denominator == 1 for v in egf_values(spec, 15))


XS = [F(-1), F(1), F(2), F(1, 2), F(-3, 5)]


def test_reflection_through_egf():
    # d_n^{(r)}(x) = x^n * D_n^{(r)}(1/x) at the value level
    for r in range(4):
        for x in XS:
            d_vals = egf_values(FamilySpec(Family.ORDER_R_POLY, r, x), 12)
            D_vals = egf_values(FamilySpec(Family.GENERALIZED, r, 1 / x), 12)
            for n in range(12):
                assert d_vals[n] == x ** n * D_vals[n], (n, r, x)


def test_specialization_chain():
    classic = egf_values(FamilySpec(Family.CLASSIC), 10)
    assert classic == egf_values(FamilySpec(Family.CYCLIC, 1), 10)
    for r in range(4):
        order_nums = egf_values(FamilySpec(Family.ORDER_R_NUMBERS, r), 10)
        order_poly = egf_values(FamilySpec(Family.ORDER_R_POLY, r, F(-1)), 10)
        assert order_nums == order_poly
    for rp in (1, 2, 3):
        cyc = egf_values(FamilySpec(Family.CYCLIC, rp), 10)
        gen = egf_values(FamilySpec(Family.GENERALIZED, 1, F(-rp)), 10)
        assert cyc == [(-1) ** n * gen[n] for n in range(10)]


@given(st.integers(0, 10), st.integers(0, 4),
       st.fractions(max_denominator=6, min_value=-3, max_value=3))
def test_generalized_value_is_polynomial_in_x(n, r, x):
    # EGF extraction agrees with the explicit binomial-rising sum
    from derange.exact import binomial, rising_factorial
    expected = sum(binomial(n, k) * rising_factorial(r, k) * x ** k
                   for k in range(n + 1))
    vals = egf_values(FamilySpec(Family.GENERALIZED, r, x), n + 1)
    assert vals[n] == expected
