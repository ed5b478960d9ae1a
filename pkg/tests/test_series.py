from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from eulerian.errors import DegenerateParameter
from eulerian.polynomials import eulerian_poly, evaluate
from eulerian.series import (
    PowerSeries,
    egf_from_polynomials,
    egf_pde_check,
    egf_pde_residual,
    egf_series,
    exp_linear,
)

TS = [Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(2), Fraction(7, 2)]
coeff = st.fractions(min_value=-4, max_value=4, max_denominator=5)


@given(st.lists(coeff, min_size=5, max_size=5), st.lists(coeff, min_size=5, max_size=5).filter(lambda c: c[0] != 0))
def test_quotient_inverts_product(a, b):
    a, b = PowerSeries(a), PowerSeries(b)
    assert (a / b) * b == a
    assert (a * b) / b == a


@given(coeff, coeff)
def test_exp_addition_law(c, d):
    assert exp_linear(c, 6) * exp_linear(d, 6) == exp_linear(c + d, 6)


def test_quotient_zero_constant():
    with pytest.raises(DegenerateParameter):
        PowerSeries([1, 1]) / PowerSeries([0, 1])


def test_order_mismatch():
    with pytest.raises(ValueError):
        PowerSeries([1, 2]) + PowerSeries([1, 2, 3])


def test_b_at_zero_is_exp():
    assert egf_series("B", 0, 9).coeffs == tuple(Fraction(1, factorial(n)) for n in range(10))


@pytest.mark.parametrize("family, t, order", [("D", Fraction(1, 2), 6), ("A", 2, 8)])
def test_examples(family, t, order):
    got = egf_series(family, t, order).coeffs
    for n in range(order + 1):
        assert got[n] * factorial(n) == evaluate(eulerian_poly(family, n), t)


@pytest.mark.parametrize("family", ["A", "B", "D", "Dtilde"])
@pytest.mark.parametrize("t", TS + [Fraction(-3, 2)])
def test_series_matches_polynomials(family, t):
    assert egf_series(family, t, 20) == egf_from_polynomials(family, t, 20)


def test_t_equal_one_refused():
    for fam in ("A", "B", "D", "Dtilde"):
        with pytest.raises(DegenerateParameter):
            egf_series(fam, 1, 4)
    with pytest.raises(DegenerateParameter):
        egf_pde_check("D", 1, 4)


@pytest.mark.parametrize("family", ["D", "Dtilde"])
@pytest.mark.parametrize("t", TS)
def test_pde(family, t):
    assert egf_pde_check(family, t, 8)


def test_pde_examples():
    assert egf_pde_check("D", Fraction(1, 2), 8)
    assert egf_pde_check("Dtilde", 2, 8)
    assert egf_pde_check("D", 0, 4)


def test_pde_detects_wrong_sign():
    # the D series does not satisfy the Dtilde equation
    t = Fraction(1, 2)
    res = egf_pde_residual("D", t, 6)
    assert not any(res.coeffs)
    # switching the right-hand side from +t e^{(1-t)z} to -t e^{(1-t)z}
    wrong = res + 2 * t * exp_linear(1 - t, 5)
    assert any(wrong.coeffs)


def test_initial_values():
    for t in TS:
        assert egf_series("D", t, 3).coeffs[0] == 1
        assert egf_series("Dtilde", t, 3).coeffs[0] == 0
