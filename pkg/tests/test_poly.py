"""Test parsing, printing and the index profile of polynomials"""
import pytest
from hypothesis import given
from hypothesis.strategies import floats, integers, lists
from pydantic import ValidationError

from data.corpus import ACCEPTANCE_POLYNOMIALS
from poly import (
    Polynomial,
    PolynomialParseError,
    format_polynomial,
    index_profile,
    parse_polynomial,
    scale_substitution,
    snap_zeros,
    strip_zero_roots,
)


def test_derivative_coeffs(counterexample_polynomial):
    assert counterexample_polynomial.derivative_coeffs().tolist() == [3.0, -4.0, -1.0]


def test_parse_expression(counterexample_polynomial):
    assert counterexample_polynomial.coeffs == (1.0, -2.0, -1.0, 2.0)
    assert counterexample_polynomial.variable == "t"
    assert counterexample_polynomial.scale == 1.0


def test_parse_coefficient_list():
    p = parse_polynomial("1,0,-2,0,-3")
    assert p.coeffs == (1.0, 0.0, -2.0, 0.0, -3.0)
    assert format_polynomial(p) == "t^4 - 2t^2 - 3"


def test_parse_normalizes_leading_coefficient():
    p = parse_polynomial("2*x**2 + 1")
    assert p.coeffs == (1.0, 0.0, 0.5)
    assert p.scale == 2.0
    assert p.variable == "x"


def test_parse_collects_like_terms():
    p = parse_polynomial("t^2 + t + 2t - 1")
    assert p.coeffs == (1.0, 3.0, -1.0)


@pytest.mark.parametrize(
    "text",
    ["", "   ", "5", "0*t^2 + t", "t^2 + y", "t^1.5", "t^2 + $", "t^2 +", "1,a,2"],
)
def test_parse_errors(text):
    with pytest.raises(PolynomialParseError):
        parse_polynomial(text)


def test_parse_error_is_a_value_error():
    assert issubclass(PolynomialParseError, ValueError)


def test_polynomial_must_be_monic():
    with pytest.raises(ValidationError):
        Polynomial(coeffs=(2.0, 1.0))
    with pytest.raises(ValidationError):
        Polynomial(coeffs=(1.0,))


@pytest.mark.parametrize("text", ACCEPTANCE_POLYNOMIALS)
def test_format_is_canonical(text):
    assert format_polynomial(parse_polynomial(text)) == text


@given(lists(integers(min_value=-20, max_value=20), min_size=1, max_size=8))
def test_format_then_parse_integer_coefficients(tail):
    p = Polynomial(coeffs=(1.0,) + tuple(float(a) for a in tail))
    assert parse_polynomial(format_polynomial(p)).coeffs == p.coeffs


@given(lists(floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False), min_size=1, max_size=6))
def test_format_then_parse_real_coefficients(tail):
    p = Polynomial(coeffs=(1.0,) + tuple(tail))
    assert parse_polynomial(format_polynomial(p)).coeffs == p.coeffs


def test_from_c_values(counterexample_polynomial):
    p = Polynomial.from_c_values([2, 1, -2])
    assert p.coeffs == counterexample_polynomial.coeffs


def test_index_profile_reducible():
    profile = index_profile(parse_polynomial("t^6 - t^4 - t^2"))
    assert profile.nonneg_form
    assert profile.index_set == frozenset({2, 4})
    assert profile.d == 2
    assert profile.ell == 4
    assert not profile.irreducible_companion


def test_index_profile_negative_c(counterexample_polynomial):
    profile = index_profile(counterexample_polynomial)
    assert profile.c_values == (2.0, 1.0, -2.0)
    assert not profile.nonneg_form
    assert profile.d == 1


def test_index_profile_monomial():
    profile = index_profile(Polynomial.monomial(5))
    assert profile.index_set == frozenset()
    assert profile.d == 0
    assert profile.ell == 0


def test_scale_substitution():
    q = scale_substitution(parse_polynomial("t^2 - 4"), 2.0)
    assert q.coeffs == (1.0, 0.0, -1.0)

    with pytest.raises(ValueError):
        scale_substitution(q, 0.0)


def test_snap_zeros():
    p = parse_polynomial("1,1e-12,-2")
    assert snap_zeros(p, 1e-9).coeffs == (1.0, 0.0, -2.0)
    assert snap_zeros(p, 0.0) is p
    with pytest.raises(ValueError):
        snap_zeros(p, -1.0)


def test_strip_zero_roots():
    reduced, m = strip_zero_roots(parse_polynomial("t^6 - t^4 - t^2"))
    assert m == 2
    assert reduced.coeffs == (1.0, 0.0, -1.0, 0.0, -1.0)

    reduced, m = strip_zero_roots(Polynomial.monomial(4))
    assert reduced is None
    assert m == 4
