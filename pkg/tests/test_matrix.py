"""Test companion matrices, powers and the characteristic polynomial"""
import itertools

import numpy as np
import pytest

from matrix import (
    DenseMatrix,
    DimensionError,
    GuardError,
    char_poly,
    companion,
    decompose_companion,
    identity,
    is_nonnegative,
    is_positive,
    jordan_block,
    mat_mul,
    mat_power,
    pattern_power,
)
from poly import Polynomial, TheoremInapplicableError, parse_polynomial
from spectral import find_roots


def test_companion_layout(counterexample_polynomial):
    c = companion(counterexample_polynomial)
    expected = np.array([[0, 1, 0], [0, 0, 1], [-2, 1, 2]], dtype=float)
    np.testing.assert_array_equal(c.entries, expected)


def test_companion_has_no_negative_zero():
    c = companion(parse_polynomial("t^3 - t"))
    assert not np.any(np.signbit(c.entries)), "zeros in the last row must be +0.0"


def test_to_text(golden_companion):
    assert golden_companion.to_text() == "0 1\n1 1"


def test_matrix_is_read_only(golden_companion):
    with pytest.raises(ValueError):
        golden_companion.entries[0, 0] = 5.0


def test_dimension_errors():
    with pytest.raises(DimensionError):
        DenseMatrix([[1.0, 2.0]])
    with pytest.raises(DimensionError):
        mat_mul(identity(2), identity(3))


def test_decompose_reducible_companion():
    decomposition = decompose_companion(parse_polynomial("t^6 - t^4 - t^2"))

    assert decomposition.nilpotent_size == 2
    assert decomposition.core_dim == 4
    assert decomposition.nilpotent == jordan_block(2)
    np.testing.assert_array_equal(decomposition.core.entries[-1], [1.0, 0.0, 1.0, 0.0])


def test_decompose_monomial():
    decomposition = decompose_companion(Polynomial.monomial(3))
    assert decomposition.core is None
    assert decomposition.nilpotent == jordan_block(3)


def test_decompose_needs_nonneg_form(counterexample_polynomial):
    with pytest.raises(TheoremInapplicableError):
        decompose_companion(counterexample_polynomial)


def test_mat_power(counterexample_polynomial, rng):
    c = companion(counterexample_polynomial)
    for k in [1, 2, 3, 7, 16]:
        np.testing.assert_array_equal(mat_power(c, k).entries, np.linalg.matrix_power(c.entries, k))

    with pytest.raises(ValueError):
        mat_power(c, 0)


def test_pattern_power(cyclic_permutation):
    assert np.array_equal(pattern_power(cyclic_permutation, 3), np.eye(3, dtype=bool))
    assert not np.any(pattern_power(jordan_block(3), 3))


def test_sign_predicates(golden_companion):
    assert is_nonnegative(golden_companion)
    assert not is_positive(golden_companion)
    assert is_positive(mat_mul(golden_companion, golden_companion))


def test_char_poly_of_companion(counterexample_polynomial):
    assert char_poly(companion(counterexample_polynomial)).coeffs == counterexample_polynomial.coeffs


def test_char_poly_round_trip(rng):
    """char_poly(companion(p)) reproduces p for random integer polynomials"""
    for _ in range(500):
        degree = int(rng.integers(1, 9))
        tail = rng.integers(-5, 6, size=degree).astype(float)
        p = Polynomial(coeffs=(1.0,) + tuple(tail))

        q = char_poly(companion(p))
        np.testing.assert_allclose(q.array, p.array, rtol=1e-9, atol=1e-9, err_msg=f"round trip failed for {p}")


def test_char_poly_matches_numpy(rng):
    for _ in range(50):
        n = int(rng.integers(1, 7))
        a = DenseMatrix(rng.normal(size=(n, n)))
        np.testing.assert_allclose(char_poly(a).array, np.poly(a.entries), rtol=1e-8, atol=1e-8)


def test_char_poly_guard():
    with pytest.raises(GuardError):
        char_poly(identity(13))


def test_char_poly_small_cases():
    assert char_poly(identity(2)).coeffs == (1.0, -2.0, 1.0)
    assert char_poly(jordan_block(4)).coeffs == (1.0, 0.0, 0.0, 0.0, 0.0)


def assert_same_roots(actual, expected, tol=1e-8):
    """Match each expected root to a distinct nearest computed root"""
    assert len(actual) == len(expected)
    remaining = list(actual)
    for z in expected:
        distances = np.abs(np.array(remaining) - z)
        i = int(np.argmin(distances))
        assert distances[i] <= tol * max(1.0, abs(z)), f"no root near {z} in {actual}"
        remaining.pop(i)


@pytest.mark.parametrize("degree", [1, 2, 3, 4, 5, pytest.param(6, marks=pytest.mark.slow)])
def test_decomposition_spectrum_is_zeros_plus_core(degree):
    """The roots of p are n - ell zeros together with the eigenvalues of the core"""
    for c_values in itertools.product([0.0, 0.5, 1.0, 2.0], repeat=degree):
        p = Polynomial.from_c_values(c_values)
        decomposition = decompose_companion(p)

        expected = np.zeros(decomposition.nilpotent_size, dtype=complex)
        if decomposition.core is not None:
            expected = np.concatenate([expected, find_roots(char_poly(decomposition.core))])

        assert_same_roots(find_roots(p), expected)
