import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import special

from dihedral_bessel import (
    DomainError,
    JacobiParams,
    QuadratureSizeError,
    beta_symmetric_rule,
    cosine_expansion,
    gauss_jacobi_rule,
    gegenbauer,
    jacobi_orthonormal,
    product_formula_pair,
)
from dihedral_bessel.orthopoly import (
    gegenbauer_at_one,
    gegenbauer_quadratic_transform,
    jacobi_classical,
    product_formula_constant,
)


def test_params_validation():
    with pytest.raises(DomainError):
        JacobiParams(-1.0, 0.0)


def test_constant_polynomial():
    a, b = 0.3, 1.2
    expected = (2 ** (a + b + 1) * special.beta(a + 1, b + 1)) ** -0.5
    np.testing.assert_allclose(jacobi_orthonormal(0, JacobiParams(a, b), np.linspace(-1, 1, 5)), expected, rtol=1e-14)


@pytest.mark.parametrize("j", [1, 2, 5, 9])
def test_chebyshev_cases(j):
    th = np.linspace(0.01, math.pi - 0.01, 13)
    t = jacobi_orthonormal(j, JacobiParams(-0.5, -0.5), np.cos(th))
    np.testing.assert_allclose(t, math.sqrt(2 / math.pi) * np.cos(j * th), atol=1e-14)
    u = jacobi_orthonormal(j, JacobiParams(0.5, 0.5), np.cos(th))
    np.testing.assert_allclose(u, math.sqrt(2 / math.pi) * np.sin((j + 1) * th) / np.sin(th), atol=1e-13)


def test_classical_against_scipy():
    x = np.linspace(-1, 1, 21)
    for j in range(8):
        np.testing.assert_allclose(jacobi_classical(j, 0.7, -0.3, x), special.eval_jacobi(j, 0.7, -0.3, x), atol=1e-13)


def test_sign_convention():
    assert jacobi_orthonormal(5, JacobiParams(0.2, 1.4), 1.0) > 0


@pytest.mark.parametrize("ab", [(0.0, 0.0), (-0.5, -0.5), (0.5, 0.5), (0.3, 1.7), (-0.7, 2.0)])
def test_orthonormality(ab):
    rule = gauss_jacobi_rule(64, *ab)
    params = JacobiParams(*ab)
    vals = [jacobi_orthonormal(j, params, rule.nodes) for j in range(9)]
    gram = np.array([[rule.integrate(vi * vj) for vj in vals] for vi in vals])
    np.testing.assert_allclose(gram, np.eye(9), atol=1e-10)


def test_domain_check():
    with pytest.raises(DomainError):
        jacobi_orthonormal(2, JacobiParams(0, 0), 1.1)
    with pytest.raises(DomainError):
        jacobi_orthonormal(-1, JacobiParams(0, 0), 0.1)


class TestGegenbauer:
    def test_values(self):
        assert gegenbauer(0, 1.3, 0.2) == 1.0
        assert gegenbauer(2, 1.0, 0.5) == pytest.approx(0.0, abs=1e-15)
        for j in range(8):
            assert gegenbauer(j, 0.8, 1.0) == pytest.approx(gegenbauer_at_one(j, 0.8), rel=1e-13)

    def test_against_scipy(self):
        x = np.linspace(-1, 1, 17)
        for j in range(10):
            np.testing.assert_allclose(gegenbauer(j, 1.7, x), special.eval_gegenbauer(j, 1.7, x), atol=1e-12)

    def test_lambda_positive(self):
        with pytest.raises(DomainError):
            gegenbauer(2, 0.0, 0.3)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 15), st.floats(0.05, 4.0), st.floats(-1.0, 1.0))
    def test_bound(self, j, lam, x):
        assert abs(gegenbauer(j, lam, x)) <= gegenbauer_at_one(j, lam) * (1 + 1e-12)


class TestCosineExpansion:
    def test_chebyshev(self):
        for j in range(1, 6):
            b = cosine_expansion(j, JacobiParams(-0.5, -0.5)).coeffs
            expected = np.zeros(j + 1)
            expected[j] = math.sqrt(2 / math.pi)
            np.testing.assert_allclose(b, expected, atol=1e-14)

    def test_degree_zero(self):
        params = JacobiParams(0.4, 0.9)
        assert cosine_expansion(0, params).coeffs[0] == pytest.approx(jacobi_orthonormal(0, params, 0.0))

    def test_second_kind(self):
        b = cosine_expansion(2, JacobiParams(0.5, 0.5)).coeffs
        s = math.sqrt(2 / math.pi)
        np.testing.assert_allclose(b, [s, 0.0, 2 * s], atol=1e-14)

    def test_projection_cross_check(self):
        params = JacobiParams(0.5, 0.5)
        psi = np.linspace(0, math.pi, 4001)
        f = jacobi_orthonormal(2, params, np.cos(psi))
        b = cosine_expansion(2, params).coeffs
        for m in range(3):
            proj = np.trapezoid(f * np.cos(m * psi), psi) * (1 if m == 0 else 2) / math.pi
            assert proj == pytest.approx(b[m], abs=1e-6)

    @pytest.mark.parametrize("j", [0, 3, 8, 12])
    def test_reconstruction(self, j):
        params = JacobiParams(0.2, 1.3)
        exp = cosine_expansion(j, params)
        psi = np.random.default_rng(j).uniform(0, math.pi, 50)
        assert np.max(np.abs(exp(psi) - jacobi_orthonormal(j, params, np.cos(psi)))) < 1e-10
        psi = np.linspace(0, math.pi, 2 * j + 4)
        assert np.max(np.abs(exp(psi) - jacobi_orthonormal(j, params, np.cos(psi)))) < 1e-10


class TestProductFormula:
    def test_degree_zero(self):
        a, b = 0.3, 0.8
        lhs, rhs = product_formula_pair(0, JacobiParams(a, b), 0.3, 0.6,
                                        beta_symmetric_rule(a, 2), beta_symmetric_rule(b, 2))
        assert lhs == pytest.approx(a + b + 1, rel=1e-13)
        assert rhs == pytest.approx(a + b + 1, rel=1e-13)

    def test_symmetric_case(self):
        lhs, rhs = product_formula_pair(1, JacobiParams(-0.25, -0.25), 0.0, 0.0,
                                        beta_symmetric_rule(-0.25, 4), beta_symmetric_rule(-0.25, 4))
        assert abs(lhs - rhs) < 1e-10

    def test_asymmetric_case(self):
        lhs, rhs = product_formula_pair(3, JacobiParams(0.3, 1.1), 0.4, 0.9,
                                        beta_symmetric_rule(0.3, 32), beta_symmetric_rule(1.1, 32))
        assert abs(lhs - rhs) < 1e-8

    def test_transposed_pairing_fails(self):
        # with the Beta variables swapped the identity breaks for alpha != beta
        a, b = 0.3, 1.1
        lhs, rhs = product_formula_pair(3, JacobiParams(a, b), 0.4, 0.9,
                                        beta_symmetric_rule(b, 32), beta_symmetric_rule(a, 32))
        assert abs(lhs - rhs) > 1e-3

    def test_rule_size(self):
        with pytest.raises(QuadratureSizeError):
            product_formula_pair(4, JacobiParams(0, 0), 0.1, 0.2, beta_symmetric_rule(0, 3), beta_symmetric_rule(0, 8))

    def test_sign_insensitivity(self):
        # even products: flipping the sign of p_j leaves both sides unchanged
        params = JacobiParams(0.4, 0.6)
        a = jacobi_orthonormal(3, params, math.cos(0.8))
        b = jacobi_orthonormal(3, params, math.cos(1.2))
        assert (-a) * (-b) == a * b
        assert product_formula_constant(0.4, 0.6) > 0


class TestQuadraticTransform:
    def test_degree_zero(self):
        lhs, rhs = gegenbauer_quadratic_transform(0, 1.2, 0.4, beta_symmetric_rule(0.7, 1))
        assert lhs == rhs == pytest.approx(1.0)

    def test_at_one(self):
        lhs, rhs = gegenbauer_quadratic_transform(3, 0.9, 1.0, beta_symmetric_rule(0.4, 16))
        assert lhs == pytest.approx(gegenbauer_at_one(3, 0.9), rel=1e-13)
        assert abs(lhs - rhs) < 1e-10

    def test_example(self):
        lhs, rhs = gegenbauer_quadratic_transform(2, 1.5, 0.3, beta_symmetric_rule(1.0, 8))
        assert abs(lhs - rhs) < 1e-10

    def test_checks(self):
        with pytest.raises(QuadratureSizeError):
            gegenbauer_quadratic_transform(3, 1.5, 0.3, beta_symmetric_rule(1.0, 6))
        with pytest.raises(DomainError):
            gegenbauer_quadratic_transform(1, 1.5, 1.3, beta_symmetric_rule(1.0, 6))
