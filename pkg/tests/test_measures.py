import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate, special

from dihedral_bessel import DomainError, QuadratureRule, bernoulli_eta, beta_symmetric_rule, nu_t_rule
from dihedral_bessel.measures import beta_symmetric_moment, gauss_jacobi, gauss_jacobi_unit


class TestQuadratureRule:
    def test_validation(self):
        with pytest.raises(DomainError):
            QuadratureRule([0.0, 1.0], [0.5, -0.5])
        with pytest.raises(DomainError):
            QuadratureRule([1.0, 0.0], [0.5, 0.5])
        with pytest.raises(DomainError):
            QuadratureRule([0.0, 1.0], [0.5, 0.6])
        rule = QuadratureRule([0.0, 1.0], [1.0, 2.0], declared_total_mass=3.0)
        assert rule.integrate(lambda x: x) == 2.0

    def test_immutable(self):
        rule = bernoulli_eta()
        with pytest.raises(ValueError):
            rule.nodes[0] = 3.0


@pytest.mark.parametrize("n,a,b", [(1, 0.0, 0.0), (5, -0.5, -0.5), (20, 0.3, 1.7), (80, -0.8, 2.5), (200, 1.0, 0.0)])
def test_gauss_jacobi_against_scipy(n, a, b):
    x, w = gauss_jacobi(n, a, b)
    xr, wr = special.roots_jacobi(n, a, b)
    np.testing.assert_allclose(x, xr, atol=1e-14)
    np.testing.assert_allclose(w, wr, rtol=1e-9)


def test_unit_rule():
    rule = gauss_jacobi_unit(10, 0.5, -0.5)
    assert np.all((rule.nodes > 0) & (rule.nodes < 1))
    exact = integrate.quad(lambda q: q**0.5 * (1 - q) ** -0.5 * q**3, 0, 1)[0]
    assert rule.integrate(rule.nodes**3) == pytest.approx(exact, rel=1e-12)


class TestBetaSymmetric:
    @pytest.mark.parametrize("nu", [-0.3, 0.0, 0.5, 1.0, 3.7])
    def test_mass_and_symmetry(self, nu):
        rule = beta_symmetric_rule(nu, 17)
        assert math.fsum(rule.weights) == pytest.approx(1.0, abs=1e-14)
        assert rule.moment(1) == pytest.approx(0.0, abs=1e-15)
        assert rule.moment(3) == pytest.approx(0.0, abs=1e-15)

    def test_second_moment(self):
        assert beta_symmetric_rule(1.0, 8).moment(2) == pytest.approx(0.25, rel=1e-14)
        assert beta_symmetric_rule(0.0, 8).moment(2) == pytest.approx(0.5, rel=1e-14)

    def test_second_moment_by_quadrature(self):
        nu = 0.7
        c = math.gamma(nu + 1) / (math.sqrt(math.pi) * math.gamma(nu + 0.5))
        ref = integrate.quad(lambda u: c * u * u * (1 - u * u) ** (nu - 0.5), -1, 1)[0]
        assert beta_symmetric_rule(nu, 6).moment(2) == pytest.approx(ref, rel=1e-10)

    @settings(max_examples=40, deadline=None)
    @given(st.floats(-0.45, 5.0), st.integers(1, 20))
    def test_exactness(self, nu, n):
        rule = beta_symmetric_rule(nu, n)
        for k in range(0, 2 * n, 2):
            assert abs(rule.moment(k) - beta_symmetric_moment(nu, k)) < 1e-12

    def test_domain(self):
        with pytest.raises(DomainError):
            beta_symmetric_rule(-0.5, 4)


class TestNuT:
    def test_mass(self):
        assert math.fsum(nu_t_rule(0.0, 4).weights) == 1.0
        assert math.fsum(nu_t_rule(2.0, 64).weights) == pytest.approx(3.7621956910836314, rel=1e-14)
        for t in np.linspace(0, 5, 11):
            assert abs(math.fsum(nu_t_rule(t, 128).weights) - math.cosh(t)) < 1e-10

    def test_characteristic_function(self):
        rule = nu_t_rule(1.5, 64)
        assert abs(rule.integrate(np.cos(1.5 * 0.4 * rule.nodes)) - math.cosh(1.5 * math.sqrt(1 - 0.16))) < 1e-9

    def test_density_matches_iv_form(self):
        t, q = 2.3, np.array([-0.7, 0.1, 0.95])
        s = np.sqrt(1 - q * q)
        direct = (t / 2) * special.iv(1, t * s) / s
        from dihedral_bessel import bessel_i_normalized
        np.testing.assert_allclose((t * t / 4) * bessel_i_normalized(1, t * s), direct, rtol=1e-13)

    def test_too_few_nodes_detected(self):
        with pytest.raises(DomainError):
            nu_t_rule(5.0, 8)

    def test_domain(self):
        with pytest.raises(DomainError):
            nu_t_rule(-1.0, 8)


class TestBernoulli:
    def test_moments(self):
        eta = bernoulli_eta()
        assert eta.moment(2) == 1.0
        assert eta.moment(1) == 0.0

    def test_weak_limit(self):
        assert abs(beta_symmetric_rule(-0.499, 64).moment(2) - 1) < 5e-3
        for k in (2, 4, 6):
            assert beta_symmetric_moment(-0.49999, k) == pytest.approx(1.0, abs=1e-3)
