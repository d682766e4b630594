import math

import numpy as np
import pytest

from dihedral_bessel import (
    DihedralParams,
    DomainError,
    HarmonicMonomial,
    PolarPoint,
    cosine_expansion,
    gbf_closed_b2_k0,
    gbf_harmonic_reconstruction,
    gbf_series,
    intertwine_invariant,
    intertwine_prefactor,
    jacobi_orthonormal,
    norm_constant,
    vn_series,
)


def taylor_coefficient(params, m, kappa, y):
    """[rho^(2 kappa)] of vn_series, read off the Bessel power series term by term."""
    jp = params.jacobi
    g = params.gamma
    h = (y.radius / 2) ** 2
    total = 0.0
    for i in range(kappa // 2 + 1):
        j = m + i
        n = kappa - 2 * i
        b = cosine_expansion(j, jp).coeffs[m]
        total += b * jacobi_orthonormal(j, jp, math.cos(4 * y.angle)) * h ** (2 * i + n) / (
            math.factorial(n) * math.gamma(4 * j + g + n + 1))
    return intertwine_prefactor(params, m, series=True) * h ** (2 * m) * total


def test_monomial_validation():
    with pytest.raises(DomainError):
        HarmonicMonomial(-1, 0)
    with pytest.raises(DomainError):
        HarmonicMonomial(1, 0.5)


@pytest.mark.parametrize("k", [(0, 0), (0.5, 0.5), (2, 0), (0.3, 1.9), (1.5, 1.5)])
def test_conservative(k):
    for theta in (0.0, 0.4, math.pi / 4):
        v = intertwine_invariant(DihedralParams(2, *k), HarmonicMonomial(0, 0), PolarPoint(1.7, theta))
        assert abs(v - 1) < 1e-12


def test_identity_limit():
    params = DihedralParams(2, 0, 0)
    for kappa in range(7):
        for m in range(4):
            for r, theta in ((1.0, 0.0), (0.8, 0.3), (1.2, 0.7)):
                exact = r ** (2 * kappa + 4 * m) * math.cos(4 * m * theta)
                got = intertwine_invariant(params, HarmonicMonomial(kappa, m), PolarPoint(r, theta))
                assert abs(got - exact) < 1e-10 * max(1, abs(exact))


def test_example_against_series_coefficient():
    params = DihedralParams(2, 0.5, 0.5)
    y = PolarPoint(1.0, 0.3)
    got = intertwine_invariant(params, HarmonicMonomial(2, 1), y)
    oracle = 2 ** (4 + 4) * math.factorial(2) * math.gamma(4 + 2 + 1) * taylor_coefficient(params, 1, 2, y)
    assert abs(got - oracle) < 1e-10


@pytest.mark.parametrize("m", [0, 1, 2])
def test_taylor_fit(m):
    params = DihedralParams(2, 0.7, 0.4)
    y = PolarPoint(1.1, 0.25)
    rhos = np.linspace(0.01, 0.1, 25)
    coeffs = np.polynomial.polynomial.polyfit(rhos**2, [vn_series(params, m, r, y) for r in rhos], 6)
    for kappa in range(3):
        scaled = 2 ** (4 * m + 2 * kappa) * math.factorial(kappa) * math.gamma(4 * m + kappa + 1)
        expected = intertwine_invariant(params, HarmonicMonomial(kappa, m), y)
        assert scaled * coeffs[kappa] == pytest.approx(expected, rel=1e-5)


def test_leading_behaviour():
    params = DihedralParams(2, 0.5, 0.5)
    y = PolarPoint(1.0, 0.3)
    v = vn_series(params, 1, 1e-4, y)
    assert v == pytest.approx(intertwine_invariant(params, HarmonicMonomial(0, 1), y) / (2**4 * math.gamma(5)), rel=1e-7)


def test_degree_preservation():
    params = DihedralParams(2, 0.6, 1.3)
    n = 64
    theta = np.arange(n) * 2 * math.pi / n
    for kappa, m in ((0, 1), (3, 0), (4, 2), (5, 1)):
        prof = np.array([intertwine_invariant(params, HarmonicMonomial(kappa, m), PolarPoint(1.0, t)) for t in theta])
        spectrum = np.abs(np.fft.rfft(prof)) / n
        top = 4 * (kappa // 2 + m)
        assert np.max(spectrum[top + 1:]) < 1e-12
        assert np.all(spectrum[[i for i in range(top + 1) if i % 4]] < 1e-12)


def test_homogeneity():
    params = DihedralParams(2, 0.9, 0.2)
    mono = HarmonicMonomial(3, 1)
    a = intertwine_invariant(params, mono, PolarPoint(1.0, 0.2))
    b = intertwine_invariant(params, mono, PolarPoint(1.7, 0.2))
    assert b == pytest.approx(a * 1.7 ** 10, rel=1e-13)


def test_printed_mode():
    params = DihedralParams(2, 0.5, 0.5)
    y = PolarPoint(1.0, 0.3)
    printed = intertwine_invariant(params, HarmonicMonomial(0, 0), y, "printed")
    assert printed * norm_constant(params) == pytest.approx(1.0, rel=1e-14)
    assert intertwine_prefactor(params, 2, "printed", series=True) == pytest.approx(2 * intertwine_prefactor(params, 2))
    with pytest.raises(DomainError):
        intertwine_prefactor(params, 0, "other")


def test_rejects_non_b2():
    with pytest.raises(DomainError):
        intertwine_invariant(DihedralParams(3, 1, 1), HarmonicMonomial(0, 0), PolarPoint(1.0, 0.1))
    with pytest.raises(DomainError):
        vn_series(DihedralParams(2, 1, 1), 0, 0.0, PolarPoint(1.0, 0.1))


def test_reconstruction_k0():
    rng = np.random.default_rng(40)
    params = DihedralParams(2, 0, 0)
    for _ in range(10):
        rr = rng.uniform(0.2, 3)
        x = PolarPoint(rng.uniform(0.5, 1.5), rng.uniform(0, math.pi / 4))
        y = PolarPoint(rr / x.radius, rng.uniform(0, math.pi / 4))
        assert abs(gbf_harmonic_reconstruction(params, x, y, 12) - gbf_closed_b2_k0(x, y)) < 1e-8


def test_reconstruction_general():
    rng = np.random.default_rng(41)
    params = DihedralParams(2, 0.7, 0.4)
    for _ in range(10):
        rr = rng.uniform(0.2, 3)
        x = PolarPoint(rng.uniform(0.5, 1.5), rng.uniform(0, math.pi / 4))
        y = PolarPoint(rr / x.radius, rng.uniform(0, math.pi / 4))
        s = gbf_series(params, x, y).value
        assert abs(gbf_harmonic_reconstruction(params, x, y, 12) - s) < 1e-8 * s


def test_reconstruction_odd_harmonics_at_pi_over_8():
    # cos(4m pi/8) vanishes for odd m, so those vn terms cannot matter there
    params = DihedralParams(2, 0.7, 0.4)
    x, y = PolarPoint(1.2, math.pi / 8), PolarPoint(1.5, 0.3)
    full = gbf_harmonic_reconstruction(params, x, y, 12)
    even_only = vn_series(params, 0, 1.2, y) + 2 * math.fsum(
        1.2 ** (4 * m) * math.cos(m * math.pi / 2) * vn_series(params, m, 1.2, y) for m in range(2, 13, 2))
    assert full == pytest.approx(even_only, rel=1e-14)
    assert full == pytest.approx(gbf_series(params, x, y).value, rel=1e-12)
