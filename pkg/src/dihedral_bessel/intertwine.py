"""Dunkl intertwining operator on B2-invariant harmonic monomials.

For ``Y_{4m}(y) = |y|^{4m} cos(4m theta)`` the operator acts as

    V_k[|.|^{2kappa} Y_{4m}](y) = C(m) |y|^{2kappa+4m}
        sum_{0 <= 2j <= kappa} b_{m,j+m} kappa! Gamma(4m+kappa+1)
        / ((kappa-2j)! Gamma(4m+2j+kappa+gamma+1)) p_{j+m}(cos 4theta),

where ``b_{m,j}`` are the cosine coefficients of the orthonormal Jacobi
polynomial ``p_j`` (see :func:`~dihedral_bessel.orthopoly.cosine_expansion`).
The constant ``C(m)`` is ``c_{2,k}`` for ``m = 0`` and ``c_{2,k}/2`` for
``m >= 1`` in the calibrated convention; with it ``V_k[1] = 1`` and
``V_0`` is the identity.  The ``"printed"`` mode (``C = 1`` for the
operator, ``C = c_{2,k}`` for the Bessel series) is an uncorrected
negative control.

Only ``p = 2`` is supported.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bessel import _series_core
from .control import DEFAULT_CONTROL, SeriesControl
from .errors import ConvergenceError, DomainError
from .gbf_series import DihedralParams, PolarPoint, _check_chamber, norm_constant
from .orthopoly import cosine_expansion, jacobi_orthonormal, jacobi_sup_norm

PREFACTOR_MODES = ("calibrated", "printed")


@dataclass(frozen=True)
class HarmonicMonomial:
    """``|y|^{2 kappa} Y_{4m}(y)``."""

    kappa: int
    m: int

    def __post_init__(self):
        for name in ("kappa", "m"):
            value = getattr(self, name)
            if int(value) != value or value < 0:
                raise DomainError(f"{name} must be a non-negative integer, got {value}")


def _check_b2(params):
    if params.p != 2 or params.odd:
        raise DomainError("the intertwining formulas are implemented for type B2 only (p = 2)")


def intertwine_prefactor(params: DihedralParams, m, mode="calibrated", *, series=False):
    """Constant in front of the operator (``series=False``) or of the Bessel series.

    Calibrated: ``c_{2,k}``, halved for ``m >= 1``, in both places.  Printed mode:
    1 for the operator and ``c_{2,k}`` for the series.
    """
    if mode not in PREFACTOR_MODES:
        raise DomainError(f"prefactor mode must be one of {PREFACTOR_MODES}, got {mode!r}")
    c = norm_constant(params)
    if mode == "printed":
        return c if series else 1.0
    return c if m == 0 else c / 2.0


def intertwine_invariant(params: DihedralParams, mono: HarmonicMonomial, y: PolarPoint,
                         mode="calibrated"):
    """``V_k[|.|^{2kappa} Y_{4m}](y)`` in closed form."""
    _check_b2(params)
    kappa, m = mono.kappa, mono.m
    g = params.gamma
    jp = params.jacobi
    x = math.cos(4 * y.angle)
    terms = []
    for j in range(kappa // 2 + 1):
        b = cosine_expansion(j + m, jp).coeffs[m]
        log_ratio = (
            math.lgamma(kappa + 1) + math.lgamma(4 * m + kappa + 1)
            - math.lgamma(kappa - 2 * j + 1) - math.lgamma(4 * m + 2 * j + kappa + g + 1)
        )
        terms.append(b * math.exp(log_ratio) * jacobi_orthonormal(j + m, jp, x))
    scale = intertwine_prefactor(params, m, mode) * y.radius ** (2 * kappa + 4 * m)
    return scale * math.fsum(terms)


def vn_series(params: DihedralParams, m, rho, y: PolarPoint,
              ctrl: SeriesControl = DEFAULT_CONTROL, mode="calibrated"):
    """``V_k`` applied to ``I_{4m}(rho|.|)/(rho|.|)^{4m} Y_{4m}``, as a Bessel series.

    Equals ``C (2^gamma / rho^{4m}) sum_{j>=m} b_{m,j} I_{4j+gamma}(rho|y|)/(rho|y|)^gamma p_j(cos 4theta)``.
    The power ``rho^{4m}`` is cancelled analytically, so small ``rho`` is safe.
    """
    _check_b2(params)
    if int(m) != m or m < 0:
        raise DomainError(f"m must be a non-negative integer, got {m}")
    if not rho * y.radius > 0:
        raise DomainError("need rho |y| > 0")
    g = params.gamma
    jp = params.jacobi
    R = rho * y.radius
    x = math.cos(4 * y.angle)
    log_half = math.log(R / 2.0)
    terms = []
    small = 0
    for j in range(m, m + ctrl.max_terms):
        nu = 4 * j + g
        # 2^gamma I_nu(R) / R^gamma / rho^{4m} = (|y|/2)^{4m} (R/2)^{4(j-m)} F / Gamma(nu+1)
        coef = math.exp(4 * (j - m) * log_half - math.lgamma(nu + 1))
        f, _, _ = _series_core(nu, np.array([R * R / 4.0]), np.array([coef]), DEFAULT_CONTROL)
        coef *= float(f[0])
        b = cosine_expansion(j, jp).coeffs[m]
        terms.append(coef * b * jacobi_orthonormal(j, jp, x))
        bound = coef * abs(b) * jacobi_sup_norm(j, jp)
        small = small + 1 if bound < ctrl.threshold(math.fsum(terms)) else 0
        if small >= 2:
            break
    else:
        raise ConvergenceError(f"vn_series did not converge in {ctrl.max_terms} terms")
    scale = intertwine_prefactor(params, m, mode, series=True) * (y.radius / 2.0) ** (4 * m)
    return scale * math.fsum(terms)


def gbf_harmonic_reconstruction(params: DihedralParams, x: PolarPoint, y: PolarPoint, j_max=12,
                                ctrl: SeriesControl = DEFAULT_CONTROL):
    """Generalized Bessel function rebuilt from the harmonic expansion.

    ``D(x, y) = V_k[I_0-term](y) + 2 sum_{m=1}^{j_max} rho^{4m} cos(4m phi) vn_series(m)``;
    the m-th summand is ``O((rho r / 2)^{4m} / (4m)!)``.
    """
    _check_b2(params)
    _check_chamber(2, x, y)
    rho = x.radius
    if rho * y.radius == 0:
        return 1.0
    parts = [vn_series(params, 0, rho, y, ctrl)]
    for m in range(1, j_max + 1):
        parts.append(2.0 * rho ** (4 * m) * math.cos(4 * m * x.angle) * vn_series(params, m, rho, y, ctrl))
    return math.fsum(parts)
