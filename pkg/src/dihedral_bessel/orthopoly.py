"""Jacobi, Gegenbauer and Chebyshev polynomials and their product formulas.

Orthonormal Jacobi polynomials follow the classical normalization
``P_j(1) = (alpha+1)_j / j!`` before division by the L2 norm, so
``p_j(1) > 0``.  Only even products ``p_j(a) p_j(b)`` enter the Bessel
series, which makes every downstream result independent of that choice.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError, QuadratureSizeError
from .measures import QuadratureRule


@dataclass(frozen=True)
class JacobiParams:
    """Jacobi weight ``(1-x)^alpha (1+x)^beta``."""

    alpha: float
    beta: float

    def __post_init__(self):
        if not (self.alpha > -1 and self.beta > -1):
            raise DomainError(f"need alpha, beta > -1, got {self.alpha}, {self.beta}")


def jacobi_log_norm_sq(j, alpha, beta):
    """``log`` of the squared L2 norm of the classical ``P_j^{alpha,beta}``."""
    if j == 0:
        return (
            (alpha + beta + 1) * math.log(2.0)
            + math.lgamma(alpha + 1)
            + math.lgamma(beta + 1)
            - math.lgamma(alpha + beta + 2)
        )
    return (
        (alpha + beta + 1) * math.log(2.0)
        + math.lgamma(j + alpha + 1)
        + math.lgamma(j + beta + 1)
        - math.log(2 * j + alpha + beta + 1)
        - math.lgamma(j + 1)
        - math.lgamma(j + alpha + beta + 1)
    )


def jacobi_classical(j, alpha, beta, x):
    """Classical ``P_j^{alpha,beta}(x)`` by the three-term recurrence."""
    x = np.asarray(x, dtype=float)
    p_prev = np.ones_like(x)
    if j == 0:
        return p_prev
    p = (alpha + 1) + (alpha + beta + 2) * (x - 1) / 2
    for n in range(2, j + 1):
        s = 2 * n + alpha + beta
        a = 2 * n * (n + alpha + beta) * (s - 2)
        b = (s - 1) * (s * (s - 2) * x + alpha**2 - beta**2)
        c = 2 * (n + alpha - 1) * (n + beta - 1) * s
        p_prev, p = p, (b * p - c * p_prev) / a
    return p


def _chebyshev_special(j, alpha, beta, x):
    if alpha == beta == -0.5:
        if j == 0:
            return np.full_like(x, 1.0 / math.sqrt(math.pi))
        return math.sqrt(2.0 / math.pi) * np.cos(j * np.arccos(x))
    if alpha == beta == 0.5:
        # U_j by recurrence avoids the 0/0 of sin((j+1)t)/sin(t) at the ends
        u_prev, u = np.ones_like(x), 2 * x
        if j == 0:
            u = u_prev
        for _ in range(2, j + 1):
            u_prev, u = u, 2 * x * u - u_prev
        return math.sqrt(2.0 / math.pi) * u
    return None


def jacobi_orthonormal(j, params: JacobiParams, x):
    """Orthonormal ``p_j^{alpha,beta}(x)`` for the weight ``(1-x)^alpha (1+x)^beta``."""
    if j < 0:
        raise DomainError(f"degree must be >= 0, got {j}")
    scalar = np.ndim(x) == 0
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) > 1 + 1e-12):
        raise DomainError("jacobi_orthonormal needs x in [-1, 1]")
    x = np.clip(x, -1.0, 1.0)
    alpha, beta = params.alpha, params.beta
    out = _chebyshev_special(j, alpha, beta, x)
    if out is None:
        out = jacobi_classical(j, alpha, beta, x) * math.exp(
            -0.5 * jacobi_log_norm_sq(j, alpha, beta)
        )
    return float(out) if scalar else out


def jacobi_sup_norm(j, params: JacobiParams):
    """``max |p_j|`` on [-1, 1], attained at an endpoint when ``max(alpha, beta) >= -1/2``.

    For smaller parameters the endpoint value is a lower bound only; callers
    combine it with the actual term size.
    """
    ends = jacobi_orthonormal(j, params, np.array([-1.0, 1.0]))
    return float(np.max(np.abs(ends)))


def gegenbauer(j, lam, x):
    """Unnormalized Gegenbauer ``C_j^lam(x)``, ``lam > 0``."""
    if not lam > 0:
        raise DomainError(f"Gegenbauer needs lambda > 0, got {lam}")
    scalar = np.ndim(x) == 0
    x = np.asarray(x, dtype=float)
    c_prev = np.ones_like(x)
    c = 2 * lam * x
    if j == 0:
        c = c_prev
    for n in range(2, j + 1):
        c_prev, c = c, (2 * x * (n + lam - 1) * c - (n + 2 * lam - 2) * c_prev) / n
    return float(c) if scalar else c


def gegenbauer_at_one(j, lam):
    """``C_j^lam(1) = (2 lam)_j / j!``."""
    return math.exp(math.lgamma(2 * lam + j) - math.lgamma(2 * lam) - math.lgamma(j + 1))


@dataclass(frozen=True)
class CosineExpansion:
    """``p_j(cos psi) = sum_m coeffs[m] cos(m psi)``."""

    degree: int
    coeffs: tuple

    def __call__(self, psi):
        psi = np.asarray(psi, dtype=float)
        m = np.arange(self.degree + 1)
        return np.cos(np.multiply.outer(psi, m)) @ np.asarray(self.coeffs)


@lru_cache(maxsize=4096)
def _cosine_expansion_cached(j, alpha, beta):
    psi = np.arange(j + 1) * math.pi / (j + 1)
    matrix = np.cos(np.outer(psi, np.arange(j + 1)))
    rhs = jacobi_orthonormal(j, JacobiParams(alpha, beta), np.cos(psi))
    return tuple(float(b) for b in np.linalg.solve(matrix, np.atleast_1d(rhs)))


def cosine_expansion(j, params: JacobiParams) -> CosineExpansion:
    """Coefficients of ``p_j(cos psi)`` in the basis ``cos(m psi)``, ``m = 0..j``.

    Solved by interpolation at ``psi_i = i pi / (j+1)``; the samples have
    distinct cosines so the system is nonsingular.
    """
    if j < 0:
        raise DomainError(f"degree must be >= 0, got {j}")
    return CosineExpansion(j, _cosine_expansion_cached(int(j), float(params.alpha), float(params.beta)))


def product_formula_constant(alpha, beta):
    """``c_{alpha,beta} = 2^(alpha+beta+1) Gamma(alpha+1) Gamma(beta+1) / Gamma(alpha+beta+1)``."""
    return math.exp(
        (alpha + beta + 1) * math.log(2.0)
        + math.lgamma(alpha + 1)
        + math.lgamma(beta + 1)
        - math.lgamma(alpha + beta + 1)
    )


def product_formula_pair(j, params: JacobiParams, phi, theta, rule_alpha: QuadratureRule,
                         rule_beta: QuadratureRule):
    """Both sides of the Jacobi product formula.

    ``lhs = c_{alpha,beta} p_j(cos 2phi) p_j(cos 2theta)`` and

        rhs = (2j+alpha+beta+1) ∬ C_{2j}^{alpha+beta+1}(v cos(theta)cos(phi) + u sin(theta)sin(phi))
              dmu^alpha(u) dmu^beta(v),

    with ``rule_alpha`` / ``rule_beta`` Gauss rules for ``mu^alpha`` / ``mu^beta``.
    The ``mu^beta`` variable multiplies the cosine product: with the weight
    ``(1-x)^alpha (1+x)^beta`` that is the only pairing for which the
    identity holds when ``alpha != beta``.
    """
    alpha, beta = params.alpha, params.beta
    if not (alpha > -0.5 and beta > -0.5):
        raise DomainError("product formula needs alpha, beta > -1/2")
    if min(len(rule_alpha), len(rule_beta)) < j + 1:
        raise QuadratureSizeError(f"degree {2 * j} integrand needs >= {j + 1} nodes per axis")
    lhs = (
        product_formula_constant(alpha, beta)
        * jacobi_orthonormal(j, params, math.cos(2 * phi))
        * jacobi_orthonormal(j, params, math.cos(2 * theta))
    )
    u = rule_alpha.nodes[:, None]
    v = rule_beta.nodes[None, :]
    z = v * math.cos(theta) * math.cos(phi) + u * math.sin(theta) * math.sin(phi)
    w = np.outer(rule_alpha.weights, rule_beta.weights)
    rhs = (2 * j + alpha + beta + 1) * math.fsum((w * gegenbauer(2 * j, alpha + beta + 1, z)).ravel())
    return lhs, rhs


def gegenbauer_quadratic_transform(j, lam, z, rule: QuadratureRule):
    """``C_j^lam(z)`` against ``∫ C_{2j}^{2 lam}(sqrt((1+z)/2) w) dmu^{lam-1/2}(w)``."""
    if not -1 <= z <= 1:
        raise DomainError(f"z must lie in [-1, 1], got {z}")
    if len(rule) < 2 * j + 1:
        raise QuadratureSizeError(f"degree {4 * j} integrand needs >= {2 * j + 1} nodes")
    lhs = gegenbauer(j, lam, z)
    scale = math.sqrt((1 + z) / 2)
    rhs = rule.integrate(gegenbauer(2 * j, 2 * lam, scale * rule.nodes))
    return lhs, rhs
