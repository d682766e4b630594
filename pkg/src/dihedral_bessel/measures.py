"""Discrete surrogates for the measures that appear in the integral formulas.

* ``beta_symmetric_rule`` -- Gauss rule for the symmetric Beta probability
  measure ``mu^nu(du) ∝ (1-u^2)^(nu-1/2) du`` on [-1, 1];
* ``nu_t_rule`` -- the Bochner measure whose Fourier transform is
  ``cosh(t sqrt(1-Z^2))`` (two atoms plus a smooth density, total mass cosh t);
* ``bernoulli_eta`` -- the symmetric Bernoulli law, the ``nu -> -1/2`` limit
  of ``mu^nu``.

Gauss-Jacobi nodes come from the eigenvalues of the Jacobi matrix
(Golub-Welsch) and are then polished by Newton steps on the three-term
recurrence; the weights use the Christoffel-function formula.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bessel import bessel_i_normalized
from .errors import DomainError

MASS_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """Nodes and positive weights representing a finite measure on an interval.

    ``declared_total_mass`` is what the weights must add up to; it guards
    against silently renormalizing measures that are not probabilities.
    """

    nodes: np.ndarray
    weights: np.ndarray
    declared_total_mass: float = 1.0

    def __post_init__(self):
        nodes = np.asarray(self.nodes, dtype=float)
        weights = np.asarray(self.weights, dtype=float)
        if nodes.ndim != 1 or nodes.shape != weights.shape or nodes.size == 0:
            raise DomainError("nodes and weights must be equal-length non-empty vectors")
        if np.any(weights <= 0):
            raise DomainError("quadrature weights must be positive")
        if np.any(np.diff(nodes) <= 0):
            raise DomainError("quadrature nodes must be strictly increasing")
        mass = float(self.declared_total_mass)
        if abs(math.fsum(weights) - mass) >= MASS_TOL * max(1.0, abs(mass)):
            raise DomainError(
                f"weights sum to {math.fsum(weights)!r}, declared mass is {mass!r}"
            )
        nodes.setflags(write=False)
        weights.setflags(write=False)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "declared_total_mass", mass)

    def __len__(self):
        return self.nodes.size

    def integrate(self, f):
        """Apply the rule to a callable or to values sampled at the nodes."""
        values = f(self.nodes) if callable(f) else np.asarray(f, dtype=float)
        return math.fsum(self.weights * values)

    def moment(self, k):
        return self.integrate(self.nodes**k)


def _jacobi_recurrence(n, alpha, beta):
    """Diagonal and off-diagonal of the symmetric Jacobi matrix (orthonormal recurrence)."""
    k = np.arange(n, dtype=float)
    ab = alpha + beta
    diag = np.empty(n)
    diag[0] = (beta - alpha) / (ab + 2.0)
    if n > 1:
        kk = k[1:]
        diag[1:] = (beta**2 - alpha**2) / ((2 * kk + ab) * (2 * kk + ab + 2.0))
    off = np.empty(max(n - 1, 0))
    if n > 1:
        off[0] = 4.0 * (1 + alpha) * (1 + beta) / ((2 + ab) ** 2 * (3 + ab))
        if n > 2:
            kk = k[2:]
            off[1:] = (
                4.0 * kk * (kk + alpha) * (kk + beta) * (kk + ab)
                / ((2 * kk + ab) ** 2 * (2 * kk + ab + 1) * (2 * kk + ab - 1))
            )
    return diag, np.sqrt(off)


def _orthonormal_values(x, diag, off, mu0):
    """p_n and p_n' at ``x``, plus ``sum_{k<n} p_k(x)^2``.

    ``diag`` has n entries and ``off`` n entries (the last one scales p_n).
    """
    n = diag.size
    p_prev = np.zeros_like(x)
    p = np.full_like(x, 1.0 / math.sqrt(mu0))
    dp_prev = np.zeros_like(x)
    dp = np.zeros_like(x)
    sq = np.zeros_like(x)
    for k in range(n):
        sq += p * p
        b_prev = off[k - 1] if k > 0 else 0.0
        p_new = ((x - diag[k]) * p - b_prev * p_prev) / off[k]
        dp_new = (p + (x - diag[k]) * dp - b_prev * dp_prev) / off[k]
        p_prev, p = p, p_new
        dp_prev, dp = dp, dp_new
    return p, dp, sq


def jacobi_mass(alpha, beta):
    """Total mass of (1-x)^alpha (1+x)^beta on [-1, 1]."""
    return math.exp(
        (alpha + beta + 1) * math.log(2.0)
        + math.lgamma(alpha + 1)
        + math.lgamma(beta + 1)
        - math.lgamma(alpha + beta + 2)
    )


def gauss_jacobi(n, alpha, beta, newton_steps=3):
    """n-point Gauss rule for the weight ``(1-x)^alpha (1+x)^beta`` on [-1, 1].

    Exact for polynomials of degree <= 2n-1.
    """
    n = int(n)
    if n < 1:
        raise DomainError(f"need at least one node, got {n}")
    if not (alpha > -1 and beta > -1):
        raise DomainError(f"Jacobi weight needs alpha, beta > -1, got {alpha}, {beta}")
    mu0 = jacobi_mass(alpha, beta)
    diag, off = _jacobi_recurrence(n + 1, alpha, beta)
    diag = diag[:n]
    matrix = np.diag(diag) + np.diag(off[: n - 1], 1) + np.diag(off[: n - 1], -1)
    x = np.linalg.eigvalsh(matrix)
    for _ in range(newton_steps):
        p, dp, _ = _orthonormal_values(x, diag, off, mu0)
        step = p / dp
        if not np.all(np.isfinite(step)):
            break
        x_new = np.clip(x - step, -1.0, 1.0)
        x = np.where(np.abs(step) < 1e-3, x_new, x)
    x = np.sort(x)
    _, _, sq = _orthonormal_values(x, diag, off, mu0)
    w = 1.0 / sq
    w *= mu0 / math.fsum(w)
    return x, w


def gauss_jacobi_rule(n, alpha, beta):
    """:class:`QuadratureRule` wrapper of :func:`gauss_jacobi` (mass = weight integral)."""
    x, w = gauss_jacobi(n, alpha, beta)
    return QuadratureRule(x, w, jacobi_mass(alpha, beta))


def gauss_jacobi_unit(n, a, b):
    """n-point Gauss rule on [0, 1] for the weight ``q^a (1-q)^b``."""
    x, w = gauss_jacobi(n, b, a)
    mass = math.exp(math.lgamma(a + 1) + math.lgamma(b + 1) - math.lgamma(a + b + 2))
    w = w / 2.0 ** (a + b + 1)
    return QuadratureRule((x + 1.0) / 2.0, w * (mass / math.fsum(w)), mass)


def beta_symmetric_rule(nu, n):
    """Gauss rule for the symmetric Beta probability measure ``mu^nu``, ``nu > -1/2``."""
    if not nu > -0.5:
        raise DomainError(f"symmetric Beta needs nu > -1/2, got {nu}")
    x, w = gauss_jacobi(n, nu - 0.5, nu - 0.5)
    x = 0.5 * (x - x[::-1])  # enforce exact symmetry
    w = 0.5 * (w + w[::-1])
    return QuadratureRule(x, w / math.fsum(w), 1.0)


def beta_symmetric_moment(nu, k):
    """Closed-form ``int u^k dmu^nu``: zero for odd k, ``(1/2)_m / (nu+1)_m`` for k = 2m."""
    if k % 2:
        return 0.0
    m = k // 2
    return math.exp(
        math.lgamma(m + 0.5) - math.lgamma(0.5) + math.lgamma(nu + 1) - math.lgamma(nu + 1 + m)
    )


def nu_t_rule(t, n):
    """Bochner measure: atoms 1/2 at ±1 plus density ``(t/2) I_1(t sqrt(1-q^2)) / sqrt(1-q^2)``.

    The apparent endpoint singularity cancels: the density equals
    ``(t^2/4) i_1(t sqrt(1-q^2))``, an entire function of q (it only depends
    on ``1-q^2``).  An n-point Gauss-Legendre rule therefore converges
    geometrically; ``n >= t + 16`` reaches double precision.
    """
    t = float(t)
    if t < 0:
        raise DomainError(f"t must be >= 0, got {t}")
    n = int(n)
    if n < 1:
        raise DomainError(f"need at least one node, got {n}")
    mass = math.cosh(t)
    if t == 0:
        return QuadratureRule(np.array([-1.0, 1.0]), np.array([0.5, 0.5]), mass)
    q, w = gauss_jacobi(n, 0.0, 0.0)
    density = (t * t / 4.0) * bessel_i_normalized(1, t * np.sqrt(1.0 - q * q))
    nodes = np.concatenate(([-1.0], q, [1.0]))
    weights = np.concatenate(([0.5], w * density, [0.5]))
    # too few nodes for the requested t surfaces as a mass mismatch here
    return QuadratureRule(nodes, weights, mass)


def bernoulli_eta():
    """Symmetric Bernoulli law: mass 1/2 at each of ±1."""
    return QuadratureRule(np.array([-1.0, 1.0]), np.array([0.5, 0.5]), 1.0)
