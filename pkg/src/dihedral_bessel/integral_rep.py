"""Integral representation of the B2 generalized Bessel function.

The representation averages a normalized Bessel function over two symmetric
Beta measures,

    D(x, y) = Gamma((gamma+1)/2) ∬ { (1 + cos^2(gamma pi/2))/2 * i_{(gamma-1)/2}(R c(u, v))
              + C_odd sin^2(gamma pi/2) ∫_0^1 I_0(R t) d/dt[t^gamma (gamma K + (gamma+1)/gamma dK/dz)] dt }
              dmu^{l1} dmu^{l0},

with ``R = rho r``, ``c(u, v)`` from :func:`c_term`, ``z = c^2/2`` and the
kernel ``K_gamma(t, z)``.  The cosine-weighted Beta variable (the one
multiplying ``cos 2theta cos 2phi``) carries ``mu^{l0}``; this is the
pairing under which the formula reproduces :func:`gbf_series` for
``k0 != k1``.

The odd-branch coefficient ``C_odd`` defaults to 1/4, the value for which
the formula returns 1 at the origin; ``C_odd = 1`` is kept as a negative
control.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bessel import bessel_i, bessel_i_normalized
from .control import DEFAULT_CONTROL, EvaluationResult, SeriesControl
from .errors import ConvergenceError, DomainError
from .gbf_series import DihedralParams, PolarPoint, _check_chamber
from .measures import (
    QuadratureRule,
    bernoulli_eta,
    beta_symmetric_rule,
    gauss_jacobi_unit,
    nu_t_rule,
)
from .orthopoly import gegenbauer_at_one

C_ODD_CALIBRATED = 0.25
C_ODD_PRINTED = 1.0


@dataclass(frozen=True)
class KernelArgs:
    """Arguments of ``K_gamma(t, z)``: ``gamma > 0``, ``t >= 0``, ``0 <= z <= 1/2``."""

    gamma: float
    t: float
    z: float

    def __post_init__(self):
        if not self.gamma > 0:
            raise DomainError(f"gamma must be > 0, got {self.gamma}")
        if not self.t >= 0:
            raise DomainError(f"t must be >= 0, got {self.t}")
        if not 0 <= self.z <= 0.5:
            raise DomainError(f"z must lie in [0, 1/2], got {self.z}")


def z_term(phi, theta, u, v):
    """``u cos(theta) cos(phi) + v sin(theta) sin(phi)``."""
    return u * np.cos(theta) * np.cos(phi) + v * np.sin(theta) * np.sin(phi)


def c_term(two_phi, two_theta, u, v):
    """``sqrt((1 + u cos 2theta cos 2phi + v sin 2theta sin 2phi) / 2)``, in [0, 1]."""
    rad = (1.0 + z_term(two_phi, two_theta, u, v)) / 2.0
    if np.any(rad < -1e-15):
        raise DomainError("c_term radicand is negative; u, v must lie in [-1, 1]")
    out = np.sqrt(np.clip(rad, 0.0, None))
    return float(out) if np.ndim(out) == 0 else out


def _kernel_coefficient(gamma, j):
    """``(-1)^j Gamma(gamma/2 + j) / (Gamma((gamma+1)/2 + j) j!)``."""
    mag = math.exp(
        math.lgamma(gamma / 2 + j) - math.lgamma((gamma + 1) / 2 + j) - math.lgamma(j + 1)
    )
    return -mag if j % 2 else mag


def k_gamma_integral(args: KernelArgs, n=48):
    """``K_gamma(t, z)`` from its q-integral, by an n-point Gauss-Jacobi rule.

    The weight ``q^(gamma/2-1) (1-q)^(-1/2)`` on [0, 1] absorbs both endpoint
    singularities; the remaining factor ``i_{gamma/2}(t sqrt(1 - 2zq))`` is entire.
    """
    g, t, z = args.gamma, args.t, args.z
    rule = gauss_jacobi_unit(n, g / 2 - 1, -0.5)
    values = bessel_i_normalized(g / 2, t * np.sqrt(1.0 - 2.0 * z * rule.nodes))
    return rule.integrate(values) / math.sqrt(math.pi)


def _k_series(args, ctrl, dz):
    g, t, z = args.gamma, args.t, args.z
    w = t * t / 2.0
    terms = []
    small = 0
    for j in range(ctrl.max_terms):
        if dz:
            if j == 0:
                continue
            power = j * z ** (j - 1) * w**j
        else:
            power = (z * w) ** j
        term = _kernel_coefficient(g, j) * power * bessel_i_normalized(g / 2 + j, t)
        terms.append(term)
        small = small + 1 if abs(term) < ctrl.threshold(math.fsum(terms)) else 0
        if small >= 2 and j > z * w:
            return math.fsum(terms)
    raise ConvergenceError(f"K_gamma series did not converge in {ctrl.max_terms} terms")


def k_gamma_series(args: KernelArgs, ctrl: SeriesControl = DEFAULT_CONTROL):
    """``K_gamma(t, z) = sum_j a_j (z t^2/2)^j i_{gamma/2+j}(t)`` (alternating series)."""
    return _k_series(args, ctrl, dz=False)


def k_gamma_dz_series(args: KernelArgs, ctrl: SeriesControl = DEFAULT_CONTROL):
    """``dK_gamma/dz`` by termwise differentiation of :func:`k_gamma_series`."""
    return _k_series(args, ctrl, dz=True)


def _odd_kernel_coefficients(gamma, rho_r, t, ctrl):
    """Rows ``g_j(t) = 2 a_j (R^2 t^2/2)^j i_{gamma/2+j-1}(R t)``.

    The reduced kernel (the t-derivative divided by ``t^(gamma-1)``) is
    ``sum_j g_j(t) (gamma z^j + (gamma+1)/gamma j z^(j-1))``.  It follows from
    the derivative rule ``d/ds[s^nu I_nu(s)] = s^nu I_{nu-1}(s)`` applied to
    each term of ``t^gamma K_gamma(R t, z)``.
    """
    t = np.asarray(t, dtype=float)
    rows = []
    small = 0
    w = (rho_r * t) ** 2 / 2.0
    for j in range(ctrl.max_terms):
        row = 2.0 * _kernel_coefficient(gamma, j) * w**j
        row = row * bessel_i_normalized(gamma / 2 + j - 1, rho_r * t)
        rows.append(row)
        # z <= 1/2 bounds the z-polynomial multiplying this row
        zfac = gamma * 0.5**j + (gamma + 1) / gamma * j * 0.5 ** max(j - 1, 0)
        bound = float(np.max(np.abs(row))) * zfac
        small = small + 1 if bound < ctrl.threshold(1.0) else 0
        if small >= 2 and j > float(np.max(w)):
            return np.array(rows)
    raise ConvergenceError(f"odd-branch kernel did not converge in {ctrl.max_terms} terms")


def _z_polynomials(gamma, n_rows, z):
    """Stack of ``gamma z^j + (gamma+1)/gamma j z^(j-1)`` for ``j < n_rows``."""
    z = np.asarray(z, dtype=float)
    out = np.empty((n_rows,) + z.shape)
    zp_prev = np.zeros_like(z)
    zp = np.ones_like(z)
    for j in range(n_rows):
        out[j] = gamma * zp + (gamma + 1) / gamma * j * zp_prev
        zp_prev, zp = zp, zp * z
    return out


def odd_branch_kernel(gamma, rho_r, c, t, ctrl: SeriesControl = DEFAULT_CONTROL):
    """``d/dt { t^gamma [gamma K(R t, z) + (gamma+1)/gamma dK/dz(R t, z)] }`` with ``z = c^2/2``.

    Computed analytically term by term; broadcasting over ``c`` and ``t``.
    """
    if not gamma > 0:
        raise DomainError(f"gamma must be > 0, got {gamma}")
    c = np.asarray(c, dtype=float)
    t_arr = np.asarray(t, dtype=float)
    if np.any((t_arr < 0) | (t_arr > 1)) or np.any((c < 0) | (c > 1)):
        raise DomainError("need c, t in [0, 1]")
    c_b, t_b = np.broadcast_arrays(c, t_arr)
    rows = _odd_kernel_coefficients(gamma, rho_r, t_b.ravel(), ctrl)
    polys = _z_polynomials(gamma, rows.shape[0], (c_b.ravel() ** 2) / 2.0)
    with np.errstate(divide="ignore"):
        reduced = np.sum(rows * polys, axis=0) * t_b.ravel() ** (gamma - 1.0)
    out = reduced.reshape(c_b.shape)
    return float(out) if out.ndim == 0 else out


def branch_weights(gamma):
    """``((1 + cos^2(gamma pi/2))/2, sin^2(gamma pi/2))``, exact at integer gamma."""
    if float(gamma).is_integer():
        s2 = float(int(gamma) % 2)
    else:
        s2 = math.sin(gamma * math.pi / 2) ** 2
    return (1.0 + (1.0 - s2)) / 2.0, s2


def _measure_rule(nu, n):
    # k = 0 on an axis: the Beta law degenerates to the symmetric Bernoulli law
    if nu == -0.5:
        return bernoulli_eta()
    return beta_symmetric_rule(nu, n)


def _tensor_grid(params, x, y, rule_l1, rule_l0, n):
    if params.p != 2 or params.odd:
        raise DomainError("the integral representation is for type B2 (p = 2)")
    _check_chamber(2, x, y)
    if not (params.l0 >= -0.5 and params.l1 >= -0.5):
        raise DomainError("need l0, l1 >= -1/2")
    rule_l1 = rule_l1 if rule_l1 is not None else _measure_rule(params.l1, n)
    rule_l0 = rule_l0 if rule_l0 is not None else _measure_rule(params.l0, n)
    two_phi, two_theta = 2 * x.angle, 2 * y.angle
    # rows: mu^{l1} node (sine product), columns: mu^{l0} node (cosine product)
    c = c_term(two_phi, two_theta, rule_l0.nodes[None, :], rule_l1.nodes[:, None])
    weights = np.outer(rule_l1.weights, rule_l0.weights)
    return np.atleast_2d(c), weights


def _even_part(gamma, rho_r, c, weights):
    values = bessel_i_normalized((gamma - 1) / 2, rho_r * c)
    return math.fsum((weights * values).ravel())


def gbf_corollary_even(params: DihedralParams, x: PolarPoint, y: PolarPoint,
                       rule_l1: QuadratureRule | None = None,
                       rule_l0: QuadratureRule | None = None, n=64):
    """``Gamma((gamma+1)/2) ∬ i_{(gamma-1)/2}(rho r c(u, v)) dmu^{l1} dmu^{l0}``.

    The closed specialization for even gamma.  The expression is well defined
    and positive for every gamma > 0.
    """
    gamma = params.gamma
    if not gamma > 0:
        raise DomainError("gamma must be > 0; use gbf_closed_b2_k0 for k = 0")
    c, weights = _tensor_grid(params, x, y, rule_l1, rule_l0, n)
    return math.gamma((gamma + 1) / 2) * _even_part(gamma, x.radius * y.radius, c, weights)


def _odd_part(gamma, rho_r, c, weights, t_rule, ctrl):
    rows = _odd_kernel_coefficients(gamma, rho_r, t_rule.nodes, ctrl)
    # t-integral of each row against I_0(R t) t^(gamma-1) dt (weight in the rule)
    h = rows @ (t_rule.weights * bessel_i(0, rho_r * t_rule.nodes))
    polys = _z_polynomials(gamma, rows.shape[0], c**2 / 2.0)
    odd = np.tensordot(h, polys, axes=1)
    return math.fsum((weights * odd).ravel()), rows.shape[0]


def _integral_value(params, x, y, rule_l1, rule_l0, t_rule, ctrl, c_odd, n):
    gamma = params.gamma
    rho_r = x.radius * y.radius
    even_w, odd_w = branch_weights(gamma)
    c, weights = _tensor_grid(params, x, y, rule_l1, rule_l0, n)
    value = _even_part(gamma, rho_r, c, weights)
    terms = 0
    if odd_w != 0.0:
        odd, terms = _odd_part(gamma, rho_r, c, weights, t_rule, ctrl)
        value = even_w * value + c_odd * odd_w * odd
    return math.gamma((gamma + 1) / 2) * value, terms, c.size * len(t_rule)


def gbf_integral(params: DihedralParams, x: PolarPoint, y: PolarPoint,
                 rule_l1: QuadratureRule | None = None,
                 rule_l0: QuadratureRule | None = None,
                 t_rule: QuadratureRule | None = None,
                 ctrl: SeriesControl = DEFAULT_CONTROL, *,
                 n=48, n_t=32, c_odd=C_ODD_CALIBRATED) -> EvaluationResult:
    """Generalized Bessel function from the two-branch integral representation.

    ``t_rule`` must be a Gauss rule on [0, 1] for the weight ``t^(gamma-1)``
    (the endpoint behaviour of the t-integrand); it defaults to an
    ``n_t``-point Gauss-Jacobi rule.  ``est_error`` combines the kernel
    truncation threshold with the change against half-size rules.  At even
    gamma the odd branch has weight exactly 0 and the result coincides with
    :func:`gbf_corollary_even` bit for bit.
    """
    gamma = params.gamma
    if not gamma > 0:
        raise DomainError("gamma must be > 0; use gbf_closed_b2_k0 for k = 0")
    if t_rule is None:
        t_rule = gauss_jacobi_unit(n_t, gamma - 1.0, 0.0)
    value, terms, nodes = _integral_value(params, x, y, rule_l1, rule_l0, t_rule, ctrl, c_odd, n)
    n_half = max(len(rule_l1) if rule_l1 is not None else n, 2) // 2
    coarse, _, _ = _integral_value(
        params, x, y, None, None, gauss_jacobi_unit(max(len(t_rule) // 2, 1), gamma - 1.0, 0.0),
        ctrl, c_odd, max(n_half, 1),
    )
    est = abs(value - coarse) + ctrl.threshold(value)
    return EvaluationResult(value, est, terms, nodes)


def gegenbauer_bessel_sum(gamma, a, Z, sign=1, ctrl: SeriesControl = DEFAULT_CONTROL):
    """Both sides of ``sum_j sign^j (j+gamma) I_{j+gamma}(a) C_j^gamma(Z) = a^gamma e^{sign a Z} / (2^gamma Gamma(gamma))``.

    The sum stops once the majorant ``(j+gamma) I_{j+gamma}(a) C_j^gamma(1)``
    is below the control threshold for two consecutive ``j``.
    """
    if not gamma > 0:
        raise DomainError(f"gamma must be > 0, got {gamma}")
    if not -1 <= Z <= 1:
        raise DomainError(f"Z must lie in [-1, 1], got {Z}")
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    terms = []
    c_prev, c = 0.0, 1.0
    small = 0
    for j in range(ctrl.max_terms):
        if j == 1:
            c_prev, c = c, 2 * gamma * Z
        elif j > 1:
            c_prev, c = c, (2 * Z * (j + gamma - 1) * c - (j + 2 * gamma - 2) * c_prev) / j
        weight = (j + gamma) * bessel_i(j + gamma, a)
        terms.append(sign**j * weight * c)
        bound = weight * gegenbauer_at_one(j, gamma)
        small = small + 1 if bound < ctrl.threshold(math.fsum(terms)) else 0
        if small >= 2:
            break
    else:
        raise ConvergenceError(f"Gegenbauer-Bessel sum did not converge in {ctrl.max_terms} terms")
    lhs = math.fsum(terms)
    rhs = a**gamma / (2**gamma * math.gamma(gamma)) * math.exp(sign * a * Z)
    return lhs, rhs


def cosh_bochner_pair(t, Z, n=64):
    """``cosh(t sqrt(1-Z^2))`` against ``∫ cos(t Z q) dnu_t(q)``."""
    if not -1 <= Z <= 1:
        raise DomainError(f"Z must lie in [-1, 1], got {Z}")
    rule = nu_t_rule(t, n)
    lhs = math.cosh(t * math.sqrt(1.0 - Z * Z))
    rhs = rule.integrate(np.cos(t * Z * rule.nodes))
    return lhs, rhs
