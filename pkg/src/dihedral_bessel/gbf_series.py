"""The W-invariant generalized Bessel function of an even dihedral group I_2(2p).

The general evaluator is the Bessel--Jacobi series

    D(x, y) = c_{p,k} (2/(rho r))^gamma sum_j I_{2jp+gamma}(rho r)
              p_j(cos 2p phi) p_j(cos 2p theta),

with orthonormal Jacobi polynomials of parameters ``(l1, l0)``.  For the
geometric multiplicities ``k = (0, 0)`` and ``k = (1, 1)`` the function is
also a finite sum over the group orbit; those closed forms are the
independent checks of the series.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .bessel import _series_core
from .control import DEFAULT_CONTROL, EvaluationResult, SeriesControl
from .errors import ConvergenceError, DomainError, WallError
from .orthopoly import JacobiParams, jacobi_orthonormal

CHAMBER_SLACK = 1e-12


@dataclass(frozen=True)
class DihedralParams:
    """Group index and multiplicities of an even dihedral system I_2(2p).

    An odd system I_2(n) is encoded by ``p = n``, ``odd = True`` and ``k1 = 0``
    (multiplicity ``k0``), which is the substitution under which the same
    series applies.  Only ``p = 2`` (type B2) is cross-validated end to end.
    """

    p: int
    k0: float
    k1: float = 0.0
    odd: bool = False

    def __post_init__(self):
        if int(self.p) != self.p or self.p < 1:
            raise DomainError(f"p must be a positive integer, got {self.p}")
        if self.k0 < 0 or self.k1 < 0:
            raise DomainError(f"multiplicities must be >= 0, got {self.k0}, {self.k1}")
        if self.odd and self.k1 != 0:
            raise DomainError("odd dihedral systems carry a single multiplicity; k1 must be 0")

    @property
    def l0(self):
        return self.k0 - 0.5

    @property
    def l1(self):
        return self.k1 - 0.5

    @property
    def gamma(self):
        return self.p * (self.k0 + self.k1)

    @property
    def xi(self):
        """Angle of the primitive rotation, ``pi/p``."""
        return math.pi / self.p

    @property
    def jacobi(self):
        return JacobiParams(self.l1, self.l0)

    @property
    def chamber_angle(self):
        return math.pi / (2 * self.p)


@dataclass(frozen=True)
class PolarPoint:
    """A point ``radius * exp(i angle)`` of the plane.

    Evaluators expect the angle in the closed chamber ``[0, pi/(2p)]``; use
    :meth:`folded` to bring an arbitrary point there.
    """

    radius: float
    angle: float = 0.0

    def __post_init__(self):
        if not self.radius >= 0:
            raise DomainError(f"radius must be >= 0, got {self.radius}")

    @classmethod
    def folded(cls, radius, angle, p):
        """The chamber representative of the orbit of ``radius * exp(i angle)``.

        Rotations by ``pi/p`` and the reflection ``angle -> -angle`` generate
        the group, so the angle is reduced modulo ``pi/p`` and then reflected
        into ``[0, pi/(2p)]``.
        """
        if radius < 0:
            radius, angle = -radius, angle + math.pi
        w = math.pi / p
        a = math.fmod(angle, w)
        if a < 0:
            a += w
        if a > w / 2:
            a = w - a
        return cls(float(radius), a)

    def in_chamber(self, p):
        return -CHAMBER_SLACK <= self.angle <= math.pi / (2 * p) + CHAMBER_SLACK


def _check_chamber(p, *points):
    for pt in points:
        if not pt.in_chamber(p):
            raise DomainError(
                f"angle {pt.angle} outside the chamber [0, pi/{2 * p}]; use PolarPoint.folded"
            )


def log_norm_constant(params: DihedralParams):
    k0, k1 = params.k0, params.k1
    return (
        (k0 + k1) * math.log(2.0)
        + math.lgamma(params.gamma + 1)
        + math.lgamma(k1 + 0.5)
        + math.lgamma(k0 + 0.5)
        - math.lgamma(k0 + k1 + 1)
    )


def norm_constant(params: DihedralParams):
    """The constant ``c_{p,k}`` making ``D(0, y) = 1``."""
    return math.exp(log_norm_constant(params))


def gbf_series(params: DihedralParams, x: PolarPoint, y: PolarPoint,
               ctrl: SeriesControl = DEFAULT_CONTROL) -> EvaluationResult:
    """Generalized Bessel function by its Bessel--Jacobi series.

    Truncation: stop once ``c (2/R)^gamma I_{2jp+gamma}(R) max|p_j|^2`` falls
    below the control threshold for two consecutive ``j``; the remaining
    tail decays superexponentially, and the last two bounds are reported as
    ``est_error``.
    """
    _check_chamber(params.p, x, y)
    p, g = params.p, params.gamma
    rr = x.radius * y.radius
    if rr < 1e-8:
        # j = 0, m = 0, 1 terms; j >= 1 terms are O(rr^(2p)) and below rounding
        corr = rr * rr / (4.0 * (g + 1.0))
        return EvaluationResult(1.0 + corr, corr * corr, 1, 0)
    jp = params.jacobi
    args = np.array([math.cos(2 * p * x.angle), math.cos(2 * p * y.angle), -1.0, 1.0])
    log_c = log_norm_constant(params)
    log_half = math.log(rr / 2.0)
    terms = []
    small_run = 0
    last_bounds = []
    for j in range(ctrl.max_terms):
        nu = 2 * j * p + g
        coef = math.exp(log_c + 2 * j * p * log_half - math.lgamma(nu + 1))
        if coef == 0.0:
            terms.append(0.0)
            last_bounds.append(0.0)
            small_run += 1
            if small_run >= 2:
                break
            continue
        f, _, _ = _series_core(nu, np.array([rr * rr / 4.0]), np.array([coef]), DEFAULT_CONTROL)
        coef *= float(f[0])
        vals = jacobi_orthonormal(j, jp, args)
        terms.append(coef * vals[0] * vals[1])
        bound = coef * max(abs(vals[2]), abs(vals[3])) ** 2
        last_bounds.append(bound)
        small_run = small_run + 1 if bound < ctrl.threshold(math.fsum(terms)) else 0
        if small_run >= 2:
            break
    else:
        raise ConvergenceError(f"gbf_series did not converge in {ctrl.max_terms} terms")
    value = math.fsum(terms)
    return EvaluationResult(value, float(sum(last_bounds[-2:])), len(terms), 0)


def _orbit_sum(p, rr, angle):
    s = np.arange(1, 2 * p + 1)
    return math.fsum(np.exp(rr * np.cos(angle + s * math.pi / p)))


def gbf_orbit_k0(p, x: PolarPoint, y: PolarPoint):
    """``k = 0``: the plain average of ``exp<x, wy>`` over the 4p group elements."""
    rr = x.radius * y.radius
    a, b = x.angle, y.angle
    return (_orbit_sum(p, rr, a + b) + _orbit_sum(p, rr, a - b)) / (4 * p)


def orbit_k1_constant(p):
    """Normalization making the determinant-weighted orbit sum equal 1 at the origin.

    Near the origin the alternating orbit sum behaves like
    ``8p (rho r / 2)^(2p) / (2p)! * sin(2p phi) sin(2p theta)``.
    """
    return 4.0**p * math.factorial(2 * p) / (8.0 * p)


def gbf_orbit_k1(p, x: PolarPoint, y: PolarPoint):
    """``k0 = k1 = 1``: determinant-weighted orbit sum over ``omega(x) omega(y)``.

    ``omega(r, theta) = r^(2p) sin(2p theta)`` vanishes on the chamber walls,
    where this form is 0/0; use :func:`gbf_series` there.
    """
    wx = x.radius ** (2 * p) * math.sin(2 * p * x.angle)
    wy = y.radius ** (2 * p) * math.sin(2 * p * y.angle)
    if abs(wx * wy) < 1e-300 or abs(math.sin(2 * p * x.angle) * math.sin(2 * p * y.angle)) < 1e-12:
        raise WallError("omega vanishes on a chamber wall or at the origin")
    rr = x.radius * y.radius
    a, b = x.angle, y.angle
    s = np.arange(1, 2 * p + 1) * math.pi / p
    diff = np.exp(rr * np.cos(a - b + s)) - np.exp(rr * np.cos(a + b + s))
    return orbit_k1_constant(p) * math.fsum(diff) / (wx * wy)


def gbf_closed_b2_k0(x: PolarPoint, y: PolarPoint):
    """``k = 0`` in type B2 as four hyperbolic cosines."""
    rr = x.radius * y.radius
    a, b = x.angle, y.angle
    return 0.25 * math.fsum([
        math.cosh(rr * math.cos(a + b)),
        math.cosh(rr * math.cos(a - b)),
        math.cosh(rr * math.sin(a + b)),
        math.cosh(rr * math.sin(a - b)),
    ])


def root_of_unity_filter(p, j, verify=False):
    """1 if ``j`` is a multiple of ``2p`` else 0.

    With ``verify=True`` the average of ``xi^(s j)`` over ``s = 1..2p``,
    ``xi = exp(i pi/p)``, is computed as well and must agree to 1e-12.
    """
    if p < 1:
        raise DomainError(f"p must be >= 1, got {p}")
    exact = 1 if j % (2 * p) == 0 else 0
    if verify:
        xi = cmath.exp(1j * math.pi / p)
        avg = sum(xi ** (s * j) for s in range(1, 2 * p + 1)) / (2 * p)
        if abs(avg - exact) >= 1e-12:
            raise ArithmeticError(f"root-of-unity average {avg} disagrees with {exact}")
    return exact
