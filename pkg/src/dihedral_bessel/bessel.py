"""Gamma and modified/normalized/spherical Bessel functions by power series.

Every Bessel routine here reduces to the same hypergeometric core

    F(nu, x) = sum_m x**m / (m! (nu+1)_m),

with ``x = (z/2)**2`` for the modified functions and ``x = -(z/2)**2`` for
the spherical one.  The prefactor ``(z/2)**nu / Gamma(nu+1)`` is applied in
log space so that large orders (several hundred) do not overflow.

All functions accept scalars or numpy arrays for ``z`` and return the same
kind.  The order ``nu`` is always a scalar.
"""
from __future__ import annotations

import math

import numpy as np

from .control import DEFAULT_CONTROL, SeriesControl
from .errors import ConvergenceError, DomainError


def gamma_fn(x):
    """Gamma function, with an explicit domain error at the poles.

    >>> gamma_fn(0.5) ** 2  # doctest: +ELLIPSIS
    3.14159265358979...
    """
    x = float(x)
    if x <= 0 and x == math.floor(x):
        raise DomainError(f"Gamma has a pole at {x}")
    return math.gamma(x)


def log_gamma(x):
    """``log|Gamma(x)|``; for the positive arguments used here this is ``log Gamma``."""
    x = float(x)
    if x <= 0 and x == math.floor(x):
        raise DomainError(f"Gamma has a pole at {x}")
    return math.lgamma(x)


def _series_core(nu, x, scale, ctrl):
    """Sum F(nu, x) elementwise over the array ``x``.

    ``scale`` (same shape as ``x``) converts F into the quantity the caller
    returns; the tolerances are applied on that scale.  Returns
    ``(F, terms_used, tail_bound)`` where ``tail_bound`` is already scaled.
    """
    x = np.asarray(x, dtype=float)
    scale = np.abs(np.broadcast_to(np.asarray(scale, dtype=float), x.shape))
    abs_x = np.abs(x)
    term = np.ones_like(x)
    total = np.ones_like(x)
    comp = np.zeros_like(x)
    for m in range(ctrl.max_terms):
        ratio = abs_x / ((m + 1) * (m + nu + 1))
        nxt = term * x / ((m + 1) * (m + nu + 1))
        # past the peak the tail is dominated by a geometric series
        tail = np.abs(nxt) / np.where(ratio < 0.5, 1.0 - ratio, np.inf) * scale
        limit = np.maximum(ctrl.abs_tol, ctrl.rel_tol * np.abs(total + comp) * scale)
        if np.all((ratio < 0.5) & (tail <= limit)):
            return total + comp, m + 1, tail
        # Neumaier compensated summation
        s = total + nxt
        comp += np.where(np.abs(total) >= np.abs(nxt), (total - s) + nxt, (nxt - s) + total)
        total = s
        term = nxt
    raise ConvergenceError(
        f"Bessel series of order {nu} did not converge in {ctrl.max_terms} terms"
    )


def _power_over_gamma(w, nu):
    """``w**nu / Gamma(nu+1)`` for ``w >= 0``, falling back to log space on overflow."""
    w = np.asarray(w, dtype=float)
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        if nu + 1.0 < 170.0:
            direct = w**nu / math.gamma(nu + 1.0)
        else:
            direct = np.full(w.shape, np.nan)
        logged = np.exp(nu * np.log(w) - math.lgamma(nu + 1.0)) if nu != 0 else np.ones_like(w)
    ok = np.isfinite(direct) & ((direct != 0) | (w == 0))
    return np.where(ok, direct, logged)


def _finish(values, like_scalar):
    return float(values) if like_scalar else values


def _check_order(nu):
    nu = float(nu)
    if nu <= -1:
        raise DomainError(f"order must exceed -1, got {nu}")
    return nu


def bessel_i_series(nu, z, ctrl: SeriesControl = DEFAULT_CONTROL):
    """Modified Bessel function together with its truncation diagnostics.

    Returns ``(value, terms_used, tail_bound)``.
    """
    scalar = np.ndim(z) == 0
    z = np.asarray(z, dtype=float)
    if np.any(z < 0):
        raise DomainError("bessel_i requires z >= 0")
    nu = float(nu)
    if nu < 0 and nu == math.floor(nu):
        nu = -nu
    nu = _check_order(nu)
    scale = _power_over_gamma(z / 2.0, nu)
    finite = np.isfinite(scale)
    f, terms, tail = _series_core(nu, (z / 2.0) ** 2, np.where(finite, scale, 0.0), ctrl)
    with np.errstate(invalid="ignore"):
        value = np.where(finite, scale * f, scale)
    return _finish(value, scalar), terms, _finish(tail, scalar)


def bessel_i(nu, z, ctrl: SeriesControl = DEFAULT_CONTROL):
    """Modified Bessel function of the first kind, ``I_nu(z)`` for ``z >= 0``.

    ``nu`` may be any real above -1 or a negative integer (``I_{-n} = I_n``).
    """
    return bessel_i_series(nu, z, ctrl)[0]


def bessel_i_normalized(nu, z, ctrl: SeriesControl = DEFAULT_CONTROL):
    """Normalized modified Bessel function ``i_nu(z) = (2/z)**nu I_nu(z)``.

    Entire and even in ``z``; equals ``1/Gamma(nu+1)`` at the origin.
    """
    scalar = np.ndim(z) == 0
    nu = _check_order(nu)
    z = np.asarray(z, dtype=float)
    scale = math.exp(-math.lgamma(nu + 1.0))
    f, _, _ = _series_core(nu, (z / 2.0) ** 2, np.full(z.shape, scale), ctrl)
    return _finish(scale * f, scalar)


def bessel_j_spherical(nu, z, ctrl: SeriesControl = DEFAULT_CONTROL):
    """``j_nu(z) = i_nu(iz)``, the alternating counterpart of ``i_nu``.

    Bounded by ``1/Gamma(nu+1)`` on the real line.
    """
    scalar = np.ndim(z) == 0
    nu = _check_order(nu)
    z = np.asarray(z, dtype=float)
    scale = math.exp(-math.lgamma(nu + 1.0))
    f, _, _ = _series_core(nu, -((z / 2.0) ** 2), np.full(z.shape, scale), ctrl)
    return _finish(scale * f, scalar)


def shifted_bessel_sum(a, x, z, ctrl: SeriesControl = DEFAULT_CONTROL):
    """``sum_k z**k/k! I_{a+k}(x)`` summed directly, for ``|2z| < x``.

    See :func:`shifted_bessel_closed` for the closed form it must equal.
    """
    a, x, z = float(a), float(x), float(z)
    if not abs(2.0 * z) < x:
        raise DomainError(f"need |2z| < x, got z={z}, x={x}")
    terms = []
    coef = 1.0
    for k in range(ctrl.max_terms):
        term = coef * bessel_i(a + k, x, ctrl)
        terms.append(term)
        # I_{nu+1}(x) <= I_nu(x), so successive terms shrink at least by |z|/(k+1)
        ratio = abs(z) / (k + 1)
        if ratio < 0.5 and abs(term) * ratio / (1 - ratio) <= ctrl.threshold(math.fsum(terms)):
            return math.fsum(terms)
        coef *= z / (k + 1)
    raise ConvergenceError(f"shifted Bessel sum did not converge in {ctrl.max_terms} terms")


def shifted_bessel_closed(a, x, z, ctrl: SeriesControl = DEFAULT_CONTROL):
    """``(1 + 2z/x)**(-a/2) I_a(x sqrt(1 + 2z/x))``."""
    a, x, z = float(a), float(x), float(z)
    if not abs(2.0 * z) < x:
        raise DomainError(f"need |2z| < x, got z={z}, x={x}")
    s = 1.0 + 2.0 * z / x
    return s ** (-a / 2.0) * bessel_i(a, x * math.sqrt(s), ctrl)
