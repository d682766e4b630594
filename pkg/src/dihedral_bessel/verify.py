"""Seeded identity suites and a deterministic verification report.

Every suite draws its cases from one ``numpy.random.Generator`` seeded from
the run seed and the suite name, so a suite's cases do not depend on which
other suites run.  Each suite is a list of checks; a check records its
largest error, its tolerance, and whether it passed.
"""
from __future__ import annotations

import math
import os
import zlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .bessel import bessel_i, shifted_bessel_closed, shifted_bessel_sum
from .gbf_series import (
    DihedralParams,
    PolarPoint,
    gbf_series,
    norm_constant,
)
from .integral_rep import (
    C_ODD_CALIBRATED,
    KernelArgs,
    cosh_bochner_pair,
    gbf_corollary_even,
    gbf_integral,
    gegenbauer_bessel_sum,
    k_gamma_integral,
    k_gamma_series,
)
from .intertwine import (
    HarmonicMonomial,
    gbf_harmonic_reconstruction,
    intertwine_invariant,
    intertwine_prefactor,
)
from .measures import beta_symmetric_rule, nu_t_rule
from .orthopoly import JacobiParams, product_formula_pair

SUITES = (
    "bessel-identities",
    "product-formula",
    "k-kernel-duality",
    "cross-representation",
    "bochner",
    "intertwine-oracles",
    "normalization",
)


@dataclass(frozen=True)
class VerifyConfig:
    seed: int = 0
    c_odd: float = C_ODD_CALIBRATED
    prefactor_mode: str = "calibrated"
    quad_nodes: int = 48
    threads: int = 1


def thread_count():
    """Worker threads: the CPU count, capped by ``DUNKL_THREADS`` when set."""
    n = os.cpu_count() or 1
    env = os.environ.get("DUNKL_THREADS")
    if env:
        try:
            n = min(n, max(1, int(env)))
        except ValueError:
            pass
    return n


def ordered_map(fn, items, threads=1):
    """``map`` whose output order is the input order for any thread count."""
    items = list(items)
    if threads <= 1 or len(items) < 2:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def suite_rng(seed, name):
    return np.random.default_rng([int(seed), zlib.crc32(name.encode())])


def rel_err(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


def _check(name, errors, tol, **extra):
    worst = float(max(errors)) if len(errors) else 0.0
    out = {"name": name, "cases": len(errors), "max_error": worst, "tolerance": tol,
           "passed": bool(worst < tol)}
    out.update(extra)
    return out


def random_b2_points(rng, count, rr_max, rr_min=0.2):
    """Points ``(x, y)`` in the B2 chamber with ``rho r`` uniform on [rr_min, rr_max]."""
    pts = []
    for _ in range(count):
        rr = rng.uniform(rr_min, rr_max)
        rho = rng.uniform(0.5, 2.0)
        x = PolarPoint(rho, rng.uniform(0.02, math.pi / 4 - 0.02))
        y = PolarPoint(rr / rho, rng.uniform(0.02, math.pi / 4 - 0.02))
        pts.append((x, y))
    return pts


#: suite implementations

def suite_bessel_identities(cfg, rng):
    shift = []
    for _ in range(50):
        a = rng.uniform(0.0, 5.0)
        x = rng.uniform(0.5, 10.0)
        z = rng.uniform(-0.45, 0.45) * x
        shift.append(rel_err(shifted_bessel_sum(a, x, z), shifted_bessel_closed(a, x, z)))
    recur = []
    for _ in range(50):
        nu = rng.uniform(0.0, 20.0)
        x = rng.uniform(0.1, 15.0)
        lhs = bessel_i(nu, x) - bessel_i(nu + 2, x)
        recur.append(rel_err(lhs, 2 * (nu + 1) / x * bessel_i(nu + 1, x)))
    return [
        _check("multiplication-theorem", shift, 1e-10),
        _check("three-term-recurrence", recur, 1e-12),
    ]


def suite_product_formula(cfg, rng):
    cases = []
    for _ in range(100):
        j = int(rng.integers(0, 11))
        alpha, beta = rng.uniform(-0.4, 2.0, size=2)
        phi, theta = rng.uniform(0, math.pi / 2, size=2)
        cases.append((j, float(alpha), float(beta), float(phi), float(theta)))

    def one(case):
        j, alpha, beta, phi, theta = case
        lhs, rhs = product_formula_pair(
            j, JacobiParams(alpha, beta), phi, theta,
            beta_symmetric_rule(alpha, j + 2), beta_symmetric_rule(beta, j + 2),
        )
        return abs(lhs - rhs)

    return [_check("dijksma-koornwinder", ordered_map(one, cases, cfg.threads), 1e-8)]


def suite_k_kernel_duality(cfg, rng):
    gammas = np.linspace(0.25, 6.0, 6)
    ts = np.linspace(0.0, 4.0, 6)
    zs = np.linspace(0.0, 0.5, 6)
    errs = []
    for g in gammas:
        for t in ts:
            for z in zs:
                args = KernelArgs(float(g), float(t), float(z))
                errs.append(abs(k_gamma_integral(args, cfg.quad_nodes) - k_gamma_series(args)))
    return [_check("k-integral-vs-series", errs, 1e-10)]


def _gammas_cross():
    return (1.0, 1.4, 2.0, 3.0, 4.0)


def cross_representation_cases(rng, count=10, rr_max=4.0):
    return {g: random_b2_points(rng, count, rr_max) for g in _gammas_cross()}


def suite_cross_representation(cfg, rng):
    checks = []
    for g, pts in cross_representation_cases(rng).items():
        params = DihedralParams(2, g / 4, g / 4)

        def one(pt, params=params):
            x, y = pt
            s = gbf_series(params, x, y).value
            v = gbf_integral(params, x, y, n=cfg.quad_nodes, c_odd=cfg.c_odd).value
            return s, v

        pairs = ordered_map(one, pts, cfg.threads)
        errs = [rel_err(v, s) for s, v in pairs]
        ratios = [v / s for s, v in pairs]
        checks.append(_check(
            f"integral-vs-series gamma={g:g}", errs, 1e-5,
            ratio_min=min(ratios), ratio_max=max(ratios),
        ))
    return checks


def suite_bochner(cfg, rng):
    mass, ident = [], []
    for t in (0.0, 0.5, 2.0, 5.0):
        rule = nu_t_rule(t, 64)
        mass.append(abs(math.fsum(rule.weights) - math.cosh(t)) / math.cosh(t))
        for z in (0.0, 0.4, -0.4, 0.9, -0.9):
            lhs, rhs = cosh_bochner_pair(t, z, 64)
            ident.append(abs(lhs - rhs))
    geg = []
    for _ in range(50):
        g = rng.uniform(0.2, 3.0)
        a = rng.uniform(0.1, 5.0)
        z = rng.uniform(-1.0, 1.0)
        sign = 1 if rng.random() < 0.5 else -1
        lhs, rhs = gegenbauer_bessel_sum(g, a, z, sign)
        geg.append(rel_err(lhs, rhs))
    return [
        _check("nu_t-mass", mass, 1e-9),
        _check("cosh-characteristic-function", ident, 1e-9),
        _check("gegenbauer-bessel-sum", geg, 1e-10),
    ]


def suite_intertwine_oracles(cfg, rng):
    mode = cfg.prefactor_mode
    y = PolarPoint(1.0, 0.3)
    grid = np.linspace(0.0, 2.0, 5)
    cons = [abs(intertwine_invariant(DihedralParams(2, a, b), HarmonicMonomial(0, 0), y, mode) - 1)
            for a in grid for b in grid]
    ident = []
    p0 = DihedralParams(2, 0.0, 0.0)
    for kappa in range(7):
        for m in range(4):
            yy = PolarPoint(rng.uniform(0.5, 1.5), rng.uniform(0, math.pi / 4))
            exact = yy.radius ** (2 * kappa + 4 * m) * math.cos(4 * m * yy.angle)
            got = intertwine_invariant(p0, HarmonicMonomial(kappa, m), yy, mode)
            ident.append(abs(got - exact) / max(1.0, abs(exact)))
    cases = []
    for x, yy in random_b2_points(rng, 10, 3.0):
        k0, k1 = rng.uniform(0.0, 2.0, size=2)
        cases.append((DihedralParams(2, float(k0), float(k1)), x, yy))

    def one(case):
        params, x, yy = case
        return rel_err(gbf_harmonic_reconstruction(params, x, yy, 12), gbf_series(params, x, yy).value)

    return [
        _check("conservativity", cons, 1e-12),
        _check("identity-limit", ident, 1e-10),
        _check("harmonic-reconstruction", ordered_map(one, cases, cfg.threads), 1e-8),
    ]


def suite_normalization(cfg, rng):
    origin = PolarPoint(0.0, 0.0)
    series = []
    for p in (2, 3, 4):
        for k0, k1 in ((0.0, 0.0), (0.5, 0.5), (1.0, 0.3), (2.0, 1.5)):
            y = PolarPoint(rng.uniform(0.1, 3.0), rng.uniform(0, math.pi / (2 * p)))
            series.append(abs(gbf_series(DihedralParams(p, k0, k1), origin, y).value - 1))
    integral, worst_gamma = [], None
    for g in (0.5, 1.0, 1.4, 2.0, 3.0, 4.0):
        params = DihedralParams(2, g / 4, g / 4)
        y = PolarPoint(rng.uniform(0.1, 3.0), rng.uniform(0, math.pi / 4))
        e = abs(gbf_integral(params, origin, y, n=cfg.quad_nodes, c_odd=cfg.c_odd).value - 1)
        if not integral or e > max(integral):
            worst_gamma = g
        integral.append(e)
    corollary = []
    for g in (2.0, 4.0):
        params = DihedralParams(2, g / 4, g / 4)
        corollary.append(abs(gbf_corollary_even(params, origin, PolarPoint(1.0, 0.2)) - 1))
    return [
        _check("series-at-origin", series, 1e-10),
        _check("integral-at-origin", integral, 1e-10, worst_gamma=worst_gamma),
        _check("corollary-at-origin", corollary, 1e-10),
    ]


SUITE_FUNCTIONS = {
    "bessel-identities": suite_bessel_identities,
    "product-formula": suite_product_formula,
    "k-kernel-duality": suite_k_kernel_duality,
    "cross-representation": suite_cross_representation,
    "bochner": suite_bochner,
    "intertwine-oracles": suite_intertwine_oracles,
    "normalization": suite_normalization,
}


def calibration_constants(cfg):
    """Measured constants that make the origin normalization and the identity limit exact."""
    origin, y = PolarPoint(0.0, 0.0), PolarPoint(1.0, 0.2)
    measured = {}
    for g in (1.0, 3.0):
        params = DihedralParams(2, g / 4, g / 4)
        even = gbf_integral(params, origin, y, n=cfg.quad_nodes, c_odd=0.0).value
        odd = gbf_integral(params, origin, y, n=cfg.quad_nodes, c_odd=1.0).value - even
        measured[f"c_odd_from_origin_gamma={g:g}"] = (1.0 - even) / odd
    params = DihedralParams(2, 0.5, 0.5)
    printed_v1 = intertwine_invariant(params, HarmonicMonomial(0, 0), y, "printed")
    p0 = DihedralParams(2, 0.0, 0.0)
    printed_id = intertwine_invariant(p0, HarmonicMonomial(0, 1), PolarPoint(1.0, 0.0), "printed")
    calibrated_id = intertwine_invariant(p0, HarmonicMonomial(0, 1), PolarPoint(1.0, 0.0), "calibrated")
    measured["prefactor_m0_printed_over_calibrated_k=(0.5,0.5)"] = printed_v1
    measured["c_2k_k=(0.5,0.5)"] = norm_constant(params)
    measured["prefactor_m1_series_printed_over_calibrated"] = (
        intertwine_prefactor(params, 1, "printed", series=True)
        / intertwine_prefactor(params, 1, "calibrated", series=True)
    )
    measured["identity_limit_m1_printed_over_calibrated"] = printed_id / calibrated_id
    return {
        "c_odd_used": cfg.c_odd,
        "c_odd_calibrated": C_ODD_CALIBRATED,
        "prefactor_mode": cfg.prefactor_mode,
        "measured": measured,
    }


def run_verify(cfg: VerifyConfig, suites=None):
    """Run the selected suites (default: all) and return the report dictionary."""
    suites = list(SUITES if not suites else suites)
    unknown = [s for s in suites if s not in SUITE_FUNCTIONS]
    if unknown:
        raise KeyError(f"unknown suites: {unknown}")
    results = []
    for name in suites:
        checks = SUITE_FUNCTIONS[name](cfg, suite_rng(cfg.seed, name))
        worst = max(checks, key=lambda c: c["max_error"] / c["tolerance"])
        results.append({
            "suite": name,
            "passed": all(c["passed"] for c in checks),
            "max_error": worst["max_error"],
            "tolerance": worst["tolerance"],
            "checks": checks,
        })
    return {
        "seed": cfg.seed,
        "quad_nodes": cfg.quad_nodes,
        "passed": all(r["passed"] for r in results),
        "suites": results,
        "calibration": calibration_constants(cfg),
    }

