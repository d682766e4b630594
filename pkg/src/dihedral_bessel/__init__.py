"""Generalized Bessel functions and intertwining operators of dihedral root systems."""
from .bessel import (
    bessel_i,
    bessel_i_normalized,
    bessel_j_spherical,
    gamma_fn,
    log_gamma,
    shifted_bessel_closed,
    shifted_bessel_sum,
)
from .control import DEFAULT_CONTROL, EvaluationResult, SeriesControl
from .errors import (
    ConvergenceError,
    DihedralBesselError,
    DomainError,
    QuadratureSizeError,
    WallError,
)
from .gbf_series import (
    DihedralParams,
    PolarPoint,
    gbf_closed_b2_k0,
    gbf_orbit_k0,
    gbf_orbit_k1,
    gbf_series,
    norm_constant,
    root_of_unity_filter,
)
from .integral_rep import (
    C_ODD_CALIBRATED,
    C_ODD_PRINTED,
    KernelArgs,
    c_term,
    cosh_bochner_pair,
    gbf_corollary_even,
    gbf_integral,
    gegenbauer_bessel_sum,
    k_gamma_integral,
    k_gamma_series,
    odd_branch_kernel,
    z_term,
)
from .intertwine import (
    HarmonicMonomial,
    gbf_harmonic_reconstruction,
    intertwine_invariant,
    intertwine_prefactor,
    vn_series,
)
from .measures import (
    QuadratureRule,
    bernoulli_eta,
    beta_symmetric_rule,
    gauss_jacobi_rule,
    nu_t_rule,
)
from .orthopoly import (
    JacobiParams,
    cosine_expansion,
    gegenbauer,
    jacobi_orthonormal,
    product_formula_pair,
)

__version__ = "0.1.0"
