"""Riesz kernels, Hardy weights and criticality diagnostics on Z^d."""

import json as _json

from ._core import (
    CoverageError,
    DomainError,
    Error,
    InsufficientDataError,
    PoleError,
    QuadratureError,
    QuadratureSpec,
    TailPolicy,
    alpha0,
    bessel_i_scaled,
    classify,
    digamma,
    gamma,
    hardy_deficits,
    hardy_weight,
    heat_kernel,
    ln_gamma,
    optimal_constant,
    psi,
    psi_log_derivative,
    riesz,
    riesz_asymptotic_constant,
    total_mass,
    weight_ratio_at_infinity,
)
from . import _core


def kernel_table(alpha, d, radius, q=None):
    """Kernel table as a dict {alpha, d, radius, mass?, entries}."""
    return _json.loads(_core.kernel_table_json(alpha, d, radius, q or QuadratureSpec()))


def scan(sigma, d, alphas, radii, q=None):
    return _json.loads(_core.scan_json(sigma, d, list(alphas), list(radii), q or QuadratureSpec()))


def ground_state_residual(sigma, alpha, x, radius, q=None):
    return _json.loads(_core.ground_state_residual_json(sigma, alpha, list(x), radius, q or QuadratureSpec()))
