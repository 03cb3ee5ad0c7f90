"""Polar polynomials: construction, zeros, and localization certificates.

Given a monic polynomial P of degree n, a monic R of degree k (or a
center xi with R = (z - xi)^k), the library solves

    d^k/dz^k (R(z) * Q(z)) = (n+1)_k * P(z)

for the unique monic Q of degree n, computes polynomial zeros with a
deterministic Aberth-Ehrlich iteration, and certifies containment
statements of the form Z(Q) within xi - K * Z(S).
"""

from .errors import (
    DegreeZeroError,
    DomainError,
    EmptyInputError,
    EmptyRootSetError,
    FactorizationImpossible,
    NotMonicError,
    SZeroAtOriginError,
)
from .polar import (
    GraceFactorization,
    PolarProblem,
    apply_tr,
    grace_convolve,
    grace_factorize,
    operator_matrix,
    s_poly,
    solve_polar,
    solve_polar_shifted,
)
from .polynomial import (
    BinomialForm,
    Polynomial,
    binomial_coeffs,
    derivative_k,
    from_binomial,
    make_monic,
    max_coeff_diff,
    poly_from_pairs,
    poly_from_roots,
    poly_mul,
    poly_scale,
    poly_to_pairs,
    rising_factorial,
    sup_norm,
    taylor_shift,
)
from .regions import (
    LocalizationReport,
    Region,
    Witness,
    enclosing_disk,
    localization_check,
    polar_zero_bound,
    region_contains,
)
from .roots import RootSet, find_roots, max_modulus, vieta_residuals
from .verify import (
    CaseInstance,
    SuiteConfig,
    SuiteReport,
    replay_case,
    reproduce_paper_examples,
    residual_norm,
    run_property_suite,
)

__version__ = "0.1.0"

__all__ = [
    "BinomialForm",
    "CaseInstance",
    "DegreeZeroError",
    "DomainError",
    "EmptyInputError",
    "EmptyRootSetError",
    "FactorizationImpossible",
    "GraceFactorization",
    "LocalizationReport",
    "NotMonicError",
    "PolarProblem",
    "Polynomial",
    "Region",
    "RootSet",
    "SZeroAtOriginError",
    "SuiteConfig",
    "SuiteReport",
    "Witness",
    "apply_tr",
    "binomial_coeffs",
    "derivative_k",
    "enclosing_disk",
    "find_roots",
    "from_binomial",
    "grace_convolve",
    "grace_factorize",
    "localization_check",
    "make_monic",
    "max_coeff_diff",
    "max_modulus",
    "operator_matrix",
    "polar_zero_bound",
    "poly_from_pairs",
    "poly_from_roots",
    "poly_mul",
    "poly_scale",
    "poly_to_pairs",
    "region_contains",
    "replay_case",
    "reproduce_paper_examples",
    "residual_norm",
    "rising_factorial",
    "run_property_suite",
    "s_poly",
    "solve_polar",
    "solve_polar_shifted",
    "sup_norm",
    "taylor_shift",
    "vieta_residuals",
]
