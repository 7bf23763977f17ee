"""Interpolation differences of |y|^s targets and their zeta / L limits."""

from .config import DEFAULT_CONFIG, EvalConfig
from .errors import (DegenerateFit, DivisionNearZero, DomainError,
                     EfetZetaError, InsufficientSamples, IrrationalV,
                     NearNode, NonConvergent, NotACharacter, PoleProximity,
                     PrimitiveMismatch, ToleranceNotMet)
from .numerics import (alternating_sum_accelerated, complex_gamma,
                       integrate_semi_infinite, log_abs_gamma,
                       richardson_limit)
from .special import (PhiArgs, dirichlet_beta, hurwitz_zeta, lerch_phi,
                      riemann_zeta)
from .characters import (DirichletCharacter, ExceptionalSet,
                         builtin_characters, character_exp_sum,
                         character_from_dict, character_to_dict,
                         eval_Pq, eval_Tq, euler_totient, exceptional_set,
                         gauss_sum, is_primitive, make_character,
                         nonprincipal_real_character, principal_character)
from .interp import (InterpParams, F_ksv, delta, f_ksv, g_series,
                     g_via_identity, m_k, node_value, recurrence_F,
                     validate_params)
from .lfunc import (Fstar, LInterpParams, L_limit, L_value, gamma_sq,
                    masked_point, node_value_sq, phi_sq, starred_q3,
                    starred_q4)
from .analysis import (Classification, LimitSample, ZeroProbeReport,
                       decay_slope, extract_limit, lp_window_norm,
                       zero_probe)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_CONFIG", "EvalConfig",
    "EfetZetaError", "PoleProximity", "NonConvergent", "ToleranceNotMet",
    "DomainError", "InsufficientSamples", "NotACharacter",
    "PrimitiveMismatch", "DivisionNearZero", "NearNode", "IrrationalV",
    "DegenerateFit",
    "complex_gamma", "log_abs_gamma", "integrate_semi_infinite",
    "alternating_sum_accelerated", "richardson_limit",
    "PhiArgs", "lerch_phi", "hurwitz_zeta", "riemann_zeta", "dirichlet_beta",
    "DirichletCharacter", "ExceptionalSet", "make_character",
    "principal_character", "is_primitive", "character_exp_sum", "gauss_sum",
    "exceptional_set", "eval_Pq", "eval_Tq", "euler_totient",
    "builtin_characters", "nonprincipal_real_character",
    "character_from_dict", "character_to_dict",
    "InterpParams", "m_k", "validate_params", "f_ksv", "node_value",
    "F_ksv", "recurrence_F", "g_series", "g_via_identity", "delta",
    "LInterpParams", "L_value", "phi_sq", "Fstar", "gamma_sq",
    "node_value_sq", "masked_point", "L_limit", "starred_q3", "starred_q4",
    "LimitSample", "ZeroProbeReport", "Classification", "extract_limit",
    "decay_slope", "lp_window_norm", "zero_probe",
]
