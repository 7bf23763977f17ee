"""Limit extraction, decay-rate fits, and L_p zero criteria.

D(y) = Delta(y)/sin(y + pi k/2) tends to Gamma(s) Phi (or q^s Gamma(s) L);
the mask keeps the divisor away from its zeros.  The L_p machinery turns
the integrability dichotomy into a thresholded three-way classification:
a float computation can support evidence for a zero, never a proof.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Union

import numpy as np

from .characters import DirichletCharacter
from .config import DEFAULT_CONFIG, EvalConfig
from .errors import DegenerateFit, DomainError, InsufficientSamples
from .interp import F_ksv, InterpParams, f_ksv, g_series
from .lfunc import Fstar, LInterpParams, gamma_sq_series, masked_point, phi_sq
from .numerics import complex_gamma, richardson_limit
from .special import lerch_phi, PhiArgs
from .lfunc import L_value

Params = Union[InterpParams, LInterpParams]

_MASK_LO = math.pi / 6.0
_MASK_HI = 5.0 * math.pi / 6.0

# 4-point Gauss-Legendre on [-1, 1]
_GL_X = np.array([-0.8611363115940526, -0.3399810435848563,
                  0.3399810435848563, 0.8611363115940526])
_GL_W = np.array([0.3478548451374538, 0.6521451548625461,
                  0.6521451548625461, 0.3478548451374538])


def _k_of(params: Params) -> int:
    return params.k if isinstance(params, InterpParams) else 0


def _limit_scale(params: Params, config: EvalConfig) -> complex:
    """The limit's natural magnitude: Gamma(s) or q^s Gamma(s)."""
    if isinstance(params, InterpParams):
        return complex_gamma(params.s, config)
    return params.q ** complex(params.s) * complex_gamma(params.s, config)


def _mask_divisor(params: Params, y: float) -> float:
    return math.sin(y + math.pi * _k_of(params) / 2.0)


def _d_series(params: Params, y: float, config: EvalConfig) -> complex:
    """D(y) via the explicit series for g / gamma."""
    if isinstance(params, InterpParams):
        diff = f_ksv(params, y) - g_series(params, y, config)
    else:
        diff = phi_sq(params, y) - gamma_sq_series(params, y, config)
    return diff / _mask_divisor(params, y)


def _d_quad(params: Params, y: float, config: EvalConfig) -> complex:
    """D(y) via the integral representation (F or Fstar directly)."""
    if isinstance(params, InterpParams):
        return F_ksv(params, y, config)
    return Fstar(params, y, config)


def _delta_quad(params: Params, y: float, config: EvalConfig) -> complex:
    return _mask_divisor(params, y) * _d_quad(params, y, config)


@dataclass(frozen=True)
class LimitSample:
    """Masked samples (y, D(y)); |sin(y + pi k/2)| >= mask_floor throughout."""

    entries: tuple
    mask_floor: float = 0.5

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        ys = [y for y, _ in self.entries]
        if any(b <= a for a, b in zip(ys, ys[1:])):
            raise DomainError("sample ordinates must be strictly increasing")

    @staticmethod
    def validate_mask(entries: Sequence, k: int,
                      mask_floor: float = 0.5) -> None:
        for y, _ in entries:
            if abs(math.sin(y + math.pi * k / 2.0)) < mask_floor:
                raise DomainError(f"y={y} violates the mask floor")


class Classification(enum.Enum):
    ZERO_CONSISTENT = "zero_consistent"
    NONZERO = "nonzero"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ZeroProbeReport:
    amplitude_estimate: float
    lp_growth_exponent: float
    p: float
    classification: Classification
    amp_tol: float

    def __post_init__(self) -> None:
        if self.p <= 0.5:
            raise DomainError(f"p must exceed 1/2, got {self.p}")

    def to_dict(self) -> dict:
        return {
            "amplitude_estimate": self.amplitude_estimate,
            "lp_growth_exponent": self.lp_growth_exponent,
            "p": self.p,
            "classification": self.classification.value,
            "amp_tol": self.amp_tol,
        }


def extract_limit(params: Params, y_max: float = 320.0,
                  config: EvalConfig = DEFAULT_CONFIG,
                  order: int = 2) -> tuple[complex, float]:
    """Gamma(s) Phi (or q^s Gamma(s) L) from masked dyadic samples of D.

    D is evaluated through the explicit series for g / gamma, so agreement
    with the special-function value checks two independent representations.
    """
    if y_max > 512.0 or y_max < 40.0:
        raise DomainError("y_max must lie in [40, 512]")
    k = _k_of(params)
    ys, y = [], y_max
    while y >= 19.0 and len(ys) < 5:
        ys.append(masked_point(y, k))
        y /= 2.0
    ys.reverse()
    if len(ys) < order + 1:
        raise InsufficientSamples(f"need {order + 1} dyadic scales")
    entries = [(yy, _d_series(params, yy, config)) for yy in ys]
    LimitSample.validate_mask(entries, k)
    sample = LimitSample(tuple(entries))
    return richardson_limit(sample.entries, order)


def decay_slope(params: Params, y_max: float = 320.0,
                config: EvalConfig = DEFAULT_CONFIG,
                d_func: Optional[Callable[[float], complex]] = None,
                target: Optional[complex] = None) -> float:
    """Least-squares slope of log|D(y) - limit| against log y.

    The integral bound predicts slope -2.  DegenerateFit when the residuals
    sit at the rounding floor (D already equal to the limit).
    """
    if target is None:
        if isinstance(params, InterpParams):
            args = PhiArgs(-1 if params.k else 1, params.s, params.v)
            target = complex_gamma(params.s, config) * lerch_phi(args, config)
        else:
            target = _limit_scale(params, config) \
                * L_value(params.s, params.chi, config)
    if d_func is None:
        d_func = lambda yy: _d_quad(params, yy, config)
    k = _k_of(params)
    ys = np.geomspace(max(20.0, y_max / 16.0), y_max, 8)
    ys = np.array([masked_point(float(yy), k) for yy in ys])
    resid = np.array([abs(d_func(float(yy)) - target) for yy in ys])
    floor = 1e-12 * (1.0 + abs(target))
    if np.max(resid) < floor:
        raise DegenerateFit("residuals at rounding floor; slope unresolved")
    slope, _ = np.polyfit(np.log(ys), np.log(np.maximum(resid, 1e-300)), 1)
    return float(slope)


def _masked_intervals(k: int, y0: float, N: float) -> list[tuple[float, float]]:
    """Subintervals of (y0, N) where |sin(y + pi k/2)| >= 1/2."""
    shift = math.pi * k / 2.0
    out = []
    n = math.floor((y0 + shift) / math.pi)
    while True:
        a = n * math.pi + _MASK_LO - shift
        b = n * math.pi + _MASK_HI - shift
        if a >= N:
            break
        lo, hi = max(a, y0), min(b, N)
        if hi > lo:
            out.append((lo, hi))
        n += 1
    return out


def lp_window_norm(params: Params, p: float, N: float, y0: float = 20.0,
                   config: EvalConfig = DEFAULT_CONFIG,
                   delta_func: Optional[Callable[[float], complex]] = None
                   ) -> float:
    """int |Delta|^p over {y in [-N, N] : mask holds, |y| > y0}.

    |Delta| is even in y, so the negative half doubles the positive one.
    Composite 4-point Gauss-Legendre per masked subinterval.
    """
    if p <= 0.5:
        raise DomainError(f"p must exceed 1/2, got {p}")
    if not N > y0 > 0.0:
        raise DomainError("need N > y0 > 0")
    if delta_func is None:
        delta_func = lambda yy: _delta_quad(params, yy, config)
    k = _k_of(params)
    total = 0.0
    for a, b in _masked_intervals(k, y0, N):
        mid, half = 0.5 * (a + b), 0.5 * (b - a)
        for x, w in zip(_GL_X, _GL_W):
            total += w * half * abs(delta_func(mid + half * x)) ** p
    return 2.0 * total


def zero_probe(params: Params, p: float = 1.0, y_max: float = 512.0,
               config: EvalConfig = DEFAULT_CONFIG) -> ZeroProbeReport:
    """Three-way evidence for Gamma(s) Phi = 0 (resp. L(s, chi) = 0).

    amplitude: max |D(y)| over the outermost masked window, against a
    tolerance proportional to the limit's natural scale; growth exponent:
    two-window dyadic fit of the L_p norm (plateau amplitude gives slope 1,
    y^-2 residue gives slope ~ 1 - 2p).
    """
    if p <= 0.5:
        raise DomainError(f"p must exceed 1/2, got {p}")
    sr = complex(params.s).real
    if not 0.0 < sr < 1.0:
        raise DomainError(f"zero criteria need Re s in (0,1), got {sr}")
    k = _k_of(params)
    amp_tol = 5e-3 * abs(_limit_scale(params, config))

    ys = np.linspace(0.8 * y_max, y_max, 12)
    amp = 0.0
    for yy in ys:
        ym = masked_point(float(yy), k)
        amp = max(amp, abs(_d_quad(params, ym, config)))

    n_half = lp_window_norm(params, p, y_max / 2.0, config=config)
    n_full = lp_window_norm(params, p, y_max, config=config)
    if n_half <= 0.0 or n_full <= 0.0:
        exponent = -math.inf
    else:
        exponent = math.log(n_full / n_half) / math.log(2.0)

    if amp < amp_tol and exponent < 0.2:
        cls = Classification.ZERO_CONSISTENT
    elif amp > 10.0 * amp_tol and exponent > 0.8:
        cls = Classification.NONZERO
    else:
        cls = Classification.INCONCLUSIVE
    return ZeroProbeReport(amplitude_estimate=amp,
                           lp_growth_exponent=exponent,
                           p=p, classification=cls, amp_tol=amp_tol)
