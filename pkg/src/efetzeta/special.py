"""Lerch transcendent, Hurwitz / Riemann zeta, and Dirichlet beta.

The Euler-Maclaurin Hurwitz path is the workhorse; it is valid well below
Re s = 1 (used only internally for the analytic series tails, where the
periodic coefficients have zero mean and the continuation is legitimate).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .config import DEFAULT_CONFIG, EvalConfig
from .errors import DomainError, PoleProximity
from .numerics import (alternating_sum_accelerated, complex_gamma,
                       integrate_semi_infinite)

# B_2, B_4, ..., B_20
_BERNOULLI = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
)


@dataclass(frozen=True)
class PhiArgs:
    """Arguments of the Lerch transcendent Phi(z, s, v) with z = +-1."""

    z: int
    s: complex
    v: float

    def __post_init__(self) -> None:
        if self.z not in (1, -1):
            raise DomainError(f"z must be +1 or -1, got {self.z}")
        if not self.v > 0:
            raise DomainError(f"v must be positive, got {self.v}")
        if self.z == 1 and complex(self.s).real <= 1:
            raise DomainError("z=+1 requires Re s > 1")
        if self.z == -1 and complex(self.s).real <= 0:
            raise DomainError("z=-1 requires Re s > 0")


def hurwitz_zeta(s: complex, v: float,
                 config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """zeta(s, v) = sum_{n>=0} (v+n)^{-s} by Euler-Maclaurin.

    Primary domain Re s > 1; the same expansion analytically continues to
    Re s > -19 (used for internal tails), excluding the pole at s = 1.
    """
    s = complex(s)
    if not v > 0:
        raise DomainError(f"v must be positive, got {v}")
    if abs(s - 1.0) < config.pole_guard:
        raise PoleProximity(f"zeta(s, v) pole at s=1: s={s}")
    if s.real <= -19.0:
        raise DomainError(f"Euler-Maclaurin range exceeded: Re s = {s.real}")

    n_terms = max(20, math.ceil(abs(s.imag)) + 10, math.ceil(20.0 - v))
    acc = 0.0 + 0.0j
    for i in range(n_terms):
        acc += (v + i) ** (-s)
    a = v + n_terms
    acc += a ** (1.0 - s) / (s - 1.0)
    acc += 0.5 * a ** (-s)
    # Bernoulli corrections: B_{2r}/(2r)! * s(s+1)...(s+2r-2) * a^{-s-2r+1}
    poch = s  # rising product s(s+1)...(s+2r-2)
    fact = 2.0  # (2r)!
    apow = a ** (-s - 1.0)
    for r, b2r in enumerate(_BERNOULLI, start=1):
        acc += b2r / fact * poch * apow
        poch *= (s + 2 * r - 1) * (s + 2 * r)
        fact *= (2 * r + 1) * (2 * r + 2)
        apow /= a * a
    return acc


def hurwitz_tail(s: complex, a: float,
                 config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """zeta(s, a) for Re s > 1 only: the closed-form series tail."""
    if complex(s).real <= 1:
        raise DomainError(f"hurwitz_tail requires Re s > 1, got {s}")
    return hurwitz_zeta(s, a, config)


def _phi_minus_series(s: complex, v: float,
                      config: EvalConfig) -> complex:
    """Phi(-1, s, v) = sum (-1)^n (v+n)^{-s}, accelerated."""
    return alternating_sum_accelerated(
        lambda n: (-1.0 if n % 2 else 1.0) * (v + n) ** (-s), config)


def _phi_integral(z: int, s: complex, v: float,
                  config: EvalConfig) -> complex:
    """Phi by (1/Gamma(s)) int t^{s-1} e^{(1-v)t} / (e^t - z) dt."""
    sr = complex(s).real

    def integrand(t: float) -> complex:
        if t < 1e-300:
            return 0.0j
        den = math.expm1(t) if z == 1 else math.exp(t) + 1.0
        return t ** (s - 1.0) * math.exp((1.0 - v) * t) / den

    alpha = sr - 2.0 if z == 1 else sr - 1.0
    val = integrate_semi_infinite(integrand, alpha, config,
                                  decay_rate=min(v, 1.0))
    return val / complex_gamma(s, config)


def lerch_phi(args: PhiArgs, config: EvalConfig = DEFAULT_CONFIG,
              verify: bool = False) -> complex:
    """Phi(z, s, v) for z = +-1; series path, optionally checked vs integral."""
    if args.z == 1:
        val = hurwitz_zeta(args.s, args.v, config)
    else:
        val = _phi_minus_series(args.s, args.v, config)
    if verify:
        other = _phi_integral(args.z, args.s, args.v, config)
        tol = 10.0 * (config.quad_rel_tol + config.series_rel_tol)
        if abs(val - other) > tol * (1.0 + abs(val)):
            raise DomainError(
                f"Phi path disagreement {abs(val - other):.3g} at {args}")
    return val


def riemann_zeta(s: complex, config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """zeta(s) on Re s > 0, s != 1.

    Accelerated eta form (1-2^{1-s})^{-1} Phi(-1, s, 1) up to Re s = 1.5,
    Euler-Maclaurin beyond.
    """
    s = complex(s)
    if s.real <= 0:
        raise DomainError(f"Re s must be positive, got {s}")
    if abs(s - 1.0) < config.pole_guard:
        raise PoleProximity(f"zeta pole at s=1: s={s}")
    if s.real > 1.5:
        return hurwitz_zeta(s, 1.0, config)
    factor = 1.0 - cmath.exp((1.0 - s) * math.log(2.0))
    if abs(factor) < config.pole_guard:
        raise PoleProximity(f"eta-form factor 1-2^(1-s) vanishes near s={s}")
    return _phi_minus_series(s, 1.0, config) / factor


def dirichlet_beta(s: complex, config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """beta(s) = sum (-1)^n (2n+1)^{-s}, Re s > 0, accelerated."""
    s = complex(s)
    if s.real <= 0:
        raise DomainError(f"Re s must be positive, got {s}")
    return alternating_sum_accelerated(
        lambda n: (-1.0 if n % 2 else 1.0) * (2 * n + 1) ** (-s), config)
