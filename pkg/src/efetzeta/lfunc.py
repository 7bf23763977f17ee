"""Dirichlet L-functions and the modulus-q interpolation pair.

phi / gamma generalize f / g of the interpolation module with the character
as coefficient source; Fstar is the character-combined integral whose limit
is Gamma(s) q^s L(s, chi).  The q = 3 and q = 4 starred variants rescale
the chain onto the node sets 2 pi (d +- 1/3) and pi (n + 1/2).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .characters import DirichletCharacter, character_exp_sum, p3_used, p4_used
from .config import DEFAULT_CONFIG, EvalConfig
from .errors import DomainError, NearNode, PoleProximity
from .interp import InterpParams, _series_sum, f_ksv, g_via_identity, m_k
from .numerics import complex_gamma, integrate_semi_infinite, richardson_limit
from .special import hurwitz_zeta, riemann_zeta

_NODE_GUARD = 1e-6


def _prime_factors(q: int) -> list[int]:
    out, n, p = [], q, 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class LInterpParams:
    """s and a nonprincipal character chi of modulus q > 1."""

    s: complex
    chi: DirichletCharacter

    def __post_init__(self) -> None:
        object.__setattr__(self, "s", complex(self.s))
        if self.chi.q <= 1 or self.chi.is_principal:
            raise DomainError("need q > 1 and chi != chi0")
        sr = self.s.real
        guard = DEFAULT_CONFIG.pole_guard
        if sr <= 0.0:
            raise DomainError(f"Re s must be positive, got {sr}")
        nearest = round(sr)
        if abs(self.s - nearest) < guard:
            raise DomainError(f"s={self.s} within pole guard of an integer")
        if nearest >= 2 and nearest % 2 == 0 and abs(sr - nearest) < guard:
            raise DomainError(f"Re s must avoid 2,4,...; Re s={sr}")

    @property
    def q(self) -> int:
        return self.chi.q

    @property
    def m(self) -> int:
        return m_k(1, self.s)


def L_value(s: complex, chi: DirichletCharacter,
            config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """L(s, chi) for Re s > 0 (chi != chi0) or Re s > 1 / Euler product (chi0).

    Nonprincipal chi: the Hurwitz closure q^{-s} sum chi(l) zeta(s, l/q),
    valid down to Re s > 0 because the character sum annihilates the
    zeta poles.
    """
    s = complex(s)
    q = chi.q
    if q == 1:
        return riemann_zeta(s, config)
    if chi.is_principal:
        if abs(s - 1.0) < config.pole_guard:
            raise PoleProximity("principal L has a pole at s=1")
        z = riemann_zeta(s, config)
        for p in _prime_factors(q):
            z *= 1.0 - p ** (-s)
        return z
    if s.real <= 0.0:
        raise DomainError(f"Re s must be positive, got {s}")
    acc = 0.0j
    for l in range(1, q):
        if abs(chi(l)) > 0.5:
            acc += chi(l) * hurwitz_zeta(s, l / q, config)
    return q ** (-s) * acc


def phi_sq(params: LInterpParams, y: float) -> complex:
    """Character-weighted |y|^s target interpolated at the nodes pi n."""
    if y == 0.0:
        return 0.0j
    s, chi, q = params.s, params.chi, params.q
    ay = abs(y)
    sgn = 1.0 if y > 0 else -1.0
    sin_sum = 0.0j
    cos_sum = 0.0j
    for l in range(1, q):
        w = (2.0 * l / q - 1.0) * y
        sin_sum += chi(l) * math.sin(w)
        cos_sum += chi(l) * math.cos(w)
    return -math.pi * 2.0 ** (s - 2.0) * (
        ay ** s * sin_sum / cmath.sin(math.pi * s / 2.0)
        + ay ** s * sgn * cos_sum / cmath.cos(math.pi * s / 2.0))


def _Fstar_direct(s: complex, chi: DirichletCharacter, y: float,
                  config: EvalConfig) -> complex:
    """Combined integrand: the character sum vanishes like t at the origin,
    so the single integral converges for all Re s > 0."""
    q = chi.q
    four_y2 = 4.0 * y * y
    coefs = [(l, chi(l)) for l in range(1, q) if abs(chi(l)) > 0.5]

    def integrand(t: float) -> complex:
        if t < 1e-300:
            return 0.0j
        # sum chi(l) e^{(1-l/q)t} = sum chi(l) expm1((1-l/q)t): the character
        # sum is zero, and the expm1 form avoids cancellation as t -> 0
        num = 0.0j
        for l, c in coefs:
            num += c * math.expm1((1.0 - l / q) * t)
        return t ** (s - 1.0) * num / (math.expm1(t)
                                       * (1.0 + t * t / four_y2))

    # numerator ~ c t near 0, denominator ~ t: net t^{s-1}
    return integrate_semi_infinite(integrand, s.real - 1.0, config,
                                   decay_rate=1.0 / q)


def Fstar(params: LInterpParams, y: float,
          config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """The combined integral; recurrence reduction for Re s >= 2."""
    if y == 0.0:
        raise DomainError("Fstar is defined for y != 0")
    s, chi, q = params.s, params.chi, params.q
    m = params.m
    if m == 0:
        return _Fstar_direct(s, chi, y, config)
    acc = 0.0j
    u = (2.0 * y) ** 2
    upow = 1.0
    for j in range(1, m + 1):
        upow *= u
        sj = s - 2 * j
        acc += (-1.0) ** (j - 1) * complex_gamma(sj, config) \
            * q ** sj * L_value(sj, chi, config) * upow
    tail = (-1.0) ** m * (2.0 * y) ** (2 * m) \
        * _Fstar_direct(s - 2 * m, chi, y, config)
    return acc + tail


def gamma_sq_identity(params: LInterpParams, y: float,
                      config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """gamma = phi - sin(y) Fstar(y): node-free path."""
    if y == 0.0:
        return 0.0j
    return phi_sq(params, y) - math.sin(y) * Fstar(params, y, config)


def gamma_sq_series(params: LInterpParams, y: float,
                    config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """Explicit series for gamma; exceptional-set terms vanish identically."""
    if y == 0.0:
        return 0.0j
    s, chi, q = params.s, params.chi, params.q
    m = params.m
    if abs(abs(y) / math.pi - round(abs(y) / math.pi)) * math.pi < _NODE_GUARD:
        raise NearNode(f"y={y} within {_NODE_GUARD} of a node pi*n")
    sigma = s - 2 * m - 1
    half_s = math.pi * s / 2.0

    def coef(n: int) -> complex:
        acc = 0.0j
        for l in range(1, q):
            c = chi(l)
            if abs(c) > 0.5:
                phase = 2.0 * math.pi * ((n * l) % q) / q
                acc += c * cmath.sin(phase + half_s)
        return acc

    series = _series_sum(y, sigma, 0.0, 1, q, coef, False, config)
    poly = 0.0j
    u = (2.0 * y) ** 2
    upow = 1.0
    for j in range(1, m + 1):
        upow *= u
        sj = s - 2 * j
        poly += (-1.0) ** (j - 1) * complex_gamma(sj, config) \
            * q ** complex(sj) * L_value(sj, chi, config) * upow
    front = math.pi * 2.0 ** s * y ** (2 * (m + 1)) / cmath.sin(math.pi * s)
    return -math.sin(y) * (poly + front * series)


def gamma_sq(params: LInterpParams, y: float,
             config: EvalConfig = DEFAULT_CONFIG,
             path: str = "identity") -> complex:
    if path == "identity":
        return gamma_sq_identity(params, y, config)
    if path == "series":
        return gamma_sq_series(params, y, config)
    raise ValueError(f"unknown path {path!r}")


def node_value_sq(params: LInterpParams, n: int) -> complex:
    """Common value of phi and gamma at pi n; zero on the exceptional set."""
    s = params.s
    if n == 0:
        return 0.0j
    esum = 0.0j
    for l in range(1, params.q):
        c = params.chi(l)
        if abs(c) > 0.5:
            phase = 2.0 * math.pi * ((n * l) % params.q) / params.q
            esum += c * cmath.sin(phase + math.pi * s / 2.0
                                  * (1.0 if n > 0 else -1.0))
    if abs(esum) < 1e-12:
        return 0.0j
    return (-math.pi * 2.0 ** (s - 1.0) * (-1.0) ** n
            * (math.pi * abs(n)) ** s / cmath.sin(math.pi * s) * esum)


def masked_point(y: float, k: int = 0) -> float:
    """Nearest y' with |sin(y' + pi k/2)| >= 1/2."""
    phase = (y + math.pi * k / 2.0) % math.pi
    # land strictly inside the window so rounding cannot cross the floor
    lo, hi = math.pi / 6.0 + 1e-3, 5.0 * math.pi / 6.0 - 1e-3
    if phase < lo:
        return y + (lo - phase)
    if phase > hi:
        return y - (phase - hi)
    return y


def L_limit(params: LInterpParams, y_max: float = 320.0,
            config: EvalConfig = DEFAULT_CONFIG) -> tuple[complex, float]:
    """L(s, chi) from the masked limit of Fstar, Richardson-extrapolated."""
    y0 = max(10.0, y_max / 16.0)
    samples = []
    y = y0
    while y <= y_max * 1.0001:
        ym = masked_point(y, k=0)
        samples.append((ym, Fstar(params, ym, config)))
        y *= 2.0
    order = min(2, len(samples) - 1)
    limit, err = richardson_limit(samples, order)
    norm = params.q ** params.s * complex_gamma(params.s, config)
    return limit / norm, err / abs(norm)


def starred_q3(s: complex, y: float, chi3: DirichletCharacter,
               config: EvalConfig = DEFAULT_CONFIG) -> tuple[complex, complex]:
    """(phi*, gamma*) for q=3: nodes 2 pi (d +- 1/3).

    phi* has the closed form pi (3|y|)^s / (2 sin(pi s/2)); gamma* is
    gamma_{s,3}(3y/2) / sin(y/2) with the removable singularity at
    y in 2 pi Z handled by symmetric offset averaging.
    """
    params = LInterpParams(s, chi3)
    phi_star = (math.pi * (3.0 * abs(y)) ** s
                / (2.0 * cmath.sin(math.pi * s / 2.0))) if y != 0.0 else 0.0j

    def gstar(yy: float) -> complex:
        return gamma_sq_identity(params, 1.5 * yy, config) / math.sin(yy / 2.0)

    two_pi_dist = abs(y / (2.0 * math.pi) - round(y / (2.0 * math.pi))) * 2.0 * math.pi
    if y == 0.0:
        gamma_star = 0.0j
    elif two_pi_dist < _NODE_GUARD:
        eps = 1e-3
        gamma_star = 0.5 * (gstar(y + eps) + gstar(y - eps))
    else:
        gamma_star = gstar(y)
    return phi_star, gamma_star


def starred_q4(s: complex, y: float,
               config: EvalConfig = DEFAULT_CONFIG) -> tuple[complex, complex]:
    """(phi*, gamma*) for q=4 = 2^s times the (k=1, v=1/2) chain."""
    p = InterpParams(1, s, 0.5)
    scale = 2.0 ** complex(s)
    phi_star = scale * f_ksv(p, y)
    gamma_star = scale * g_via_identity(p, y, config)
    return phi_star, gamma_star
