"""Shared numerical kernels.

Complex gamma (Lanczos), semi-infinite quadrature with an algebraic origin
endpoint, alternating-series acceleration (Cohen-Rodriguez Villegas-Zagier),
and Richardson extrapolation in powers of 1/y^2.
"""

from __future__ import annotations

import cmath
import math
from typing import Callable, Sequence

from scipy.integrate import quad

from .config import DEFAULT_CONFIG, EvalConfig
from .errors import (InsufficientSamples, NonConvergent, PoleProximity,
                     ToleranceNotMet)

# Lanczos g=7, 9 coefficients (double precision workhorse).
_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

_SQRT_TWO_PI = math.sqrt(2.0 * math.pi)


def _dist_to_nonpositive_integers(s: complex) -> float:
    if s.real > 0.5:
        return abs(s)  # irrelevant, just something large enough
    n = round(s.real)
    if n > 0:
        n = 0
    return abs(s - n)


def complex_gamma(s: complex, config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """Gamma function for complex s, reflection formula for Re s < 0.5."""
    s = complex(s)
    if _dist_to_nonpositive_integers(s) < config.pole_guard:
        raise PoleProximity(f"gamma pole too close: s={s}")
    if s.real < 0.5:
        # Gamma(s) Gamma(1-s) = pi / sin(pi s)
        return math.pi / (cmath.sin(math.pi * s) * complex_gamma(1.0 - s, config))
    z = s - 1.0
    x = _LANCZOS_COEF[0]
    for i in range(1, 9):
        x += _LANCZOS_COEF[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _SQRT_TWO_PI * t ** (z + 0.5) * cmath.exp(-t) * x


def log_abs_gamma(s: complex, config: EvalConfig = DEFAULT_CONFIG) -> float:
    """log|Gamma(s)|, convenient as a magnitude scale."""
    return math.log(abs(complex_gamma(s, config)))


def integrate_semi_infinite(
    integrand: Callable[[float], complex],
    endpoint_exponent: float,
    config: EvalConfig = DEFAULT_CONFIG,
    decay_rate: float = 1.0,
) -> complex:
    """Integrate f on (0, inf) where f ~ t^alpha near 0 and decays like e^{-ct}.

    Split at t=1; the algebraic endpoint is removed by the substitution
    t = u^{1/(1+alpha)}, the tail is cut at T chosen from the decay rate so
    the remainder bound drops below quad_abs_tol.
    """
    alpha = float(endpoint_exponent)
    if alpha <= -1.0:
        raise NonConvergent(f"endpoint exponent {alpha} <= -1")
    if decay_rate <= 0.0:
        raise NonConvergent(f"decay rate {decay_rate} <= 0")

    beta = 1.0 / (1.0 + alpha)

    def head(u: float) -> complex:
        t = u ** beta
        return integrand(t) * beta * u ** (beta - 1.0)

    # e^{-cT} * T^margin < abs_tol; generous polynomial margin.
    T = max(40.0, (-math.log(config.quad_abs_tol) + 30.0) / decay_rate)

    def _piece(f: Callable[[float], complex], a: float, b: float) -> complex:
        re, re_err = quad(lambda u: f(u).real, a, b,
                          epsabs=config.quad_abs_tol, epsrel=config.quad_rel_tol,
                          limit=400)
        im, im_err = quad(lambda u: f(u).imag, a, b,
                          epsabs=config.quad_abs_tol, epsrel=config.quad_rel_tol,
                          limit=400)
        val = complex(re, im)
        err = math.hypot(re_err, im_err)
        if err > 1e4 * (config.quad_abs_tol + config.quad_rel_tol * abs(val)):
            raise ToleranceNotMet(
                f"quadrature error estimate {err:.3g} for piece [{a},{b}]")
        return val

    return _piece(head, 0.0, 1.0) + _piece(integrand, 1.0, T)


def alternating_sum_accelerated(
    term: Callable[[int], complex],
    config: EvalConfig = DEFAULT_CONFIG,
) -> complex:
    """Sum_{n>=0} term(n) where term(n) = (-1)^n * (slowly varying envelope).

    Chebyshev-polynomial acceleration (the d_n scheme); error decays like
    (3+sqrt(8))^{-n} for totally monotone envelopes.  The depth is increased
    until two evaluations agree to series_rel_tol or max_terms is hit.
    """

    # term(k) includes its own (-1)^k; the scheme weights expect the positive
    # envelope a_k, so strip the sign before weighting.
    def _cvz_signed(n: int) -> complex:
        d = (3.0 + math.sqrt(8.0)) ** n
        d = (d + 1.0 / d) / 2.0
        b = -1.0
        c = -d
        acc = 0.0 + 0.0j
        for k in range(n):
            c = b - c
            a_k = term(k) * (1.0 if k % 2 == 0 else -1.0)
            acc += c * a_k
            b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0))
        # The scheme approximates sum (-1)^k a_k = sum term(k).
        return acc / d

    # (3+sqrt(8))^n overflows past n ~ 400
    n_cap = min(config.max_terms, 360)
    term_scale = max(abs(term(0)), abs(term(1)))
    n = 24
    prev = _cvz_signed(n)
    while True:
        n2 = n + max(12, n // 2)
        if n2 > n_cap:
            raise ToleranceNotMet(
                f"alternating acceleration budget exhausted at n={n}")
        cur = _cvz_signed(n2)
        # the sum itself may vanish (zeta on the critical line at a zero);
        # allow an absolute roundoff floor tied to the leading-term size
        tol = config.series_rel_tol * abs(cur) + 250.0 * 2.2e-16 * term_scale
        if abs(cur - prev) <= tol:
            return cur
        prev, n = cur, n2


def richardson_limit(
    samples: Sequence[tuple[float, complex]],
    order: int,
) -> tuple[complex, float]:
    """Extrapolate value(y) = L + a/y^2 (+ b/y^4 for order 2) to y -> inf.

    Samples must be sorted by increasing y.  Neville extrapolation in the
    variable x = 1/y^2 to x = 0, using the order+1 largest-y samples; the
    error estimate is the magnitude of the last-stage correction.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    if len(samples) < order + 1:
        raise InsufficientSamples(
            f"need {order + 1} samples for order {order}, got {len(samples)}")
    ys = [y for y, _ in samples]
    if any(y2 <= y1 for y1, y2 in zip(ys, ys[1:])):
        raise ValueError("samples must be strictly increasing in y")

    pts = samples[-(order + 1):]
    xs = [1.0 / (y * y) for y, _ in pts]
    vals = [complex(v) for _, v in pts]
    prev_top = vals[-1]
    for stage in range(1, order + 1):
        new = []
        for i in range(len(vals) - 1):
            x0, x1 = xs[i], xs[i + stage]
            new.append((x0 * vals[i + 1] - x1 * vals[i]) / (x0 - x1))
        prev_top = vals[-1]
        vals = new
    limit = vals[-1]
    err = abs(limit - prev_top) if order >= 1 else 0.0
    return limit, err
