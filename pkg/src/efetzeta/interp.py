"""Core interpolation objects for k in {0, 1}.

f is the |y|^s-type target, g the interpolating entire function of
exponential type 1 (explicit cardinal-type series), F the semi-infinite
integral whose boundedness drives the limit theorems.  The identity
sin(y + pi k/2) * F(y) = f(y) - g(y) ties the three together and provides
the node-free evaluation path for g.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .config import DEFAULT_CONFIG, EvalConfig
from .errors import (DomainError, IrrationalV, NearNode, PoleProximity)
from .numerics import complex_gamma, integrate_semi_infinite
from .special import hurwitz_zeta, lerch_phi, PhiArgs

_NODE_GUARD = 1e-6


def _as_fraction(v: float) -> Fraction:
    f = Fraction(v).limit_denominator(10_000)
    if abs(float(f) - v) > 1e-12:
        raise IrrationalV(f"v={v!r} is not (close to) a small rational")
    return f


@dataclass(frozen=True)
class InterpParams:
    """The admissible triple (k, s, v)."""

    k: int
    s: complex
    v: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "s", complex(self.s))
        msg = validate_params(self.k, self.s, self.v)
        if msg is not None:
            raise DomainError(msg)

    @property
    def m(self) -> int:
        return m_k(self.k, self.s)

    def node(self, n: int) -> float:
        return math.pi * (n + self.k / 2.0)


def m_k(k: int, s: complex) -> int:
    """Polynomial depth: floor((Re s - 1)/2) for k=0, floor(Re s / 2) for k=1."""
    sr = complex(s).real
    return math.floor((sr - 1.0) / 2.0) if k == 0 else math.floor(sr / 2.0)


def validate_params(k: int, s: complex, v: float,
                    config: EvalConfig = DEFAULT_CONFIG) -> str | None:
    """None if (k, s, v) is admissible, else the violated clause."""
    s = complex(s)
    sr = s.real
    guard = config.pole_guard
    if k not in (0, 1):
        return f"k must be 0 or 1, got {k}"
    if not 0.0 < v <= 1.0:
        return f"v must lie in (0, 1], got {v}"

    # distance from integers guards 1/sin(pi s); even/odd integers guard
    # 1/sin(pi s/2) and 1/cos(pi s/2)
    nearest = round(sr)
    if abs(s - nearest) < guard:
        return f"s={s} within pole guard of the integer {nearest}"

    def natural(x: complex) -> bool:
        return abs(x.imag) < guard and abs(x.real - round(x.real)) < guard \
            and round(x.real) >= 1

    if k == 0 and v < 1.0:
        if sr <= 1.0:
            return f"k=0, v in (0,1) requires Re s > 1, got Re s={sr}"
        m = round(sr)
        if m % 2 == 1 and m >= 3 and abs(sr - m) < guard:
            return f"Re s must avoid the odd integers 3,5,...; Re s={sr}"
        if natural(s):
            return f"s must not be a natural number; s={s}"
        return None
    if k == 0:  # v == 1
        d = math.floor((sr - 1.0) / 2.0)
        if d < 0 or not (1.0 + 2 * d + guard < sr < 2.0 + 2 * d - guard):
            return (f"k=0, v=1 requires Re s in some (1+2d, 2+2d); Re s={sr}")
        return None
    # k == 1
    if sr <= 0.0:
        return f"k=1 requires Re s > 0, got Re s={sr}"
    m = round(sr)
    if m % 2 == 0 and m >= 2 and abs(sr - m) < guard:
        return f"Re s must avoid the even integers 2,4,...; Re s={sr}"
    if natural(s):
        return f"s must not be a natural number; s={s}"
    return None


def f_ksv(params: InterpParams, y: float) -> complex:
    """The interpolated target: a combination of |y|^s and |y|^s sgn y
    modulated at frequency 2v-1."""
    if y == 0.0:
        return 0.0j
    k, s, v = params.k, params.s, params.v
    ay = abs(y)
    sgn = 1.0 if y > 0 else -1.0
    phase = (2.0 * v - 1.0) * y - math.pi * k / 2.0
    pow_ys = ay ** s
    return -math.pi * 2.0 ** (s - 2.0) * (
        pow_ys * math.sin(phase) / cmath.sin(math.pi * s / 2.0)
        + pow_ys * sgn * math.cos(phase) / cmath.cos(math.pi * s / 2.0))


def node_value(params: InterpParams, n: int) -> complex:
    """Common value of f and g at the node pi(n + k/2), in closed form."""
    k, s, v = params.k, params.s, params.v
    t = n + k / 2.0
    if t == 0.0:
        return 0.0j
    sgn = 1.0 if t > 0 else -1.0
    return (-math.pi * 2.0 ** (s - 1.0) * (-1.0) ** (n + k)
            * (math.pi * abs(t)) ** s
            * cmath.sin(math.pi * (2 * n + k) * v + math.pi * s / 2.0 * sgn)
            / cmath.sin(math.pi * s))


def _phi(k: int, s: complex, v: float, config: EvalConfig) -> complex:
    return lerch_phi(PhiArgs(1 if k == 0 else -1, s, v), config)


def F_ksv(params: InterpParams, y: float,
          config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """Direct quadrature of the defining integral; even in y."""
    if y == 0.0:
        raise DomainError("F is defined for y != 0")
    k, s, v = params.k, params.s, params.v
    return _F_raw(k, s, v, y, config)


def _F_raw(k: int, s: complex, v: float, y: float,
           config: EvalConfig) -> complex:
    sign = 1.0 if k == 0 else -1.0
    four_y2 = 4.0 * y * y

    def integrand(t: float) -> complex:
        if t < 1e-300:
            return 0.0j
        den = math.expm1(t) if sign == 1.0 else math.exp(t) + 1.0
        kern = 1.0 / (den * (1.0 + t * t / four_y2))
        return t ** (s - 1.0) * math.exp((1.0 - v) * t) * kern

    alpha = s.real - 2.0 if k == 0 else s.real - 1.0
    return integrate_semi_infinite(integrand, alpha, config,
                                   decay_rate=min(v, 1.0))


def recurrence_F(params: InterpParams, y: float, m: int,
                 config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """F at s rebuilt from F at s-2m plus the explicit polynomial part."""
    k, s, v = params.k, params.s, params.v
    if m < 0:
        raise DomainError("m must be >= 0")
    red = (s - 2 * m).real
    if (k == 0 and red <= 1.0) or (k == 1 and red <= 0.0):
        raise DomainError(
            f"reduction s -> s-2m leaves the convergence domain: Re={red}")
    acc = 0.0j
    u = (2.0 * y) ** 2
    upow = 1.0
    for j in range(1, m + 1):
        upow *= u
        acc += (-1.0) ** (j - 1) * complex_gamma(s - 2 * j, config) \
            * _phi(k, s - 2 * j, v, config) * upow
    tail = (-1.0) ** m * (2.0 * y) ** (2 * m) * _F_raw(k, s - 2 * m, v, y, config)
    return acc + tail


def _nearest_node_distance(params: InterpParams, y: float) -> float:
    k = params.k
    t = abs(y) / math.pi - k / 2.0
    n = max(round(t), 1 - k)
    best = math.inf
    for cand in (n - 1, n, n + 1):
        if cand >= 1 - k:
            best = min(best, abs(abs(y) - params.node(cand)))
    return best


def _series_sum(y: float, sigma: complex, offset: float, n0: int,
                period: int, coef, pair: bool,
                config: EvalConfig) -> complex:
    """sum_{n>=n0} node^sigma coef(n) / (y^2 - node^2), node = pi(n+offset).

    Direct summation until the nodes clear 2|y|, then an analytic tail:
    the kernel 1/(y^2-node^2) is expanded in powers of (y/node)^2 and each
    layer is closed with Hurwitz zeta values over the residue classes of n
    mod period (coef must be period-periodic).
    """
    y2 = y * y
    n_direct = max(math.ceil(2.0 * abs(y) / math.pi), n0 + 1) + 32 * period
    terms = []
    for n in range(n0, n_direct + 1):
        node = math.pi * (n + offset)
        terms.append(node ** sigma * coef(n) / (y2 - node * node))
    if pair:
        # group consecutive pairs before accumulating: the grouped series is
        # absolutely summable in the conditionally convergent regime
        grouped = [terms[i] + terms[i + 1] for i in range(0, len(terms) - 1, 2)]
        if len(terms) % 2:
            grouped.append(terms[-1])
        acc = sum(grouped)
    else:
        acc = sum(terms)

    # analytic tail over n > n_direct
    n_start = n_direct + 1
    first_node = math.pi * (n_start + offset)
    ratio = (y / first_node) ** 2
    tail = 0.0j
    scale_guess = None
    for j in range(config.tail_expansion_depth + 1):
        sj = 2 * j + 2 - sigma  # Hurwitz argument for this layer
        layer = 0.0j
        for r in range(period):
            n_r = n_start + r
            a_r = (n_r + offset) / period
            layer += coef(n_r) * hurwitz_zeta(sj, a_r, config)
        term = -(y2 ** j) * (math.pi * period) ** (sigma - 2 * j - 2) * layer
        tail += term
        if scale_guess is None:
            scale_guess = max(abs(term), 1e-300)
        elif abs(term) < config.series_rel_tol * 1e-3 * max(abs(acc + tail), scale_guess):
            break
    return acc + tail


def g_series(params: InterpParams, y: float,
             config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """Explicit cardinal-type series for g; needs rational v = a/b."""
    k, s, v = params.k, params.s, params.v
    frac = _as_fraction(v)
    a, b = frac.numerator, frac.denominator
    if y == 0.0:
        return 0.0j
    if _nearest_node_distance(params, y) < _NODE_GUARD:
        raise NearNode(f"y={y} within {_NODE_GUARD} of a node; "
                       "use g_via_identity")
    m = params.m
    sigma = s - 2 * m - 1

    def coef(n: int) -> complex:
        # sin(pi(2n+k)v + pi s/2) with the rational phase reduced exactly
        phase = math.pi * (((2 * n + k) * a) % (2 * b)) / b
        return cmath.sin(phase + math.pi * s / 2.0)

    conditional = (k == 0) and (sigma.real > 1.0)
    series = _series_sum(y, sigma, k / 2.0, 1 - k, b, coef,
                         conditional, config)
    poly = 0.0j
    u = (2.0 * y) ** 2
    upow = 1.0
    for j in range(1, m + 1):
        upow *= u
        poly += (-1.0) ** (j - 1) * complex_gamma(s - 2 * j, config) \
            * _phi(k, s - 2 * j, v, config) * upow
    front = math.pi * 2.0 ** s * y ** (2 * (m + 1)) / cmath.sin(math.pi * s)
    return -math.sin(y + math.pi * k / 2.0) * (poly + front * series)


def g_via_identity(params: InterpParams, y: float,
                   config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """g = f - sin(y + pi k/2) F(y): node-free, any real v."""
    if y == 0.0:
        return 0.0j
    return f_ksv(params, y) - math.sin(y + math.pi * params.k / 2.0) \
        * F_ksv(params, y, config)


def delta(params: InterpParams, y: float,
          config: EvalConfig = DEFAULT_CONFIG) -> complex:
    """Interpolation difference f - g, evaluated as sin(y+pi k/2) F(y)."""
    if y == 0.0:
        return 0.0j
    return math.sin(y + math.pi * params.k / 2.0) * F_ksv(params, y, config)
