"""Acceptance gate: nine quantitative criteria, one pass/fail line each.

Every target number is a frozen independent oracle (30-digit mpmath
evaluations of zeta/beta/L/Gamma, recorded as literals) or an exact
constant; the library under test never produces its own expectations.
Run with -s to see the status lines.
"""

import cmath
import math

import numpy as np
import pytest

from efetzeta.analysis import Classification, decay_slope, extract_limit, \
    zero_probe
from efetzeta.characters import builtin_characters, eval_Pq, eval_Tq, \
    exceptional_set, gauss_sum
from efetzeta.errors import DivisionNearZero
from efetzeta.interp import InterpParams, F_ksv, f_ksv, g_series, \
    g_via_identity, node_value, recurrence_F
from efetzeta.lfunc import Fstar, LInterpParams, L_value, gamma_sq, \
    node_value_sq, phi_sq, starred_q4
from efetzeta.numerics import complex_gamma, richardson_limit
from efetzeta.special import PhiArgs, dirichlet_beta, lerch_phi, riemann_zeta

# ---------------------------------------------------------------- oracles
ZETA_15 = 2.6123753486854883433        # Euler-Maclaurin, 30 digits
BETA_15 = 0.86450265346120204036       # accelerated alternating series
BETA_HALF_3I = complex(1.4685105834601206943, 0.19169891968453042018)
L07_CHI3 = 0.53333900074904089697      # Hurwitz combination mod 3
FIRST_ZERO_T = 14.134725141734695      # alternating-series bisection

CHARS = builtin_characters()


def _report(num, name, ok):
    print(f"[criterion {num}] {'PASS' if ok else 'FAIL'} - {name}")
    assert ok, f"criterion {num}: {name}"


def _masked(y, k):
    return abs(math.sin(y + math.pi * k / 2.0)) >= 0.5


def test_criterion_1_identity_suite():
    rng = np.random.default_rng(20260826)
    ok = True
    for _ in range(50):
        s = complex(1.2 + 2.8 * rng.random(), 6.0 * rng.random() - 3.0)
        z = riemann_zeta(s)
        checks = [
            lerch_phi(PhiArgs(1, s, 1.0)),
            lerch_phi(PhiArgs(1, s, 0.5)) / (2.0 ** s - 1.0),
            lerch_phi(PhiArgs(-1, s, 1.0)) / (1.0 - 2.0 ** (1.0 - s)),
        ]
        ok = ok and all(abs(c - z) <= 1e-10 * abs(z) for c in checks)
        b = dirichlet_beta(s)
        ok = ok and abs(2.0 ** (-s) * lerch_phi(PhiArgs(-1, s, 0.5)) - b) \
            <= 1e-10 * abs(b)
    _report(1, "four Phi-representation identities, 50 random s, 1e-10", ok)


def test_criterion_2_interpolation():
    triples = [
        (0, 1.5, 1.0), (0, 2.5, 0.5), (0, 1.5, 1.0 / 3.0), (0, 3.5, 1.0),
        (0, 1.5 + 3j, 0.75), (1, 1.5, 1.0), (1, 0.7, 0.5), (1, 4.5, 1.0),
        (1, 2.5, 1.0 / 3.0), (1, 0.5 + 3j, 0.5),
    ]
    ok = True
    for k, s, v in triples:
        params = InterpParams(k, s, v)
        for n in range(-8, 9):
            fv = f_ksv(params, params.node(n))
            ok = ok and abs(node_value(params, n) - fv) \
                <= 1e-9 * (1.0 + abs(fv))
    for name in ("chi_3", "chi_4"):
        p = LInterpParams(1.5, CHARS[name])
        for n in range(-8, 9):
            if n == 0:
                continue
            fv = phi_sq(p, math.pi * n)
            ok = ok and abs(node_value_sq(p, n) - fv) \
                <= 1e-9 * (1.0 + abs(fv))
    _report(2, "node values match the target, 12-triple grid, |n|<=8", ok)


def test_criterion_3_two_path_identity():
    rng = np.random.default_rng(3)
    ok = True
    cases = [InterpParams(0, 2.5, 0.5), InterpParams(1, 1.5, 0.5),
             InterpParams(0, 1.5, 1.0 / 3.0), InterpParams(1, 0.5 + 3j, 1.0)]
    count = 0
    while count < 30:
        y = float(2.0 + 38.0 * rng.random())
        params = cases[count % len(cases)]
        if not _masked(y, params.k):
            continue
        count += 1
        gi = g_via_identity(params, y)
        gs = g_series(params, y)
        ok = ok and abs(gi - gs) <= 1e-7 * (1.0 + abs(gi))
    for chi_name, s in (("chi_3", 0.7), ("chi_5_1", 2.5)):
        p = LInterpParams(s, CHARS[chi_name])
        for y in (2.7, 8.3, 14.9):
            gi = gamma_sq(p, y, path="identity")
            gs = gamma_sq(p, y, path="series")
            ok = ok and abs(gi - gs) <= 1e-7 * (1.0 + abs(gi))
    _report(3, "series vs identity paths, 30 masked points "
               "(incl. conditionally convergent), 1e-7", ok)


def test_criterion_4_limit_recovery():
    ok = True
    est, _ = extract_limit(InterpParams(1, 1.5, 1.0), y_max=320.0)
    zeta_hat = est / (complex_gamma(1.5) * (1.0 - 2.0 ** -0.5))
    ok = ok and abs(zeta_hat - ZETA_15) <= 1e-6 * ZETA_15

    est, _ = extract_limit(InterpParams(1, 1.5, 0.5), y_max=320.0)
    beta_hat = est / (complex_gamma(1.5) * 2.0 ** 1.5)
    ok = ok and abs(beta_hat - BETA_15) <= 1e-6 * BETA_15

    s = 0.5 + 3j
    est, _ = extract_limit(InterpParams(1, s, 0.5), y_max=320.0)
    beta_hat = est / (complex_gamma(s) * 2.0 ** s)
    ok = ok and abs(beta_hat - BETA_HALF_3I) <= 1e-6 * abs(BETA_HALF_3I)

    est, _ = extract_limit(LInterpParams(0.7, CHARS["chi_3"]), y_max=320.0)
    l_hat = est / (3.0 ** 0.7 * complex_gamma(0.7))
    ok = ok and abs(l_hat - L07_CHI3) <= 1e-6 * L07_CHI3
    _report(4, "limits recover zeta(1.5), beta(1.5), beta(0.5+3i), "
               "L(0.7,chi mod 3) to 1e-6", ok)


def test_criterion_5_decay_rate():
    ok = True
    for k, s, v in [(1, 1.5, 1.0), (1, 1.5, 0.5), (0, 1.5, 1.0),
                    (1, 0.5 + 3j, 0.5)]:
        slope = decay_slope(InterpParams(k, s, v))
        ok = ok and -2.3 <= slope <= -1.7
    _report(5, "log-log residual slope in [-2.3, -1.7], 4 triples", ok)


def test_criterion_6_recurrence():
    ok = True
    for k, s, m in [(1, 4.5, 2), (0, 3.5, 1)]:
        params = InterpParams(k, s, 1.0)
        for y in (3.3, 7.9, 15.1):
            direct = F_ksv(params, y)
            rebuilt = recurrence_F(params, y, m)
            ok = ok and abs(direct - rebuilt) <= 1e-8 * abs(direct)
    _report(6, "dual-path integral recurrence to 1e-8", ok)


def test_criterion_7_characters():
    ok = True
    for name, chi in CHARS.items():
        if chi.q == 1 or chi.is_principal:
            continue
        ok = ok and abs(abs(gauss_sum(chi)) - math.sqrt(chi.q)) <= 1e-11
    for name in ("chi_3", "chi_4", "chi_5_1", "chi_7_1"):
        chi = CHARS[name]
        es = exceptional_set(chi, 2 * chi.q)
        expect = sorted(n for n in range(-2 * chi.q, 2 * chi.q + 1)
                        if n == 0 or math.gcd(abs(n), chi.q) > 1)
        ok = ok and es.sorted() == expect
        checked = 0
        for y in np.linspace(-7.0, 7.0, 29):
            try:
                lhs = eval_Pq(chi, float(y)) * eval_Tq(chi, float(y))
            except DivisionNearZero:
                continue  # quotient form undefined at zeros of P (q > 4)
            checked += 1
            rhs = (2.0 / 1j) * math.sin(chi.q * float(y) / 2.0)
            ok = ok and abs(lhs - rhs) <= 1e-12 * (1.0 + abs(rhs))
        ok = ok and checked >= 24
    _report(7, "Gauss magnitudes sqrt(q), exceptional-set gcd rule, "
               "T*P identity", ok)


def test_criterion_8_zero_criterion():
    s_zero = 0.5 + 1j * FIRST_ZERO_T
    rep1 = zero_probe(InterpParams(1, s_zero, 1.0), p=1.0)
    rep2 = zero_probe(InterpParams(1, 0.5 + 10j, 1.0), p=1.0)
    rep3 = zero_probe(InterpParams(1, s_zero, 0.5), p=1.0)
    ok = (rep1.classification is Classification.ZERO_CONSISTENT
          and rep1.amplitude_estimate < 5e-3
          and rep1.lp_growth_exponent < 0.2
          and rep2.classification is Classification.NONZERO
          and rep3.classification is Classification.NONZERO)
    _report(8, "zero probe: zeta zero consistent, off-zero and beta probes "
               "nonzero", ok)


def test_criterion_9_q4_identification():
    s = 1.5
    params = InterpParams(1, s, 0.5)
    ok = True
    for y in (1.7, 4.9, 11.3):
        ph, _ = starred_q4(s, y)
        ok = ok and abs(ph - 2.0 ** s * f_ksv(params, y)) \
            <= 1e-10 * (1.0 + abs(ph))
    samples = []
    for y in (40.0, 80.0, 160.0, 320.0):
        ym = round(y / math.pi) * math.pi
        ph, gm = starred_q4(s, ym)
        samples.append((ym, (ph - gm) / math.cos(ym)))
    est, _ = richardson_limit(samples, 2)
    beta_hat = est / (4.0 ** s * complex_gamma(s))
    ok = ok and abs(beta_hat - BETA_15) <= 1e-6 * BETA_15
    _report(9, "q=4 chain identifies 2^s scaling and recovers beta(1.5) "
               "to 1e-6", ok)
