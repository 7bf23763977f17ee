import math

import pytest

from efetzeta.characters import builtin_characters, principal_character
from efetzeta.config import DEFAULT_CONFIG
from efetzeta.errors import DomainError, PoleProximity
from efetzeta.interp import InterpParams, f_ksv, g_via_identity
from efetzeta.lfunc import (Fstar, L_limit, L_value, LInterpParams,
                            gamma_sq, masked_point, node_value_sq, phi_sq,
                            starred_q3, starred_q4)
from efetzeta.numerics import complex_gamma, richardson_limit
from efetzeta.special import dirichlet_beta, riemann_zeta

# frozen mpmath oracles
L2_CHI3 = 0.78130241289648629687
L07_CHI3 = 0.53333900074904089697

CHARS = builtin_characters()
CHI3, CHI4, CHI5 = CHARS["chi_3"], CHARS["chi_4"], CHARS["chi_5_1"]


class TestLValue:
    def test_mod4_is_beta(self):
        for s in (1.5, 0.7, 0.5 + 3j):
            assert L_value(s, CHI4) == pytest.approx(dirichlet_beta(s),
                                                     rel=1e-12)

    def test_mod3_oracles(self):
        assert L_value(2.0, CHI3) == pytest.approx(L2_CHI3, rel=1e-12)
        assert L_value(0.7, CHI3) == pytest.approx(L07_CHI3, rel=1e-12)

    def test_principal_euler_factor(self):
        chi0 = principal_character(2)
        s = 2.5
        assert L_value(s, chi0) == pytest.approx(
            (1.0 - 2.0 ** -s) * riemann_zeta(s), rel=1e-12)

    def test_principal_pole(self):
        with pytest.raises(PoleProximity):
            L_value(1.0, principal_character(3))

    def test_domain(self):
        with pytest.raises(DomainError):
            L_value(-0.5, CHI3)


class TestParams:
    def test_rejects_principal(self):
        with pytest.raises(DomainError):
            LInterpParams(1.5, principal_character(4))

    def test_rejects_left_halfplane(self):
        with pytest.raises(DomainError):
            LInterpParams(-0.5, CHI3)

    def test_m(self):
        assert LInterpParams(1.5, CHI3).m == 0
        assert LInterpParams(4.5, CHI3).m == 2


class TestSuperposition:
    def test_phi_sum(self):
        s = 1.5
        for chi in (CHI3, CHI4, CHI5):
            p = LInterpParams(s, chi)
            for y in (3.3, -7.1):
                direct = sum(chi(l) * f_ksv(InterpParams(0, s, l / chi.q), y)
                             for l in range(1, chi.q) if abs(chi(l)) > 0.5)
                assert abs(phi_sq(p, y) - direct) \
                    <= 1e-10 * (1.0 + abs(direct))


class TestTwoPaths:
    @pytest.mark.parametrize("s", [0.7, 1.5, 0.5 + 3j, 2.5, 4.5])
    def test_gamma(self, s):
        for chi in (CHI3, CHI4, CHI5):
            p = LInterpParams(s, chi)
            for y in (2.7, 5.9, -11.3):
                gi = gamma_sq(p, y, path="identity")
                gs = gamma_sq(p, y, path="series")
                assert abs(gi - gs) <= 1e-10 * (1.0 + abs(gi)), (chi.q, s, y)


class TestNodes:
    def test_interpolation(self):
        for chi in (CHI3, CHI4):
            p = LInterpParams(1.5, chi)
            for n in range(-6, 7):
                if n == 0:
                    continue
                nv = node_value_sq(p, n)
                fv = phi_sq(p, math.pi * n)
                assert abs(nv - fv) <= 1e-9 * (1.0 + abs(fv)), (chi.q, n)

    def test_exceptional_vanishing(self):
        p3 = LInterpParams(1.5, CHI3)
        p4 = LInterpParams(1.5, CHI4)
        for n in (3, 6, -9):
            assert node_value_sq(p3, n) == 0.0
        for n in (2, 4, -6):
            assert node_value_sq(p4, n) == 0.0


class TestMask:
    def test_masked_point(self):
        for k in (0, 1):
            for y in (10.0, 25.0, 79.0, 160.0, 320.0):
                ym = masked_point(y, k)
                assert abs(math.sin(ym + math.pi * k / 2.0)) >= 0.5
                assert abs(ym - y) < math.pi


class TestLimit:
    def test_fstar_decay(self):
        p = LInterpParams(0.7, CHI3)
        tgt = complex_gamma(0.7) * 3.0 ** 0.7 * L_value(0.7, CHI3)
        errs = [abs(Fstar(p, masked_point(y)) - tgt) for y in (40.0, 160.0)]
        assert errs[1] < errs[0] / 8.0
        assert errs[1] < 1e-3

    def test_l_limit(self):
        for chi, s in ((CHI3, 0.7), (CHI4, 1.5)):
            p = LInterpParams(s, chi)
            est, err = L_limit(p, 320.0)
            assert abs(est - L_value(s, chi)) < 1e-6


class TestStarred:
    def test_q3_nodes(self):
        s = 0.7
        for d in (0, 1, 2, -1):
            for sg in (1, -1):
                y = 2.0 * math.pi * (d + sg / 3.0)
                ph, gm = starred_q3(s, y, CHI3)
                assert abs(ph - gm) <= 1e-10 * (1.0 + abs(ph))

    def test_q3_closed_form(self):
        s, y = 0.7, 5.1
        ph, _ = starred_q3(s, y, CHI3)
        import cmath
        expect = math.pi * (3.0 * abs(y)) ** s \
            / (2.0 * cmath.sin(math.pi * s / 2.0))
        assert ph == pytest.approx(expect, rel=1e-12)

    def test_q3_limit(self):
        s = 0.7
        tgt = complex_gamma(s) * 3.0 ** s * L_value(s, CHI3)
        samples = []
        for y in (30.0, 60.0, 120.0, 240.0):
            ym = round(y / (2.0 * math.pi)) * 2.0 * math.pi + 1.0
            ph, gm = starred_q3(s, ym, CHI3)
            samples.append((ym, (ph - gm) / (1.0 + 2.0 * math.cos(ym))))
        est, _ = richardson_limit(samples, 2)
        assert abs(est - tgt) < 1e-6 * abs(tgt)

    def test_q4_scaling(self):
        s = 1.5
        p = InterpParams(1, s, 0.5)
        for y in (2.3, 6.8):
            ph, gm = starred_q4(s, y)
            assert ph == pytest.approx(2.0 ** s * f_ksv(p, y), rel=1e-12)
            assert gm == pytest.approx(2.0 ** s * g_via_identity(p, y),
                                       rel=1e-10)
