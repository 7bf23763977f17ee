import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from efetzeta.config import DEFAULT_CONFIG
from efetzeta.errors import DomainError, PoleProximity
from efetzeta.special import (PhiArgs, dirichlet_beta, hurwitz_zeta,
                              lerch_phi, riemann_zeta)

# frozen mpmath oracles (30-digit evaluation)
ZETA_15 = 2.6123753486854883433
ZETA_25 = 1.3414872572509171798
ZETA_HALF_10I = complex(1.5448952202967527669, -0.11533646527127337544)
ZETA_HALF_3I = complex(0.53273667097423288392, -0.078896513425833382656)
BETA_15 = 0.86450265346120204036
CATALAN = 0.91596559417721901505
BETA_HALF_3I = complex(1.4685105834601206943, 0.19169891968453042018)
HURWITZ_25_03 = 21.069239202247724917
HURWITZ_03_5 = -4.0957887023215310122
HURWITZ_HALF10I_025 = complex(0.043386611063231386309, 0.76808042228325868085)
LERCH_M1_15_075 = 1.2449163969511125646
LERCH_1_25_THIRD = 16.333044162898847973
FIRST_ZERO_T = 14.134725141734695


class TestHurwitz:
    def test_oracles(self):
        assert hurwitz_zeta(2.5, 0.3) == pytest.approx(HURWITZ_25_03,
                                                       rel=1e-12)
        assert hurwitz_zeta(0.3, 5.0) == pytest.approx(HURWITZ_03_5,
                                                       rel=1e-12)
        assert hurwitz_zeta(0.5 + 10j, 0.25) == pytest.approx(
            HURWITZ_HALF10I_025, rel=1e-11)

    def test_pole(self):
        with pytest.raises(PoleProximity):
            hurwitz_zeta(1.0 + 1e-12, 1.0)

    def test_left_boundary(self):
        with pytest.raises(DomainError):
            hurwitz_zeta(-19.5, 1.0)

    @given(st.floats(min_value=1.2, max_value=6.0),
           st.floats(min_value=0.1, max_value=3.0))
    @settings(max_examples=40, deadline=None)
    def test_shift(self, s, v):
        # zeta(s, v) = v^{-s} + zeta(s, v+1)
        lhs = hurwitz_zeta(s, v)
        rhs = v ** -s + hurwitz_zeta(s, v + 1.0)
        assert abs(lhs - rhs) <= 1e-10 * (1.0 + abs(lhs))


class TestLerchPhi:
    def test_z1_is_hurwitz(self):
        assert lerch_phi(PhiArgs(1, 2.5, 1.0 / 3.0)) == pytest.approx(
            LERCH_1_25_THIRD, rel=1e-12)

    def test_alternating_oracle(self):
        assert lerch_phi(PhiArgs(-1, 1.5, 0.75)) == pytest.approx(
            LERCH_M1_15_075, rel=1e-12)

    def test_verified_path(self):
        val = lerch_phi(PhiArgs(-1, 1.5, 0.75), verify=True)
        assert val == pytest.approx(LERCH_M1_15_075, rel=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            PhiArgs(2, 1.5, 1.0)
        with pytest.raises(DomainError):
            PhiArgs(1, 0.7, 1.0)  # z=1 needs Re s > 1
        with pytest.raises(DomainError):
            PhiArgs(-1, 1.5, -0.5)


class TestRiemannZeta:
    def test_values(self):
        assert riemann_zeta(1.5) == pytest.approx(ZETA_15, rel=1e-12)
        assert riemann_zeta(2.0) == pytest.approx(math.pi ** 2 / 6.0,
                                                  rel=1e-12)
        assert riemann_zeta(2.5) == pytest.approx(ZETA_25, rel=1e-12)

    def test_critical_line(self):
        assert riemann_zeta(0.5 + 10j) == pytest.approx(ZETA_HALF_10I,
                                                        rel=1e-11)
        assert riemann_zeta(0.5 + 3j) == pytest.approx(ZETA_HALF_3I,
                                                       rel=1e-11)

    def test_first_zero(self):
        assert abs(riemann_zeta(0.5 + 1j * FIRST_ZERO_T)) < 1e-12


class TestDirichletBeta:
    def test_values(self):
        assert dirichlet_beta(2.0) == pytest.approx(CATALAN, rel=1e-12)
        assert dirichlet_beta(1.5) == pytest.approx(BETA_15, rel=1e-12)
        assert dirichlet_beta(0.5 + 3j) == pytest.approx(BETA_HALF_3I,
                                                         rel=1e-11)

    def test_leibniz(self):
        assert dirichlet_beta(1.0) == pytest.approx(math.pi / 4.0, rel=1e-12)


class TestRepresentationIdentities:
    @given(st.floats(min_value=1.2, max_value=4.0),
           st.floats(min_value=-3.0, max_value=3.0))
    @settings(max_examples=30, deadline=None)
    def test_half_shift(self, sr, si):
        s = complex(sr, si)
        lhs = riemann_zeta(s)
        rhs = lerch_phi(PhiArgs(1, s, 0.5)) / (2.0 ** s - 1.0)
        assert abs(lhs - rhs) <= 1e-10 * abs(lhs)

    @given(st.floats(min_value=0.3, max_value=4.0),
           st.floats(min_value=-3.0, max_value=3.0))
    @settings(max_examples=30, deadline=None)
    def test_beta_form(self, sr, si):
        s = complex(sr, si)
        lhs = dirichlet_beta(s)
        rhs = 2.0 ** (-s) * lerch_phi(PhiArgs(-1, s, 0.5))
        assert abs(lhs - rhs) <= 1e-10 * max(abs(lhs), 1e-6)
