"""Hazewinkel generators, integrality, congruences, Landweber ladder."""

from fractions import Fraction

import pytest

from taf.chromatic import (
    UnsupportedPrimeError,
    binomial_valuation,
    cor1_check,
    cor2_check,
    ell,
    hazewinkel_v,
    key_lemma_check,
    landweber_check,
)
from taf.exact import ALPHA, is_p_integral
from taf.legendre import legendre


class TestGenerators:
    def test_v1_closed_form(self):
        for p in (5, 13, 17, 29):
            assert hazewinkel_v(1, p) == legendre((p - 1) // 4)

    def test_v1_at_5_is_alpha(self):
        assert hazewinkel_v(1, 5) == ALPHA

    def test_v2_closed_form(self):
        for p in (5, 13):
            lp = legendre((p - 1) // 4)
            lp2 = legendre((p * p - 1) // 4)
            expected = (lp2 - lp ** (p + 1)).scale(Fraction(1, p))
            assert hazewinkel_v(2, p) == expected

    def test_recursion_identity(self):
        # p*ell_2 = v_2 + ell_1 * v_1^p, rearranged.
        p = 13
        lhs = ell(2, p).scale(p)
        rhs = hazewinkel_v(2, p) + ell(1, p) * hazewinkel_v(1, p) ** p
        assert lhs == rhs

    def test_split_prime_required(self):
        for bad in (3, 7, 11):
            with pytest.raises(UnsupportedPrimeError):
                hazewinkel_v(1, bad)

    def test_ell_not_integral_but_v_is(self):
        p = 5
        assert not is_p_integral(ell(1, p).scale(Fraction(1, p)), p)
        assert is_p_integral(hazewinkel_v(2, p), p)


class TestIntegrality:
    def test_desk_scale_key_lemma(self):
        for p in (5, 13, 29, 37):
            assert key_lemma_check(p, 2).all_integral()

    def test_height_three_at_5(self):
        assert key_lemma_check(5, 3).all_integral()


class TestValuation:
    def test_binomial_valuation_matches_direct(self):
        from math import comb

        for p in (5, 13):
            for n, k in [(10, 4), (30, 15), (126, 63)]:
                c = comb(n, k)
                direct = 0
                while c % p == 0:
                    c //= p
                    direct += 1
                assert binomial_valuation(p, n, k) == direct


class TestCorollaries:
    def test_cor1(self):
        assert cor1_check()

    @pytest.mark.parametrize("p", [5, 13, 29, 37])
    def test_cor2(self, p):
        r = cor2_check(p)
        assert r.valuation == 1
        assert r.alpha_divides_v1
        assert r.congruence_mod_alpha
        assert r.v2_mod_p_v1_nonzero
        assert r.passes()

    def test_cor2_rejects_wrong_class(self):
        with pytest.raises(UnsupportedPrimeError):
            cor2_check(17)  # 17 = 1 (mod 8)


class TestLandweber:
    @pytest.mark.parametrize("p", [5, 13])
    def test_ladder(self, p):
        r = landweber_check(p).landweber
        assert r.v1_nonzero_mod_p
        assert r.v2_nonzero_mod_p_v1
        assert r.height2_cozero_check

    def test_report_serializes(self):
        d = landweber_check(5).to_json_dict()
        assert d["prime"] == 5
        assert d["landweber"]["v1_nonzero_mod_p"] is True
