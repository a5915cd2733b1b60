import random

import pytest

from solvsplit import (
    IntMatrix2,
    centralizer_description,
    commutes,
    express_power,
    is_reversible,
    mat_pow,
    standard_form_parameter,
)
from solvsplit.centralizer import GL_EXTRA_NEG, GL_EXTRA_POS
from solvsplit.errors import (
    NotAnosov,
    NotCommuting,
    NotExpressible,
    NotStandardForm,
)

from _helpers import commuting_unimodular_scan, random_sl2, signed_power_orbit

L3 = IntMatrix2(3, -1, 1, 0)
L3N = IntMatrix2(-3, -1, 1, 0)
L4 = IntMatrix2(4, -1, 1, 0)


class TestCommutes:
    def test_examples(self):
        assert commutes(IntMatrix2(-2, 1, -1, 1), L3)
        assert commutes(IntMatrix2(2, 1, -1, -1), L3N)
        assert not commutes(IntMatrix2(1, 1, 0, 1), L3)


class TestExpressPower:
    def test_identity_and_negative_identity(self):
        assert express_power(IntMatrix2(1, 0, 0, 1), L3) == (1, 0)
        assert express_power(IntMatrix2(-1, 0, 0, -1), L3) == (-1, 0)

    def test_example_negative_cube(self):
        assert express_power(IntMatrix2(-56, 15, -15, 4), L4) == (-1, 3)

    def test_det_minus_one_is_not_expressible(self):
        with pytest.raises(NotExpressible):
            express_power(IntMatrix2(-2, 1, -1, 1), L3)

    def test_non_commuting_rejected(self):
        with pytest.raises(NotCommuting):
            express_power(IntMatrix2(1, 1, 0, 1), L3)

    def test_non_standard_form_rejected(self):
        with pytest.raises(NotStandardForm):
            express_power(IntMatrix2(1, 0, 0, 1), IntMatrix2(2, 1, 1, 1))

    @pytest.mark.parametrize("m", [3, -3, 4, -5, 7])
    def test_round_trip(self, m):
        L = IntMatrix2(m, -1, 1, 0)
        rng = random.Random(31)
        for _ in range(40):
            n = rng.randint(-10, 10)
            sign = rng.choice((1, -1))
            K = mat_pow(L, n)
            if sign == -1:
                K = -K
            assert express_power(K, L) == (sign, n) or (
                n == 0 and express_power(K, L) == (sign, 0)
            )


class TestCentralizerDescription:
    def test_m3(self):
        desc = centralizer_description(L3)
        assert desc.gl_extra == GL_EXTRA_POS
        assert desc.gl_extra.det() == -1
        assert desc.gl_extra @ desc.gl_extra == L3
        assert desc.gl_extra_square == (1, 1)
        assert desc.reversible

    def test_m_minus_3(self):
        desc = centralizer_description(L3N)
        assert desc.gl_extra == GL_EXTRA_NEG
        # the square lands on -L, recorded rather than assumed
        assert desc.gl_extra_square == (-1, 1)
        assert desc.gl_extra @ desc.gl_extra == -L3N

    def test_m4_has_no_extra_coset(self):
        desc = centralizer_description(L4)
        assert desc.gl_extra is None
        assert not desc.reversible

    def test_rejects_non_standard_form(self):
        with pytest.raises(NotStandardForm):
            centralizer_description(IntMatrix2(2, 1, 1, 1))
        with pytest.raises(NotStandardForm):
            standard_form_parameter(IntMatrix2(2, -1, 1, 0))


class TestReversibility:
    def test_standard_forms(self):
        res = is_reversible(L3)
        assert res.reversible
        K = res.witness
        assert K @ L3 @ K.inverse() == mat_pow(L3, -1)
        assert not is_reversible(L4).reversible

    def test_hand_checked_witness_is_valid(self):
        K = IntMatrix2(1, -2, 1, -1)
        assert K @ L3 @ K.inverse() == mat_pow(L3, -1)

    def test_conjugate_of_trace3_form(self):
        res = is_reversible(IntMatrix2(2, 1, 1, 1))
        assert res.reversible
        K = res.witness
        L = IntMatrix2(2, 1, 1, 1)
        assert K @ L @ K.inverse() == mat_pow(L, -1)

    def test_rejects_non_anosov(self):
        with pytest.raises(NotAnosov):
            is_reversible(IntMatrix2(1, 1, 0, 1))

    def test_conjugation_invariance(self):
        rng = random.Random(32)
        for base in (L3, L4, IntMatrix2(5, -1, 1, 0)):
            expected = is_reversible(base).reversible
            for _ in range(60):
                K = random_sl2(rng)
                assert is_reversible(K @ base @ K.inverse()).reversible == expected


class TestCommutantScan:
    @pytest.mark.parametrize("m", [3, -3, 4, 5])
    def test_box_scan_matches_predicted_cosets(self, m):
        # smaller box here; the acceptance suite runs the full [-40, 40] scan
        L = IntMatrix2(m, -1, 1, 0)
        desc = centralizer_description(L)
        found = {K.entries() for K in commuting_unimodular_scan(L, bound=15)}
        expected = signed_power_orbit(L, bound=15, extra=desc.gl_extra)
        assert found == expected
