"""
Tests for exact arithmetic in cyclotomic fields.
"""
import sys
from fractions import Fraction
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import mpmath
import pytest

from hodge_atlas.exceptions import FieldMismatch
from hodge_atlas.linalg.cyclotomic import CyclotomicNumber, euler_phi


class TestArithmetic:

    def test_degree(self):
        assert euler_phi(4) == 2
        assert euler_phi(5) == 4
        assert euler_phi(12) == 4

    def test_i_squared(self, i_unit):
        assert i_unit * i_unit == -1
        assert i_unit ** 4 == 1
        assert i_unit.conj() == -i_unit

    def test_zeta5_relation(self, zeta5):
        # 1 + z + z^2 + z^3 + z^4 = 0
        assert sum((zeta5 ** k for k in range(5)), CyclotomicNumber.from_rational(0, 5)).is_zero
        assert zeta5 ** 5 == 1
        assert zeta5 ** -1 == zeta5 ** 4

    def test_inverse(self, zeta5):
        x = 1 + 2 * zeta5 - Fraction(1, 3) * zeta5 ** 3
        assert x * x.inverse() == 1
        assert (x / x) == 1

    def test_zero_has_no_inverse(self):
        with pytest.raises(ZeroDivisionError):
            CyclotomicNumber.from_rational(0, 4).inverse()

    def test_mixed_conductors(self, i_unit, zeta5):
        total = i_unit + zeta5
        assert total.m == 20
        assert total - zeta5 == i_unit

    def test_rationals_compare_across_fields(self):
        assert CyclotomicNumber.from_rational(3, 5) == CyclotomicNumber.from_rational(3, 4)
        assert hash(CyclotomicNumber.from_rational(3, 5)) == hash(Fraction(3))

    def test_lifts_hash_alike(self, i_unit, zeta5):
        x = 1 + 2 * zeta5 - Fraction(1, 3) * zeta5 ** 3
        for a, m in ((i_unit, 20), (i_unit, 12), (x, 20), (zeta5 ** 2, 15)):
            lifted = a.lift(m)
            assert lifted == a
            assert hash(lifted) == hash(a)
            assert len({a, lifted}) == 1

    def test_normalized_trace(self, i_unit, zeta5):
        assert i_unit.normalized_trace() == 0
        assert zeta5.normalized_trace() == Fraction(-1, 4)
        assert CyclotomicNumber.zeta(6).normalized_trace() == Fraction(1, 2)
        assert CyclotomicNumber.from_rational(Fraction(2, 7), 9).normalized_trace() == Fraction(2, 7)

    def test_lift_needs_a_multiple(self, i_unit):
        assert i_unit.lift(12) == i_unit
        with pytest.raises(FieldMismatch):
            i_unit.lift(5)

    def test_serialization_format(self):
        x = CyclotomicNumber.parse(4, ["1/2", "-3"])
        assert x.serialize() == ["1/2", "-3"]


class TestEmbedding:

    def test_i_embeds_at_the_upper_half_plane(self, i_unit):
        with mpmath.workdps(30):
            assert abs(i_unit.embed() - mpmath.mpc(0, 1)) < mpmath.mpf(10) ** -25

    def test_real_sign(self, zeta5):
        assert (zeta5 + zeta5.conj()).real_sign() == 1
        assert (zeta5 ** 2 + zeta5.conj() ** 2).real_sign() == -1
        assert CyclotomicNumber.from_rational(0, 5).real_sign() == 0

    def test_real_sign_of_non_real(self, i_unit):
        with pytest.raises(FieldMismatch):
            i_unit.real_sign()
