"""
Tests for Legendre elliptic periods and the tower period tables built on them.
"""
import random
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import mpmath
import pytest

from hodge_atlas.exceptions import DegenerateLambda
from hodge_atlas.periods.elliptic import (
    agm_periods,
    elliptic_periods,
    kummer_normalized_periods,
    quartic_k3_periods,
    tau,
    tower_period_product,
)

TOLERANCE = mpmath.mpf(10) ** -25


class TestEllipticPeriods:

    def test_tau_at_half_is_i(self):
        t = tau("1/2", prec=30)
        assert abs(t.value - 1j) < TOLERANCE

    @pytest.mark.parametrize("lam", ["0.3", "0.93", "2+0.5i", "-0.4-1.2i"])
    def test_omega_matches_mpmath(self, lam):
        omega1, omega2 = elliptic_periods(lam, prec=30)
        with mpmath.workdps(40):
            x = mpmath.mpmathify(lam.replace("i", "j"))
            assert abs(omega2.value - mpmath.pi * mpmath.hyp2f1(0.5, 0.5, 1, x)) < TOLERANCE
            assert abs(omega1.value + 1j * mpmath.pi * mpmath.hyp2f1(0.5, 0.5, 1, 1 - x)) < TOLERANCE

    @pytest.mark.parametrize("lam", ["0.3", "0.7+0.2i"])
    def test_agm_agrees(self, lam):
        series = elliptic_periods(lam, prec=30)
        agm = agm_periods(lam, prec=30)
        for a, b in zip(series, agm):
            assert a.agrees_with(b, slack=TOLERANCE)

    @pytest.mark.parametrize("lam", [0, 1])
    def test_degenerate(self, lam):
        with pytest.raises(DegenerateLambda):
            elliptic_periods(lam)
        with pytest.raises(DegenerateLambda):
            agm_periods(lam)


class TestPeriodTables:

    def test_kummer_normalization(self):
        table = kummer_normalized_periods("1/2", "0.3", prec=30)
        t1, t2 = tau("1/2", prec=30), tau("0.3", prec=30)
        assert table.reference == "11"
        assert abs(table.normalized["11"].value - 1) < TOLERANCE
        assert abs(table.normalized["21"].value - t1.value) < TOLERANCE
        assert abs(table.normalized["12"].value - t2.value) < TOLERANCE
        assert abs(table.normalized["22"].value - t1.value * t2.value) < TOLERANCE

    def test_tower_labels(self):
        table = tower_period_product(["0.3", "0.4", "0.6"], prec=20)
        assert len(table.periods) == 8
        assert table.reference == "111"

    def test_empty_tower(self):
        with pytest.raises(DegenerateLambda):
            tower_period_product([])

    def test_quartic_ratio_is_tau(self):
        table = quartic_k3_periods("0.3", prec=30)
        assert abs(table.normalized["P2"].value - tau("0.3", prec=30).value) < TOLERANCE

    def test_tau_reflection(self):
        rng = random.Random(3)
        for _ in range(10):
            re, im = rng.randint(150000, 850000), rng.randint(-300000, 300000)
            s = f"{re / 10 ** 6:.6f}{im / 10 ** 6:+.6f}i"
            reflected_s = f"{(10 ** 6 - re) / 10 ** 6:.6f}{-im / 10 ** 6:+.6f}i"
            t, reflected = tau(s, prec=30), tau(reflected_s, prec=30)
            with mpmath.workdps(40):
                assert abs(reflected.value + 1 / t.value) < TOLERANCE

    @pytest.mark.parametrize("s, reflected_s", [
        ("0.01", "0.99"),
        ("0.04+0.01i", "0.96-0.01i"),
        ("0.97", "0.03"),
        ("-0.02", "1.02"),
    ])
    def test_tau_reflection_near_the_cusps(self, s, reflected_s):
        t, reflected = tau(s, prec=30), tau(reflected_s, prec=30)
        with mpmath.workdps(40):
            assert abs(reflected.value + 1 / t.value) < TOLERANCE

    @pytest.mark.parametrize("lam", ["0.01", "0.04+0.01i", "0.96", "0.99", "-0.02", "1.02"])
    def test_agm_agrees_near_the_cusps(self, lam):
        for a, b in zip(elliptic_periods(lam, prec=30), agm_periods(lam, prec=30)):
            assert abs(a.value - b.value) < TOLERANCE * max(1, abs(b.value))

    @pytest.mark.parametrize("lam", ["0.3", "0.5", "0.7"])
    def test_agm_agrees_at_forty_digits(self, lam):
        for a, b in zip(elliptic_periods(lam, prec=40), agm_periods(lam, prec=40)):
            assert abs(a.value - b.value) < mpmath.mpf(10) ** -35
