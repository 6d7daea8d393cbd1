"""
Tests for the Gauss series, the degree-4 closed forms and the Schwarz map.
"""
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import mpmath
import pytest

from hodge_atlas.exceptions import BranchCut, OutOfRegion, PolarC
from hodge_atlas.periods.hypergeometric import (
    FIRST,
    SECOND,
    gauss_2f1,
    hypergeom_closed_forms,
    hypergeom_series_form,
    schwarz_T,
    schwarz_T_series,
)


class TestGaussSeries:

    def test_logarithm(self):
        value = gauss_2f1(1, 1, 2, "1/2", prec=40)
        with mpmath.workdps(50):
            assert abs(value.value - 2 * mpmath.log(2)) <= value.err + mpmath.mpf(10) ** -40

    def test_matches_mpmath_inside_disk(self):
        value = gauss_2f1("1/2", "1/2", 1, "0.3+0.4i", prec=30)
        with mpmath.workdps(40):
            expected = mpmath.hyp2f1(0.5, 0.5, 1, mpmath.mpc("0.3", "0.4"))
            assert abs(value.value - expected) < mpmath.mpf(10) ** -28

    def test_out_of_region(self):
        with pytest.raises(OutOfRegion):
            gauss_2f1(1, 1, 2, "1.2")

    def test_polar_c(self):
        with pytest.raises(PolarC):
            gauss_2f1(1, 1, -1, "0.5")


class TestClosedForms:

    @pytest.mark.parametrize("which", [FIRST, SECOND])
    @pytest.mark.parametrize("s", ["0.3", "-0.5", "0.2+0.3i"])
    def test_closed_forms_match_series(self, which, s):
        closed = hypergeom_closed_forms(s, which, prec=30)
        series = hypergeom_series_form(s, which, prec=30)
        assert closed.agrees_with(series)

    @pytest.mark.parametrize("which", [FIRST, SECOND])
    def test_closed_forms_on_unit_grid(self, which):
        for k in range(1, 21):
            s = f"{k}/21"
            assert hypergeom_closed_forms(s, which, prec=30).agrees_with(hypergeom_series_form(s, which, prec=30))

    def test_branch_cut(self):
        with pytest.raises(BranchCut):
            hypergeom_closed_forms(2)
        with pytest.raises(BranchCut):
            schwarz_T("1.5")

    def test_unknown_form(self):
        with pytest.raises(ValueError):
            hypergeom_closed_forms("0.3", "third")


class TestSchwarzMap:

    def test_quarter_point(self):
        t = schwarz_T("1/4", prec=40)
        with mpmath.workdps(50):
            assert abs(t.value - (4 - 2 * mpmath.sqrt(3))) < mpmath.mpf(10) ** -40

    def test_closed_form_matches_series_quotient(self):
        closed = schwarz_T("0.2+0.3i", prec=30)
        series = schwarz_T_series("0.2+0.3i", prec=30)
        assert closed.agrees_with(series)

    def test_origin(self):
        assert schwarz_T(0).value == 0
