"""
Tests for analytic continuation of hypergeometric solutions.
"""
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import mpmath
import pytest

from hodge_atlas.exceptions import SingularPath
from hodge_atlas.periods.hypergeometric import gauss_2f1
from hodge_atlas.periods.picard_fuchs import pf_continue


class TestContinuation:

    def test_matches_series_on_the_real_segment(self):
        solution = pf_continue(["1/10", "3/10"], prec=30)
        first, _ = solution.period_values()
        assert first.agrees_with(gauss_2f1("1/2", "1/2", 1, "3/10", prec=30), slack=mpmath.mpf(10) ** -25)
        assert solution.steps >= 1

    def test_wronskian_is_conserved(self):
        solution = pf_continue(["0.5", "0.5+0.6i", "-0.4+0.3i"], prec=30)
        assert solution.wronskian_drift < mpmath.mpf(10) ** -20

    def test_loop_around_zero_changes_second_solution_only(self):
        path = ["0.5", "0.5+0.5i", "-0.5+0.5i", "-0.5-0.5i", "0.5-0.5i", "0.5"]
        start = pf_continue(["0.5"], prec=30)
        loop = pf_continue(path, prec=30)
        assert abs(loop.values[0] - start.values[0]) < mpmath.mpf(10) ** -20
        # F(1/2,1/2,1;1-s) picks up a logarithm around 0
        assert abs(loop.values[1] - start.values[1]) > mpmath.mpf("0.1")

    @pytest.mark.parametrize("path", [["0.5", "0.02"], ["0.5", "1.5"]])
    def test_singular_path(self, path):
        with pytest.raises(SingularPath):
            pf_continue(path, prec=20)


class TestErrorBound:

    @pytest.mark.parametrize("path", [
        ["0.1", "0.5"],
        ["0.3", "0.3+0.4i", "0.7+0.4i", "0.5"],
    ])
    def test_reported_error_covers_the_series_value(self, path):
        solution = pf_continue(path, prec=30)
        exact = gauss_2f1("1/2", "1/2", 1, "0.5", prec=40).value
        with mpmath.workdps(50):
            assert abs(solution.values[0] - exact) <= solution.err
            assert abs(solution.values[1] - exact) <= solution.err
        assert solution.err < mpmath.mpf(10) ** -20

    def test_open_end_reaches_close_to_one(self):
        solution = pf_continue(["0.5", "0.99"], prec=30, open_end=True)
        first, _ = solution.period_values()
        assert first.agrees_with(gauss_2f1("1/2", "1/2", 1, "0.99", prec=30), slack=mpmath.mpf(10) ** -25)
        with pytest.raises(SingularPath):
            pf_continue(["0.5", "0.99"], prec=30)

    def test_open_end_still_rejects_the_singular_point(self):
        with pytest.raises(SingularPath):
            pf_continue(["0.5", "1"], prec=30, open_end=True)
