"""
Tests for the randomized lemma self-check.
"""
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import pytest

from hodge_atlas.linalg.selftest import CHECKS, run_selftest


class TestSelftest:

    def test_small_run_passes(self):
        report = run_selftest(2, seed=1, conductors=(4,), max_dim=3)
        assert report.ok
        assert report.passed == {name: 2 for name in CHECKS}

    def test_seed_is_reported(self):
        report = run_selftest(1, seed=7, conductors=(5,), max_dim=2)
        assert report.to_dict()["seed"] == 7

    @pytest.mark.slow
    def test_full_run(self):
        report = run_selftest(500, seed=0)
        assert report.ok, report.failures
