"""
Golden tests for the Borcea-Voisin step and towers of elliptic curves.
"""
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import pytest

from hodge_atlas.exceptions import EmptyProduct, InvariantViolation, MissingSignData, TooFewBases
from hodge_atlas.hodge.diamond import betti_numbers, euler_characteristic, point_family
from hodge_atlas.hodge.hodge_calculus import make_hodge
from hodge_atlas.models.domain_models import CMState, CMStatus, CYWithInvolution, Sign
from hodge_atlas.towers.bv_tower import bv_step, check_cy, run_tower, tower_cm_status


class TestKummerStep:
    """Two elliptic curves give a K3 surface."""

    @pytest.fixture
    def report(self, elliptic_cm, elliptic_cm_second):
        return bv_step(elliptic_cm, elliptic_cm_second)

    def test_k3_diamond(self, report):
        output = report.output
        assert output.dim == 2
        assert output.levels[2].hodge_numbers() == (1, 20, 1)
        assert output.levels[1].is_zero
        assert euler_characteristic(output.diamond()) == 24

    def test_exceptional_classes(self, report):
        # 16 points of R1 x R2 blown up
        assert report.exceptional[2].h(1, 1) == 16
        assert report.invariant[2].hodge_numbers() == (1, 4, 1)
        assert report.kunneth[2].hodge_numbers() == (1, 4, 1)

    def test_sign_split(self, report):
        h2 = report.output.levels[2]
        assert h2.piece(sign=Sign.MINUS).hodge_numbers() == (1, 2, 1)
        assert h2.piece(sign=Sign.PLUS).hodge_numbers() == (0, 18, 0)

    def test_new_fixed_locus_is_eight_lines(self, report):
        assert betti_numbers(report.output.ramification) == [8, 0, 8]

    def test_cm_propagates(self, report):
        assert report.output.cm_at(2).state is CMState.CM
        assert report.cm_trace[2].provenance

    def test_unknown_factor(self, elliptic_cm, elliptic_unknown):
        output = bv_step(elliptic_cm, elliptic_unknown).output
        assert output.cm_at(2).state is CMState.UNKNOWN
        # H^0 is always (0,0)-concentrated
        assert output.cm_at(0).state is CMState.CM


class TestBorceaThreefold:

    @pytest.fixture
    def reports(self, elliptic_cm, elliptic_cm_second, elliptic_unknown):
        return run_tower([elliptic_cm, elliptic_cm_second, elliptic_unknown])

    def test_levels(self, reports):
        assert len(reports) == 2
        threefold = reports[-1].output
        assert threefold.dim == 3
        assert threefold.levels[3].hodge_numbers() == (1, 3, 3, 1)
        assert threefold.levels[2].hodge_numbers() == (0, 51, 0)
        assert threefold.levels[1].is_zero
        assert euler_characteristic(threefold.diamond()) == 96

    def test_calabi_yau_profile(self, reports):
        holds, violations = check_cy(reports[-1].output.diamond())
        assert holds, violations

    def test_cm_status_per_level(self, reports):
        statuses = dict(tower_cm_status(reports))
        top = reports[-1].output
        assert statuses[top.name][3].state is CMState.UNKNOWN
        assert statuses[top.name][2].state is CMState.CM


class TestStepValidation:

    def test_too_few_bases(self, elliptic_cm):
        with pytest.raises(TooFewBases):
            run_tower([elliptic_cm])

    def test_invariant_top_form_is_rejected(self, elliptic_cm):
        h0 = make_hodge(0, {(0, 0): 1}, {(0, "+"): {(0, 0): 1}})
        h1 = make_hodge(1, {(1, 0): 1, (0, 1): 1}, {(0, "+"): {(1, 0): 1, (0, 1): 1}})
        bad = CYWithInvolution("bad", 1, (h0, h1), point_family(0))
        with pytest.raises(InvariantViolation):
            bv_step(bad, elliptic_cm)

    def test_missing_sign_data(self, elliptic_cm):
        h0 = make_hodge(0, {(0, 0): 1}, {(0, "+"): {(0, 0): 1}})
        h1 = make_hodge(1, {(1, 0): 1, (0, 1): 1})
        bare = CYWithInvolution("bare", 1, (h0, h1), point_family(4))
        with pytest.raises(MissingSignData):
            bv_step(elliptic_cm, bare)

    def test_point_is_not_a_factor(self, elliptic_cm):
        h0 = make_hodge(0, {(0, 0): 1}, {(0, "+"): {(0, 0): 1}})
        point = CYWithInvolution("pt", 0, (h0,), point_family(0), (CMStatus(),))
        with pytest.raises(EmptyProduct):
            bv_step(point, elliptic_cm)
