"""
Tests for CM-flag propagation through composition trees.
"""
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import pytest

from hodge_atlas.hodge.cm_propagation import Leaf, Sum, Tensor, Twist, cm_propagate
from hodge_atlas.hodge.hodge_calculus import make_hodge
from hodge_atlas.models.domain_models import CMState, CMStatus


@pytest.fixture
def curve():
    return make_hodge(1, {(1, 0): 1, (0, 1): 1})


def leaf(hs, state, label):
    return Leaf(hs, CMStatus(state), label)


class TestCMPropagation:

    def test_tensor_of_cm_parts_is_cm(self, curve):
        expr = Tensor((leaf(curve, CMState.CM, "E1"), leaf(curve, CMState.CM, "E2")))
        status = cm_propagate(expr)
        assert status.state is CMState.CM
        assert any("E1" in step for step in status.provenance)

    def test_not_cm_dominates(self, curve):
        expr = Sum((leaf(curve, CMState.CM, "E1"), leaf(curve, CMState.NOT_CM, "E2")))
        assert cm_propagate(expr).state is CMState.NOT_CM

    def test_unknown_part_gives_unknown(self, curve):
        expr = Tensor((leaf(curve, CMState.CM, "E1"), leaf(curve, CMState.UNKNOWN, "E2")))
        assert cm_propagate(expr).state is CMState.UNKNOWN

    def test_pp_concentrated_is_cm_whatever_was_asserted(self):
        classes = make_hodge(2, {(1, 1): 16})
        assert cm_propagate(leaf(classes, CMState.UNKNOWN, "R")).state is CMState.CM

    def test_twist_keeps_status(self, curve):
        status = cm_propagate(Twist(leaf(curve, CMState.NOT_CM, "C"), 1))
        assert status.state is CMState.NOT_CM
        assert "unchanged" in status.provenance[-1]

    def test_asserted_leaf_records_provenance(self, curve):
        status = cm_propagate(leaf(curve, CMState.CM, "E"))
        assert status.provenance == ("leaf assertion E: CM",)
