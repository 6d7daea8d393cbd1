"""
Tests for cyclic-cover eigenspace tables and the Viehweg-Zuo assemblies.
"""
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import pytest

from hodge_atlas.covers.cyclic_covers import (
    eigen_dims_cyclic_cover,
    fermat_character_classes,
    fermat_curve_eigen,
    genus_riemann_hurwitz,
    resolve_correction,
    vz_family_spec,
    vz_surface_assemble,
    vz_surface_character_grading,
    vz_threefold_assemble,
    vz_tower_report,
)
from hodge_atlas.exceptions import ConventionMismatch, DegenerateSpec, MissingGrading
from hodge_atlas.hodge.hodge_calculus import make_hodge
from hodge_atlas.models.domain_models import CyclicCoverSpec


class TestEigenTables:

    def test_legendre_curve(self):
        table = eigen_dims_cyclic_cover(CyclicCoverSpec(2, (1, 1, 1, 1)))
        assert table.genus == 1
        assert table.entries == ((1, 1),)

    def test_quintic_family_r_values(self):
        table = eigen_dims_cyclic_cover(vz_family_spec(5, 2))
        assert table.genus == 6
        assert table.r_values() == (3, 2, 1, 0)
        assert [table.h10(j) for j in range(1, 5)] == [0, 1, 2, 3]

    def test_quartic_family(self):
        table = eigen_dims_cyclic_cover(vz_family_spec(4, 1))
        assert table.genus == 3
        assert table.r_values() == (2, 1, 0)

    def test_eigenspaces_are_conjugate(self):
        table = fermat_curve_eigen(7)
        assert all(table.h10(j) == table.h01(7 - j) for j in range(1, 7))
        assert table.genus == 15

    def test_riemann_hurwitz(self):
        assert genus_riemann_hurwitz(CyclicCoverSpec(3, (1, 1, 1))) == 1
        assert genus_riemann_hurwitz(CyclicCoverSpec(5, (1, 1, 1, 1, 1))) == 6

    def test_disconnected_cover(self):
        with pytest.raises(DegenerateSpec):
            eigen_dims_cyclic_cover(CyclicCoverSpec(4, (2, 2, 2, 2)))

    def test_unbalanced_exponents(self):
        with pytest.raises(DegenerateSpec):
            CyclicCoverSpec(5, (1, 1, 1))

    def test_too_few_branch_points(self):
        with pytest.raises(DegenerateSpec):
            CyclicCoverSpec(3, (1, 2))

    def test_fermat_classes(self):
        classes = fermat_character_classes(5)
        assert len(classes) == 12
        assert sum(1 for c in classes if c.holomorphic) == 6


class TestSurfaceAssembly:

    def test_quartic_k3(self):
        base = eigen_dims_cyclic_cover(vz_family_spec(4, 1))
        assembly = vz_surface_assemble(base, fermat_curve_eigen(4), target_b2=22)
        assert assembly.core.hodge_numbers() == (1, 10, 1)
        assert assembly.correction == 10
        assert assembly.final.hodge_numbers() == (1, 20, 1)

    def test_quintic_surface_core(self):
        base = eigen_dims_cyclic_cover(vz_family_spec(5, 2))
        assembly = vz_surface_assemble(base, fermat_curve_eigen(5), target_b2=53, expected_h20=None)
        assert assembly.core.hodge_numbers() == (4, 28, 4)
        assert assembly.correction == 17
        assert assembly.final.hodge_numbers() == (4, 45, 4)

    def test_convention_check(self):
        base = eigen_dims_cyclic_cover(vz_family_spec(4, 1))
        with pytest.raises(ConventionMismatch):
            vz_surface_assemble(base, fermat_curve_eigen(4), expected_h20=2)

    def test_mismatched_degrees(self):
        with pytest.raises(ConventionMismatch):
            vz_surface_assemble(fermat_curve_eigen(4), fermat_curve_eigen(5))

    def test_correction_below_core(self):
        core = make_hodge(2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})
        with pytest.raises(ConventionMismatch):
            resolve_correction(core, 1)

    def test_character_grading_matches_core(self):
        base = eigen_dims_cyclic_cover(vz_family_spec(5, 2))
        graded = vz_surface_character_grading(base)
        core = vz_surface_assemble(base, fermat_curve_eigen(5), expected_h20=None).core
        assert graded.dims == core.dims
        assert graded.grading.m == 5


class TestThreefoldAssembly:

    @pytest.fixture
    def threefold(self):
        base = eigen_dims_cyclic_cover(vz_family_spec(5, 2))
        return vz_threefold_assemble(vz_surface_character_grading(base), fermat_curve_eigen(5), base)

    def test_top_form(self, threefold):
        assert threefold.weight == 3
        assert threefold.h(3, 0) == 1
        assert threefold.h(0, 3) == 1

    def test_twisted_curve_copies(self, threefold):
        # four copies of H^1 of the genus-6 curve, twisted once
        twisted = threefold.piece(j=0)
        assert twisted.h(2, 1) == 24
        assert twisted.h(1, 2) == 24
        assert threefold.h(2, 1) >= 24

    def test_needs_character_grading(self):
        base = eigen_dims_cyclic_cover(vz_family_spec(5, 2))
        ungraded = make_hodge(2, {(2, 0): 1, (0, 2): 1})
        with pytest.raises(MissingGrading):
            vz_threefold_assemble(ungraded, fermat_curve_eigen(5), base)


class TestTowerReport:

    def test_quartic_tower(self):
        report = vz_tower_report(4, 1)
        assert report.m == 4
        assert report.surface.final.hodge_numbers() == (1, 20, 1)
        assert report.surface_oracle == (1, 20, 1)
        assert report.threefold is None

    def test_quintic_tower(self):
        report = vz_tower_report(5, 2)
        assert report.base.r_values() == (3, 2, 1, 0)
        assert report.surface_oracle == (4, 45, 4)
        assert report.threefold.h(3, 0) == 1
        assert report.to_dict()["base"]["r_values"] == [3, 2, 1, 0]

    def test_family_needs_parameters(self):
        with pytest.raises(DegenerateSpec):
            vz_tower_report(5, 0)
