"""
Tests for whole-diamond operations: products, blow-ups, Lefschetz decomposition and
invariant parts of products.
"""
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import pytest

from hodge_atlas.covers.hypersurface import hypersurface_diamond
from hodge_atlas.exceptions import CodimUnsupported, InfeasibleSplit, MissingSignData
from hodge_atlas.hodge.diamond import (
    betti_numbers,
    blowup_cohomology,
    curve_family,
    direct_summand_descent_dims,
    euler_characteristic,
    invariant_part_of_product,
    kunneth_product,
    lefschetz_reassemble,
    point_family,
    primitive_part,
    projective_lines,
    sign_part_family,
)
from hodge_atlas.hodge.hodge_calculus import make_hodge, multiply_polynomials, poincare_polynomial
from hodge_atlas.models.domain_models import FiltrationSignature, Sign


class TestProducts:

    def test_abelian_surface(self):
        surface = kunneth_product(curve_family(1), curve_family(1))
        assert surface.level(2).hodge_numbers() == (1, 4, 1)
        assert betti_numbers(surface) == [1, 4, 6, 4, 1]
        assert euler_characteristic(surface) == 0

    def test_poincare_polynomial_of_product(self):
        x, y = curve_family(2), projective_lines()
        product = kunneth_product(x, y)
        assert poincare_polynomial(product) == multiply_polynomials(poincare_polynomial(x), poincare_polynomial(y))

    def test_points_times_curve(self):
        lines = kunneth_product(point_family(4), projective_lines())
        assert betti_numbers(lines) == [4, 0, 4]
        assert not lines.connected


class TestBlowupAndLefschetz:

    def test_blowup_along_points(self):
        surface = kunneth_product(curve_family(1), curve_family(1))
        blown = blowup_cohomology(surface, point_family(16))
        assert blown.level(2).hodge_numbers() == (1, 20, 1)

    def test_blowup_needs_codimension_two(self):
        surface = kunneth_product(curve_family(1), curve_family(1))
        with pytest.raises(CodimUnsupported):
            blowup_cohomology(surface, curve_family(1))

    def test_primitive_part_of_quartic(self):
        k3 = hypersurface_diamond(4, 3)
        primitive = primitive_part(k3)
        assert primitive.level(2).hodge_numbers() == (1, 19, 1)
        assert primitive.level(0).is_zero is False

    def test_reassemble_inverts_primitive_part(self):
        quintic = hypersurface_diamond(5, 4)
        assert lefschetz_reassemble(primitive_part(quintic)) == quintic
        assert euler_characteristic(quintic) == -200


class TestInvolutionParts:

    def test_invariant_part_of_two_anti_invariant_curves(self):
        h1 = make_hodge(1, {(1, 0): 1, (0, 1): 1}, {(0, "-"): {(1, 0): 1, (0, 1): 1}})
        invariant = invariant_part_of_product(h1, h1)
        assert invariant.hodge_numbers() == (1, 2, 1)
        # the residual involution acts by the sign of the first factor
        assert invariant.piece(sign=Sign.MINUS).dimension == 4
        assert invariant.piece(sign=Sign.PLUS).is_zero

    def test_missing_signs(self):
        bare = make_hodge(1, {(1, 0): 1, (0, 1): 1})
        with pytest.raises(MissingSignData):
            invariant_part_of_product(bare, bare)
        with pytest.raises(MissingSignData):
            sign_part_family(curve_family(1), Sign.PLUS)


class TestDescentDims:

    def test_feasible_split(self):
        report = direct_summand_descent_dims(
            FiltrationSignature((2, 1)), [FiltrationSignature((1, 1)), FiltrationSignature((1, 0))]
        )
        assert report.feasible
        assert report.summand_hodge_numbers == ((0, 1), (1, 0))

    def test_filtration_does_not_add_up(self):
        with pytest.raises(InfeasibleSplit):
            direct_summand_descent_dims(
                FiltrationSignature((2, 1)), [FiltrationSignature((1, 0)), FiltrationSignature((1, 0))]
            )

    def test_increasing_summand(self):
        with pytest.raises(InfeasibleSplit):
            direct_summand_descent_dims(
                FiltrationSignature((2, 1)), [FiltrationSignature((1, 1)), FiltrationSignature((0, 1))]
            )
