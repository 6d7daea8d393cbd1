"""
Tests for the constructive descent lemmas over cyclotomic fields.
"""
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import pytest

from hodge_atlas.exceptions import (
    HypothesisViolation,
    IsotropicU1Vector,
    IsotropicVector,
    NotDefinite,
    NotElementary,
    NotOrthogonalInput,
    NotSplitCompatible,
    ZeroMatrix,
)
from hodge_atlas.linalg.hermitian import HermitianForm
from hodge_atlas.linalg.lemmas import (
    gram_schmidt,
    hodge_basis_descent,
    ortho_complement_descend,
    rank1_factor,
    summand_basis_extract,
)
from hodge_atlas.linalg.matrices import SubspaceBasis, in_span, outer, vector, zero_vector


@pytest.fixture
def weight_one_form(i_unit):
    # i Q(u, conj v) for Q the standard symplectic form
    return HermitianForm(((0, i_unit), (-i_unit, 0)))


class TestRank1Factor:

    def test_factor(self, i_unit):
        alpha, beta = vector([1, i_unit]), vector([2, 1 + i_unit])
        a, b = rank1_factor(outer(alpha, beta))
        assert outer(a, b) == outer(alpha, beta)
        assert a[0] == 1

    def test_zero_matrix(self):
        with pytest.raises(ZeroMatrix):
            rank1_factor([[0, 0], [0, 0]])

    def test_rank_two(self):
        with pytest.raises(NotElementary):
            rank1_factor([[1, 0], [0, 1]])


class TestGramSchmidt:

    def test_orthogonalizes_and_keeps_prefix_spans(self, i_unit):
        h = HermitianForm.identity(2)
        basis = SubspaceBasis((vector([1, i_unit]), vector([1, 0])), 2)
        out = gram_schmidt(basis, h)
        assert h.evaluate(out.vectors[0], out.vectors[1]).is_zero
        assert out.vectors[0] == basis.vectors[0]
        assert out.spans_same(basis)

    def test_isotropic(self):
        h = HermitianForm.diagonal([1, -1])
        with pytest.raises(IsotropicVector):
            gram_schmidt(SubspaceBasis((vector([1, 1]),), 2), h)

    def test_indefinite(self):
        h = HermitianForm.diagonal([1, -1])
        with pytest.raises(NotDefinite):
            gram_schmidt(SubspaceBasis.standard(2), h)
        assert gram_schmidt(SubspaceBasis.standard(2), h, require_definite=False).dim == 2


class TestOrthoComplement:

    def test_complement(self):
        h = HermitianForm.identity(3)
        u1 = SubspaceBasis((vector([1, 1, 0]),), 3)
        complement = ortho_complement_descend(SubspaceBasis.standard(3), u1, h)
        assert complement.dim == 2
        assert all(h.evaluate(v, u1.vectors[0]).is_zero for v in complement.vectors)

    def test_non_orthogonal_u1(self):
        h = HermitianForm.identity(3)
        u1 = SubspaceBasis((vector([1, 0, 0]), vector([1, 1, 0])), 3)
        with pytest.raises(NotOrthogonalInput):
            ortho_complement_descend(SubspaceBasis.standard(3), u1, h)

    def test_isotropic_u1(self):
        h = HermitianForm.diagonal([1, -1])
        with pytest.raises(IsotropicU1Vector):
            ortho_complement_descend(SubspaceBasis.standard(2), SubspaceBasis((vector([1, 1]),), 2), h)


class TestSummandExtract:

    def test_split_subspace(self):
        first, second, splits = summand_basis_extract((1, 1), SubspaceBasis.standard(2))
        assert (first.dim, second.dim, splits) == (1, 1, True)

    def test_diagonal_does_not_split(self):
        diagonal = SubspaceBasis((vector([1, 1]),), 2)
        first, second, splits = summand_basis_extract((1, 1), diagonal)
        assert (first.dim, second.dim, splits) == (1, 1, False)
        with pytest.raises(NotSplitCompatible):
            summand_basis_extract((1, 1), diagonal, require_split=True)

    def test_mixed_plane_lies_in_its_projections(self):
        plane = SubspaceBasis((vector([1, 0, 1, 0]), vector([0, 1, 0, 0])), 4)
        first, second, splits = summand_basis_extract((2, 2), plane)
        assert (first.dim, second.dim, splits) == (2, 1, False)
        embedded = [tuple(v) + zero_vector(2) for v in first.vectors]
        embedded += [zero_vector(2) + tuple(v) for v in second.vectors]
        assert all(in_span(embedded, v) for v in plane.vectors)

    def test_split_must_match_dimension(self):
        with pytest.raises(NotSplitCompatible):
            summand_basis_extract((1, 2), SubspaceBasis.standard(2))


class TestHodgeBasisDescent:

    def test_weight_one(self, i_unit, weight_one_form):
        f1 = SubspaceBasis((vector([1, i_unit]),), 2)
        pieces = hodge_basis_descent([SubspaceBasis.standard(2), f1], weight_one_form, 1)
        assert pieces[(1, 0)].spans_same(f1)
        assert pieces[(0, 1)].dim == 1
        assert pieces[(0, 1)].contains(vector([1, -i_unit]))

    def test_filtration_must_be_nested(self, weight_one_form):
        f0 = SubspaceBasis((vector([1, 0]),), 2)
        f1 = SubspaceBasis((vector([0, 1]),), 2)
        with pytest.raises(HypothesisViolation):
            hodge_basis_descent([f0, f1], weight_one_form, 1)

    def test_wrong_length(self, weight_one_form):
        with pytest.raises(HypothesisViolation):
            hodge_basis_descent([SubspaceBasis.standard(2)], weight_one_form, 1)

    def test_isotropic_piece(self, weight_one_form):
        # (1, 0) is h-isotropic
        f1 = SubspaceBasis((vector([1, 0]),), 2)
        with pytest.raises(HypothesisViolation):
            hodge_basis_descent([SubspaceBasis.standard(2), f1], weight_one_form, 1)
