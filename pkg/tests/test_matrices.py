"""
Tests for exact Gaussian elimination over cyclotomic fields.
"""
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import pytest

from hodge_atlas.exceptions import FieldMismatch
from hodge_atlas.linalg.matrices import (
    SubspaceBasis,
    in_span,
    independent_subset,
    matmul,
    matrix,
    matvec,
    nullspace,
    rank,
    solve,
    vector,
)


class TestElimination:

    def test_rank_over_gaussian_rationals(self, i_unit):
        a = matrix([[1, i_unit], [i_unit, -1]])
        assert rank(a) == 1
        kernel = nullspace(a)
        assert len(kernel) == 1
        assert all(x.is_zero for x in matvec(a, kernel[0]))

    def test_solve(self, zeta5):
        a = matrix([[1, zeta5], [zeta5, 1]])
        b = vector([1, 0])
        x = solve(a, b)
        assert matvec(a, x) == b

    def test_inconsistent_system(self, i_unit):
        a = matrix([[1, i_unit], [i_unit, -1]])
        assert solve(a, vector([1, 0])) is None

    def test_span(self, i_unit):
        vectors = [vector([1, i_unit, 0]), vector([0, 1, 1])]
        assert in_span(vectors, vector([1, 1 + i_unit, 1]))
        assert not in_span(vectors, vector([0, 0, 1]))

    def test_independent_subset_keeps_order(self, i_unit):
        u, v = vector([1, i_unit]), vector([i_unit, -1])
        assert independent_subset([u, v, vector([0, 1])]) == [u, vector([0, 1])]

    def test_matmul_identity(self, zeta5):
        a = matrix([[zeta5, 2], [0, zeta5 ** 2]])
        identity = matrix([[1, 0], [0, 1]])
        assert matmul(a, identity) == a


class TestSubspaceBasis:

    def test_dependent_basis_is_rejected(self, i_unit):
        with pytest.raises(FieldMismatch):
            SubspaceBasis((vector([1, i_unit]), vector([i_unit, -1])), 2)

    def test_wrong_length(self):
        with pytest.raises(FieldMismatch):
            SubspaceBasis((vector([1, 0, 0]),), 2)

    def test_spans_same(self, i_unit):
        a = SubspaceBasis.spanned_by([vector([1, i_unit]), vector([2, 2 * i_unit])], 2)
        assert a.dim == 1
        assert a.spans_same(SubspaceBasis((vector([i_unit, -1]),), 2))
        assert not a.spans_same(SubspaceBasis.standard(2))
