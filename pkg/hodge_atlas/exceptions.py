"""
This module contains the exceptions raised by Hodge Atlas.

Every domain error carries the name of the invariant it protects so the CLI
can report it next to the error class.
"""

from typing import Optional


class HodgeAtlasException(Exception):
    """
    Base class of every domain error raised by Hodge Atlas.
    """

    invariant: str = "unspecified"

    def __init__(self, message: str, invariant: Optional[str] = None):
        """
        Initializes the exception with the given message and, optionally, the violated invariant.
        """
        super().__init__(message)
        self.message = message
        if invariant is not None:
            self.invariant = invariant


# hodge-core

class SymmetryViolation(HodgeAtlasException):
    invariant = "hodge symmetry h^{p,q} = h^{q,p}"


class GradingMismatch(HodgeAtlasException):
    invariant = "graded pieces sum to the total at every (p,q)"


class WeightMismatch(HodgeAtlasException):
    invariant = "summands share one weight"


class GradingIncompatible(HodgeAtlasException):
    invariant = "tensor factors share one character modulus"


class NegativeBidegree(HodgeAtlasException):
    invariant = "bidegrees are non-negative"


class CodimUnsupported(HodgeAtlasException):
    invariant = "blow-up centre has codimension 2"


class MissingSignData(HodgeAtlasException):
    invariant = "involution sign recorded for every degree used"


class HardLefschetzViolation(HodgeAtlasException):
    invariant = "primitive dimensions are non-negative"


class InfeasibleSplit(HodgeAtlasException):
    invariant = "filtration signature splits additively over summands"


class PoincareDualityViolation(HodgeAtlasException):
    invariant = "levels above the middle are Poincare dual to those below"


# bv-tower

class InvariantViolation(HodgeAtlasException):
    invariant = "input is a Calabi-Yau with involution"


class EmptyProduct(HodgeAtlasException):
    invariant = "tower step has non-empty factors"


class TooFewBases(HodgeAtlasException):
    invariant = "a tower needs at least two bases"


# cyclic-covers

class DegenerateSpec(HodgeAtlasException):
    invariant = "at least three effective branch points with exponents summing to 0 mod m"


class ConventionMismatch(HodgeAtlasException):
    invariant = "eigenspace index convention yields h^{2,0} = 1"


class MissingGrading(HodgeAtlasException):
    invariant = "surface data carries a Z/m character grading"


# period-lab

class OutOfRegion(HodgeAtlasException):
    invariant = "series argument lies inside the unit disk"


class PolarC(HodgeAtlasException):
    invariant = "lower parameter is not a non-positive integer"


class BranchCut(HodgeAtlasException):
    invariant = "argument avoids the branch cut [1, oo)"


class SingularPath(HodgeAtlasException):
    invariant = "continuation path keeps its clearance from {0, 1}"


class DegenerateLambda(HodgeAtlasException):
    invariant = "Legendre parameter lies outside {0, 1}"


class DivisionByZeroPeriod(HodgeAtlasException):
    invariant = "normalizing period is non-zero"


class PoleAtNonPositiveInteger(HodgeAtlasException):
    invariant = "Gamma argument is not a non-positive integer"


class CoincidentBranchPoints(HodgeAtlasException):
    invariant = "branch points are pairwise distinct"


class InsufficientPrecision(HodgeAtlasException):
    invariant = "working precision covers the relation search"


# qbar-linalg

class NotElementary(HodgeAtlasException):
    invariant = "coefficient matrix has rank 1"


class ZeroMatrix(HodgeAtlasException):
    invariant = "coefficient matrix is non-zero"


class IsotropicVector(HodgeAtlasException):
    invariant = "h(v, v) != 0 during orthogonalization"


class NotDefinite(HodgeAtlasException):
    invariant = "hermitian form is definite on the span"


class NotOrthogonalInput(HodgeAtlasException):
    invariant = "subspace basis is h-orthogonal"


class IsotropicU1Vector(HodgeAtlasException):
    invariant = "subspace basis vectors are h-anisotropic"


class NotSplitCompatible(HodgeAtlasException):
    invariant = "subspace is the sum of its projections"


class HypothesisViolation(HodgeAtlasException):
    invariant = "Hodge pieces are h-orthogonal and h-definite"


class FieldMismatch(HodgeAtlasException):
    invariant = "operands live in a common cyclotomic field"


class NotHermitian(HodgeAtlasException):
    invariant = "Gram matrix equals its conjugate transpose"
