"""
Hermitian and polarization forms over cyclotomic fields.
"""

from dataclasses import dataclass
from typing import Sequence

from hodge_atlas.exceptions import NotHermitian
from hodge_atlas.linalg.cyclotomic import CyclotomicNumber
from hodge_atlas.linalg.matrices import ZERO, Matrix, Vector, conj_transpose, kron, matrix, transpose


def _bilinear(gram: Matrix, u: Sequence[CyclotomicNumber], v: Sequence[CyclotomicNumber]) -> CyclotomicNumber:
    total = ZERO
    for ui, row in zip(u, gram):
        if ui.is_zero:
            continue
        for gij, vj in zip(row, v):
            if not gij.is_zero and not vj.is_zero:
                total = total + ui * gij * vj
    return total


@dataclass(frozen=True)
class HermitianForm:
    """
    h(u, v) = u^T G conj(v): linear in the first variable, antilinear in the second.
    """

    gram: Matrix

    def __post_init__(self):
        object.__setattr__(self, "gram", matrix(self.gram))
        if any(len(row) != len(self.gram) for row in self.gram):
            raise NotHermitian("Gram matrix is not square")
        if self.gram != conj_transpose(self.gram):
            raise NotHermitian("Gram matrix differs from its conjugate transpose")

    @classmethod
    def identity(cls, n: int) -> "HermitianForm":
        return cls.diagonal([1] * n)

    @classmethod
    def diagonal(cls, entries: Sequence) -> "HermitianForm":
        n = len(entries)
        return cls(tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.gram)

    def evaluate(self, u: Sequence[CyclotomicNumber], v: Sequence[CyclotomicNumber]) -> CyclotomicNumber:
        return _bilinear(self.gram, u, tuple(x.conj() for x in v))

    def norm(self, v: Sequence[CyclotomicNumber]) -> CyclotomicNumber:
        return self.evaluate(v, v)

    def restricted(self, basis: Sequence[Vector]) -> "HermitianForm":
        """The form on the span of ``basis`` in the coordinates of that basis."""
        return HermitianForm(tuple(tuple(self.evaluate(a, b) for b in basis) for a in basis))


@dataclass(frozen=True)
class PolarizationForm:
    """
    Bilinear form Q(u, v) = u^T Q v on a weight-k structure, with Q(u, v) = (-1)^k Q(v, u).
    """

    gram: Matrix
    weight: int

    def __post_init__(self):
        object.__setattr__(self, "gram", matrix(self.gram))
        sign = -1 if self.weight % 2 else 1
        flipped = tuple(tuple(sign * x for x in row) for row in transpose(self.gram))
        if flipped != self.gram:
            raise NotHermitian(
                f"polarization of weight {self.weight} must be {'skew-' if sign < 0 else ''}symmetric",
                "Q(u,v) = (-1)^k Q(v,u)",
            )

    @property
    def dim(self) -> int:
        return len(self.gram)

    def evaluate(self, u: Sequence[CyclotomicNumber], v: Sequence[CyclotomicNumber]) -> CyclotomicNumber:
        return _bilinear(self.gram, u, v)


def tensor_hermitian(h1: HermitianForm, h2: HermitianForm) -> HermitianForm:
    """h(u1 (x) u2, v1 (x) v2) = h1(u1, v1) h2(u2, v2); the Gram matrix is the Kronecker product."""
    return HermitianForm(kron(h1.gram, h2.gram))


def tensor_polarization(q1: PolarizationForm, q2: PolarizationForm) -> PolarizationForm:
    return PolarizationForm(kron(q1.gram, q2.gram), q1.weight + q2.weight)


def hermitian_from_polarization(q: PolarizationForm) -> HermitianForm:
    """h(u, v) = i^k Q(u, conj v), computed in Q(zeta_lcm(m, 4))."""
    ik = CyclotomicNumber.zeta(4, q.weight % 4)
    return HermitianForm(tuple(tuple(ik * x for x in row) for row in q.gram))
