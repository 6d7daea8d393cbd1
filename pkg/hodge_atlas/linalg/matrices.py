"""
Exact Gaussian elimination over cyclotomic fields.

Vectors are tuples of CyclotomicNumber and matrices are tuples of rows. These routines
also serve as the brute-force oracle the lemma algorithms are checked against.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from hodge_atlas.exceptions import FieldMismatch
from hodge_atlas.linalg.cyclotomic import CyclotomicNumber, cyc

Vector = Tuple[CyclotomicNumber, ...]
Matrix = Tuple[Vector, ...]

ZERO = CyclotomicNumber.from_rational(0)
ONE = CyclotomicNumber.from_rational(1)


def vector(entries: Sequence) -> Vector:
    return tuple(cyc(x) for x in entries)


def matrix(rows: Sequence[Sequence]) -> Matrix:
    return tuple(vector(r) for r in rows)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def is_zero_vector(v: Sequence[CyclotomicNumber]) -> bool:
    return all(x.is_zero for x in v)


def add(u: Sequence[CyclotomicNumber], v: Sequence[CyclotomicNumber]) -> Vector:
    if len(u) != len(v):
        raise FieldMismatch(f"vector lengths differ: {len(u)} and {len(v)}", "vectors share one ambient space")
    return tuple(a + b for a, b in zip(u, v))


def scale(c, v: Sequence[CyclotomicNumber]) -> Vector:
    return tuple(c * x for x in v)


def sub(u: Sequence[CyclotomicNumber], v: Sequence[CyclotomicNumber]) -> Vector:
    return add(u, scale(-1, v))


def conj_vector(v: Sequence[CyclotomicNumber]) -> Vector:
    return tuple(x.conj() for x in v)


def transpose(a: Sequence[Sequence[CyclotomicNumber]]) -> Matrix:
    return tuple(zip(*a)) if a else ()


def conj_transpose(a: Sequence[Sequence[CyclotomicNumber]]) -> Matrix:
    return tuple(conj_vector(col) for col in transpose(a))


def matmul(a: Sequence[Sequence[CyclotomicNumber]], b: Sequence[Sequence[CyclotomicNumber]]) -> Matrix:
    cols = transpose(b)
    out = []
    for row in a:
        out.append(tuple(sum((x * y for x, y in zip(row, col)), ZERO) for col in cols))
    return tuple(out)


def matvec(a: Sequence[Sequence[CyclotomicNumber]], v: Sequence[CyclotomicNumber]) -> Vector:
    return tuple(sum((x * y for x, y in zip(row, v)), ZERO) for row in a)


def outer(u: Sequence[CyclotomicNumber], v: Sequence[CyclotomicNumber]) -> Matrix:
    return tuple(tuple(x * y for y in v) for x in u)


def kron(a: Sequence[Sequence[CyclotomicNumber]], b: Sequence[Sequence[CyclotomicNumber]]) -> Matrix:
    rows = []
    for ra in a:
        for rb in b:
            rows.append(tuple(x * y for x in ra for y in rb))
    return tuple(rows)


def kron_vector(u: Sequence[CyclotomicNumber], v: Sequence[CyclotomicNumber]) -> Vector:
    return tuple(x * y for x in u for y in v)


def rref(a: Sequence[Sequence[CyclotomicNumber]]) -> Tuple[Matrix, Tuple[int, ...]]:
    """Reduced row echelon form and pivot columns."""
    rows: List[List[CyclotomicNumber]] = [list(vector(r)) for r in a]
    if not rows:
        return (), ()
    ncols = len(rows[0])
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if not rows[i][c].is_zero), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return tuple(tuple(row) for row in rows), tuple(pivots)


def rank(a: Sequence[Sequence[CyclotomicNumber]]) -> int:
    return len(rref(a)[1])


def nullspace(a: Sequence[Sequence[CyclotomicNumber]], ncols: Optional[int] = None) -> List[Vector]:
    """Basis of {x : A x = 0}; ``ncols`` is needed when A has no rows."""
    if not a:
        n = ncols or 0
        return [unit_vector(n, i) for i in range(n)]
    reduced, pivots = rref(a)
    n = len(reduced[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [ZERO] * n
        x[f] = ONE
        for row, p in zip(reduced, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def solve(a: Sequence[Sequence[CyclotomicNumber]], b: Sequence[CyclotomicNumber]) -> Optional[Vector]:
    """One solution of A x = b, or None when the system is inconsistent."""
    if not a:
        return () if is_zero_vector(b) else None
    n = len(a[0])
    augmented = [tuple(row) + (rhs,) for row, rhs in zip(matrix(a), vector(b))]
    reduced, pivots = rref(augmented)
    if n in pivots:
        return None
    x = [ZERO] * n
    for row, p in zip(reduced, pivots):
        x[p] = row[n]
    return tuple(x)


def in_span(vectors: Sequence[Sequence[CyclotomicNumber]], v: Sequence[CyclotomicNumber]) -> bool:
    if not vectors:
        return is_zero_vector(v)
    return solve(transpose(vectors), v) is not None


def independent_subset(vectors: Sequence[Sequence[CyclotomicNumber]]) -> List[Vector]:
    """Greedy maximal independent subfamily, in input order."""
    chosen: List[Vector] = []
    for v in vectors:
        v = vector(v)
        if is_zero_vector(v):
            continue
        if rank(chosen + [v]) == len(chosen) + 1:
            chosen.append(v)
    return chosen


def same_span(a: Sequence[Sequence[CyclotomicNumber]], b: Sequence[Sequence[CyclotomicNumber]]) -> bool:
    return rank(a) == rank(b) == rank(list(a) + list(b)) if (a or b) else True


@dataclass(frozen=True)
class SubspaceBasis:
    """Linearly independent coordinate vectors spanning a subspace of K^n."""

    vectors: Tuple[Vector, ...]
    ambient_dim: int

    def __post_init__(self):
        object.__setattr__(self, "vectors", tuple(vector(v) for v in self.vectors))
        for v in self.vectors:
            if len(v) != self.ambient_dim:
                raise FieldMismatch(f"vector of length {len(v)} in an ambient space of dimension {self.ambient_dim}",
                                    "vectors share one ambient space")
        if self.vectors and rank(self.vectors) != len(self.vectors):
            raise FieldMismatch("basis vectors are linearly dependent", "listed vectors are linearly independent")

    @classmethod
    def spanned_by(cls, vectors: Sequence[Sequence], ambient_dim: int) -> "SubspaceBasis":
        return cls(tuple(independent_subset(vectors)), ambient_dim)

    @classmethod
    def standard(cls, n: int) -> "SubspaceBasis":
        return cls(tuple(unit_vector(n, i) for i in range(n)), n)

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def contains(self, v: Sequence[CyclotomicNumber]) -> bool:
        return in_span(self.vectors, v)

    def spans_same(self, other: "SubspaceBasis") -> bool:
        return self.ambient_dim == other.ambient_dim and same_span(self.vectors, other.vectors)

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def to_dict(self):
        return {"ambient_dim": self.ambient_dim, "vectors": [[x.serialize() for x in v] for v in self.vectors]}
