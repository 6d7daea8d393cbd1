"""
Constructive descent of bases to a subfield K = Q(zeta_m).

Every routine works with exact field elements; no tolerance appears anywhere.
"""

from typing import Dict, List, Sequence, Tuple

from loguru import logger

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
from hodge_atlas.linalg.cyclotomic import CyclotomicNumber
from hodge_atlas.linalg.hermitian import HermitianForm
from hodge_atlas.linalg.matrices import (
    Matrix,
    SubspaceBasis,
    Vector,
    in_span,
    independent_subset,
    matrix,
    outer,
    rank,
    same_span,
    scale,
    sub,
)
from hodge_atlas.models.domain_models import Bidegree


def rank1_factor(coefficients: Sequence[Sequence]) -> Tuple[Vector, Vector]:
    """
    Write a rank-one matrix a_ij as alpha_i beta_j over K.

    alpha is normalized so that its first non-zero entry is 1; beta is then the first
    non-zero row.

    Raises:
        ZeroMatrix: for the zero matrix
        NotElementary: if the exact rank is at least 2
    """
    a: Matrix = matrix(coefficients)
    i0 = next((i for i, row in enumerate(a) if any(not x.is_zero for x in row)), None)
    if i0 is None:
        raise ZeroMatrix("coefficient matrix is zero")
    beta = a[i0]
    j0 = next(j for j, x in enumerate(beta) if not x.is_zero)
    pivot = beta[j0].inverse()
    alpha = tuple(row[j0] * pivot for row in a)
    if outer(alpha, beta) != a:
        raise NotElementary(f"coefficient matrix has rank {rank(a)}, not 1")
    return alpha, beta


def gram_schmidt(basis: SubspaceBasis, h: HermitianForm, require_definite: bool = True) -> SubspaceBasis:
    """
    v_k = x_k - sum_{j<k} h(x_k, v_j) / h(v_j, v_j) v_j.

    The change of basis is unitriangular, so every prefix keeps its span.

    Raises:
        IsotropicVector: if some h(v_k, v_k) vanishes
        NotDefinite: if ``require_definite`` and two h(v_k, v_k) have opposite signs
    """
    out: List[Vector] = []
    norms: List[CyclotomicNumber] = []
    sign = 0
    for k, x in enumerate(basis.vectors):
        v = x
        for vj, nj in zip(out, norms):
            c = h.evaluate(x, vj)
            if not c.is_zero:
                v = sub(v, scale(c / nj, vj))
        norm = h.norm(v)
        if norm.is_zero:
            raise IsotropicVector(f"h(v_{k + 1}, v_{k + 1}) = 0 during orthogonalization")
        if require_definite:
            s = norm.real_sign()
            if sign and s != sign:
                raise NotDefinite(f"h changes sign at v_{k + 1}")
            sign = s
        out.append(v)
        norms.append(norm)
    return SubspaceBasis(tuple(out), basis.ambient_dim)


def ortho_complement_descend(ambient: SubspaceBasis, u1: SubspaceBasis, h: HermitianForm) -> SubspaceBasis:
    """
    Basis over K of the h-orthogonal complement of U1 inside the ambient span.

    Each ambient vector w is replaced by w - sum_k lambda_k u_k with
    lambda_k h(u_k, u_k) = h(w, u_k); an independent subfamily of the results is kept.

    Raises:
        NotOrthogonalInput: if the U1 basis is not h-orthogonal or leaves the ambient span
        IsotropicU1Vector: if some U1 basis vector has h(u, u) = 0
    """
    norms = []
    for i, u in enumerate(u1.vectors):
        norm = h.norm(u)
        if norm.is_zero:
            raise IsotropicU1Vector(f"h(u_{i + 1}, u_{i + 1}) = 0")
        norms.append(norm)
        for j in range(i):
            if not h.evaluate(u, u1.vectors[j]).is_zero:
                raise NotOrthogonalInput(f"h(u_{i + 1}, u_{j + 1}) != 0")
        if not in_span(ambient.vectors, u):
            raise NotOrthogonalInput(f"u_{i + 1} is outside the ambient span", "U1 lies in the ambient space")
    projected = []
    for w in ambient.vectors:
        v = w
        for u, norm in zip(u1.vectors, norms):
            lam = h.evaluate(w, u) / norm
            if not lam.is_zero:
                v = sub(v, scale(lam, u))
        projected.append(v)
    complement = SubspaceBasis(tuple(independent_subset(projected)), ambient.ambient_dim)
    if complement.dim + u1.dim != ambient.dim:
        raise NotOrthogonalInput(
            f"complement has dimension {complement.dim}, expected {ambient.dim - u1.dim}",
            "dim complement + dim U1 = dim ambient",
        )
    return complement


def summand_basis_extract(
    split: Tuple[int, int], f: SubspaceBasis, require_split: bool = False
) -> Tuple[SubspaceBasis, SubspaceBasis, bool]:
    """
    Project F in V1 + V2 = K^{n1} + K^{n2} onto both summands.

    Returns:
        (basis of the V1 projection, basis of the V2 projection, splits), where ``splits``
        records whether F is the direct sum of its projections

    Raises:
        NotSplitCompatible: if the split does not match the ambient dimension, or if
            ``require_split`` and F does not split
    """
    n1, n2 = split
    if n1 < 0 or n2 < 0 or n1 + n2 != f.ambient_dim:
        raise NotSplitCompatible(f"split {n1} + {n2} does not match ambient dimension {f.ambient_dim}")
    first = SubspaceBasis.spanned_by([v[:n1] for v in f.vectors], n1)
    second = SubspaceBasis.spanned_by([v[n1:] for v in f.vectors], n2)
    splits = f.dim == first.dim + second.dim
    if require_split and not splits:
        raise NotSplitCompatible(
            f"dim F = {f.dim} but the projections have dimensions {first.dim} and {second.dim}"
        )
    logger.debug(f"split {n1}+{n2}: projections of dimension {first.dim}, {second.dim}, splits={splits}")
    return first, second, splits


def hodge_basis_descent(
    filtration: Sequence[SubspaceBasis], h: HermitianForm, weight: int
) -> Dict[Bidegree, SubspaceBasis]:
    """
    K-bases of the Hodge pieces V^{p,k-p} from K-bases of the filtration F^0 ⊇ ... ⊇ F^k.

    V^{k,0} = F^k, and V^{p,k-p} is peeled off as the h-complement of F^{p+1} inside F^p.

    Args:
        filtration: ``filtration[p]`` is a basis of F^p for p = 0..k
        h: Hermitian form for which the Hodge pieces are orthogonal and each piece is definite
        weight: k

    Raises:
        HypothesisViolation: for a non-nested filtration, an isotropic or indefinite piece, or
            pieces that fail to reassemble the filtration
    """
    if len(filtration) != weight + 1:
        raise HypothesisViolation(f"weight {weight} needs F^0..F^{weight}, got {len(filtration)} pieces")
    for p in range(weight):
        if not all(filtration[p].contains(v) for v in filtration[p + 1].vectors):
            raise HypothesisViolation(f"F^{p + 1} is not contained in F^{p}")
    pieces: Dict[Bidegree, SubspaceBasis] = {(weight, 0): filtration[weight]}
    try:
        orthogonal = list(gram_schmidt(filtration[weight], h).vectors)
        for p in range(weight - 1, -1, -1):
            above = SubspaceBasis(tuple(orthogonal), filtration[p].ambient_dim)
            piece = ortho_complement_descend(filtration[p], above, h)
            pieces[(p, weight - p)] = piece
            orthogonal.extend(gram_schmidt(piece, h).vectors)
    except (IsotropicVector, NotDefinite, IsotropicU1Vector, NotOrthogonalInput) as e:
        raise HypothesisViolation(f"Hodge pieces are not orthogonal and definite: {e.message}") from e
    for p in range(weight + 1):
        union = [v for q in range(p, weight + 1) for v in pieces[(q, weight - q)].vectors]
        if not same_span(union, filtration[p].vectors):
            raise HypothesisViolation(f"pieces V^(q,k-q), q >= {p}, do not reassemble F^{p}")
    logger.debug(f"weight {weight} descent: dimensions {[(pq, b.dim) for pq, b in sorted(pieces.items())]}")
    return pieces

