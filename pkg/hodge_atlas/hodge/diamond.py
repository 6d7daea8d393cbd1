"""
Operations on whole Hodge diamonds: products, blow-ups, Lefschetz decomposition and the
involution-invariant part of a product.
"""

from typing import Dict, List, Sequence

from loguru import logger

from hodge_atlas.exceptions import (
    CodimUnsupported,
    HardLefschetzViolation,
    InfeasibleSplit,
    MissingSignData,
    WeightMismatch,
)
from hodge_atlas.hodge.hodge_calculus import direct_sum, subtract, tate_twist, tensor, zero_hodge
from hodge_atlas.models.domain_models import (
    Bidegree,
    DescentReport,
    FiltrationSignature,
    GradedHodgeStructure,
    Grading,
    HodgeDiamondFamily,
    PieceKey,
    Sign,
)


def point_family(count: int = 1) -> HodgeDiamondFamily:
    """``count`` disjoint points; ``count = 0`` is the empty variety of dimension 0."""
    return HodgeDiamondFamily(0, (GradedHodgeStructure(0, {(0, 0): count}),), connected=count == 1)


def projective_lines(count: int = 1) -> HodgeDiamondFamily:
    return HodgeDiamondFamily(
        1,
        (GradedHodgeStructure(0, {(0, 0): count}), GradedHodgeStructure(1)),
        connected=count == 1,
    )


def curve_family(genus: int, count: int = 1) -> HodgeDiamondFamily:
    return HodgeDiamondFamily(
        1,
        (GradedHodgeStructure(0, {(0, 0): count}), GradedHodgeStructure(1, {(1, 0): count * genus, (0, 1): count * genus})),
        connected=count == 1,
    )


def empty_family(dim: int) -> HodgeDiamondFamily:
    return HodgeDiamondFamily(dim, tuple(GradedHodgeStructure(k) for k in range(dim + 1)), connected=False)


def betti_numbers(family: HodgeDiamondFamily) -> List[int]:
    return [level.dimension for level in family.all_levels()]


def euler_characteristic(family: HodgeDiamondFamily) -> int:
    return sum((-1) ** k * b for k, b in enumerate(betti_numbers(family)))


def family_sum(x: HodgeDiamondFamily, y: HodgeDiamondFamily) -> HodgeDiamondFamily:
    """Disjoint union of two varieties of the same dimension."""
    if x.dim != y.dim:
        raise WeightMismatch(f"cannot take the disjoint union of dimensions {x.dim} and {y.dim}")
    levels = tuple(direct_sum(x.level(k), y.level(k)) for k in range(x.dim + 1))
    return HodgeDiamondFamily(x.dim, levels, connected=False)


def kunneth_product(x: HodgeDiamondFamily, y: HodgeDiamondFamily, coerce: bool = False) -> HodgeDiamondFamily:
    """
    Hodge diamond of X x Y: H^k = sum over r+s=k of H^r(X) (x) H^s(Y).
    """
    n = x.dim + y.dim
    levels = []
    for k in range(n + 1):
        level = zero_hodge(k)
        for r in range(max(0, k - 2 * y.dim), min(k, 2 * x.dim) + 1):
            level = direct_sum(level, tensor(x.level(r), y.level(k - r), coerce=coerce))
        levels.append(level)
    connected = x.connected and y.connected
    return HodgeDiamondFamily(n, tuple(levels), connected=connected and levels[0].h(0, 0) == 1)


def sign_part_family(family: HodgeDiamondFamily, sign: Sign) -> HodgeDiamondFamily:
    """The +/- part of every level, kept as a (non-connected) diamond of the same dimension."""
    levels = []
    for k in range(family.dim + 1):
        level = family.level(k)
        if level.grading is None or not level.grading.has_signs:
            if not level.is_zero:
                raise MissingSignData(f"level {k} carries no involution sign")
            levels.append(level)
        else:
            levels.append(level.piece(sign=sign).without_grading())
    return HodgeDiamondFamily(family.dim, tuple(levels), connected=False)


def blowup_cohomology(x: HodgeDiamondFamily, z: HodgeDiamondFamily) -> HodgeDiamondFamily:
    """
    Blow-up of X along a smooth centre Z of codimension 2:
    H^k(X^) = H^k(X) + H^{k-2}(Z)(-1).

    Raises:
        CodimUnsupported: if dim Z != dim X - 2
    """
    if z.dim != x.dim - 2:
        raise CodimUnsupported(f"centre of dimension {z.dim} in a {x.dim}-fold has codimension {x.dim - z.dim}")
    if z.is_empty:
        return x
    levels = []
    for k in range(x.dim + 1):
        exceptional = tate_twist(z.level(k - 2), 1) if k >= 2 else zero_hodge(k)
        levels.append(direct_sum(x.level(k), exceptional))
    logger.debug(f"blow-up adds Betti numbers {[e.dimension for e in z.all_levels()]} shifted by 2")
    return HodgeDiamondFamily(x.dim, tuple(levels), connected=x.connected)


def primitive_part(family: HodgeDiamondFamily) -> HodgeDiamondFamily:
    """
    Primitive pieces P^k = H^k - L H^{k-2} for k <= n.

    Raises:
        HardLefschetzViolation: if some primitive dimension would be negative
    """
    if family.primitive:
        raise HardLefschetzViolation("family is already primitive", "input is a full diamond")
    levels = []
    for k in range(family.dim + 1):
        if k < 2:
            levels.append(family.level(k))
            continue
        try:
            levels.append(subtract(family.level(k), tate_twist(family.level(k - 2), 1)))
        except HardLefschetzViolation as e:
            raise HardLefschetzViolation(f"Lefschetz map H^{k - 2} -> H^{k} is not injective: {e.message}") from e
    return HodgeDiamondFamily(family.dim, tuple(levels), poincare_dual=False, connected=False, primitive=True)


def lefschetz_reassemble(primitive: HodgeDiamondFamily, connected: bool = True) -> HodgeDiamondFamily:
    """H^k = sum_r L^r P^{k-2r}, the inverse of :func:`primitive_part`."""
    levels = []
    for k in range(primitive.dim + 1):
        level = zero_hodge(k)
        for r in range(k // 2 + 1):
            level = direct_sum(level, tate_twist(primitive.level(k - 2 * r), r))
        levels.append(level)
    return HodgeDiamondFamily(primitive.dim, tuple(levels), connected=connected and levels[0].h(0, 0) == 1)


def _signed_pieces(hs: GradedHodgeStructure, label: str) -> Dict[Sign, GradedHodgeStructure]:
    if hs.is_zero:
        return {Sign.PLUS: hs.without_grading(), Sign.MINUS: hs.without_grading()}
    if hs.grading is None or not hs.grading.has_signs:
        raise MissingSignData(f"{label} (weight {hs.weight}) has no involution sign data")
    return {sign: hs.piece(sign=sign).without_grading() for sign in (Sign.PLUS, Sign.MINUS)}


def invariant_part_of_product(a: GradedHodgeStructure, b: GradedHodgeStructure) -> GradedHodgeStructure:
    """
    Invariant part of a (x) b under I_1 x I_2: (a+ (x) b+) + (a- (x) b-).

    The residual involution I_1 x Id acts on each summand by the sign of the first factor.

    Raises:
        MissingSignData: if either non-zero input lacks +/- data
    """
    pa, pb = _signed_pieces(a, "first factor"), _signed_pieces(b, "second factor")
    weight = a.weight + b.weight
    pieces: Dict[PieceKey, Dict[Bidegree, int]] = {}
    dims: Dict[Bidegree, int] = {}
    for sign in (Sign.PLUS, Sign.MINUS):
        part = tensor(pa[sign], pb[sign])
        pieces[(0, sign)] = dict(part.dims)
        for bideg, h in part.dims.items():
            dims[bideg] = dims.get(bideg, 0) + h
    return GradedHodgeStructure(weight, dims, Grading(1, pieces))


def invariant_kunneth(x: HodgeDiamondFamily, y: HodgeDiamondFamily, k: int) -> GradedHodgeStructure:
    """Invariant part of H^k(X x Y), summed over the Kunneth degrees r + s = k."""
    level = GradedHodgeStructure(k, {}, Grading(1, {}))
    for r in range(max(0, k - 2 * y.dim), min(k, 2 * x.dim) + 1):
        level = direct_sum(level, invariant_part_of_product(x.level(r), y.level(k - r)))
    return level


def direct_summand_descent_dims(
    total: FiltrationSignature, summands: Sequence[FiltrationSignature]
) -> DescentReport:
    """
    Check that a filtration on a sum restricts to the summands: f^p(sum) = sum_i f^p(summand_i)
    for every p, with every summand signature non-increasing and non-negative.

    Raises:
        InfeasibleSplit: on any length, monotonicity or additivity failure
    """
    summands = tuple(summands)
    if not summands:
        summands = (FiltrationSignature(tuple(0 for _ in total.f)),)
    for i, s in enumerate(summands):
        if len(s.f) != len(total.f):
            raise InfeasibleSplit(f"summand {i} has weight {s.weight}, total has weight {total.weight}")
        if any(v < 0 for v in s.f) or any(s.f[p] < s.f[p + 1] for p in range(len(s.f) - 1)):
            raise InfeasibleSplit(f"summand {i} signature {s.f} is not a decreasing filtration")
    for p, fp in enumerate(total.f):
        got = sum(s.f[p] for s in summands)
        if got != fp:
            raise InfeasibleSplit(f"f^{p} of the summands adds to {got}, expected {fp}")
    return DescentReport(
        total=total,
        summands=summands,
        summand_hodge_numbers=tuple(s.hodge_numbers() for s in summands),
        feasible=True,
    )
