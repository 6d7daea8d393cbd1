"""
Dimension-level calculus of rational Hodge structures.

Structures are stored as graded Hodge numbers; every operation returns a freshly
validated :class:`GradedHodgeStructure`.
"""

from math import lcm
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

from loguru import logger

from hodge_atlas.exceptions import GradingIncompatible, HardLefschetzViolation, WeightMismatch
from hodge_atlas.models.domain_models import (
    Bidegree,
    FiltrationSignature,
    GradedHodgeStructure,
    Grading,
    HodgeDiamondFamily,
    PieceKey,
    Sign,
)

DimsLike = Union[Mapping[Bidegree, int], Iterable[Tuple[int, int, int]]]


def _as_dims(dims: DimsLike) -> Dict[Bidegree, int]:
    if isinstance(dims, Mapping):
        return {(int(p), int(q)): int(h) for (p, q), h in dims.items()}
    out: Dict[Bidegree, int] = {}
    for p, q, h in dims:
        out[(int(p), int(q))] = out.get((int(p), int(q)), 0) + int(h)
    return out


def make_hodge(
    weight: int,
    dims: DimsLike,
    grading: Optional[Union[Grading, Mapping[PieceKey, DimsLike]]] = None,
    m: int = 1,
) -> GradedHodgeStructure:
    """
    Build a validated Hodge structure.

    Args:
        weight: The weight k; every bidegree must satisfy p + q = k
        dims: Hodge numbers as a mapping (p, q) -> h or as (p, q, h) triples
        grading: Optional grading, either a :class:`Grading` or a mapping (j, sign) -> dims
        m: Character modulus used when ``grading`` is given as a mapping

    Returns:
        The validated structure

    Raises:
        SymmetryViolation: if h^{p,q} != h^{q,p} or conjugation does not swap graded pieces
        GradingMismatch: if the graded pieces do not sum to the totals
    """
    if grading is not None and not isinstance(grading, Grading):
        grading = Grading(m, {(j, Sign(s)): _as_dims(d) for (j, s), d in grading.items()})
    return GradedHodgeStructure(weight, _as_dims(dims), grading)


def zero_hodge(weight: int, grading_m: Optional[int] = None) -> GradedHodgeStructure:
    return GradedHodgeStructure(weight, {}, None if grading_m is None else Grading(grading_m, {}))


def unit_hodge(sign: Optional[Sign] = None, m: int = 1) -> GradedHodgeStructure:
    """Q(0): weight 0, dimension 1, optionally placed in piece (0, sign)."""
    grading = None if sign is None else Grading(m, {(0, sign): {(0, 0): 1}})
    return GradedHodgeStructure(0, {(0, 0): 1}, grading)


def signature(hs: GradedHodgeStructure) -> FiltrationSignature:
    k = hs.weight
    f = []
    running = 0
    for p in range(k, -1, -1):
        running += hs.h(p, k - p)
        f.append(running)
    return FiltrationSignature(tuple(reversed(f)))


def _merge_gradings(a: GradedHodgeStructure, b: GradedHodgeStructure) -> Optional[Grading]:
    if a.is_zero and a.grading is None:
        return b.grading
    if b.is_zero and b.grading is None:
        return a.grading
    if a.grading is None or b.grading is None:
        return None
    common = lcm(a.grading.m, b.grading.m)
    ga, gb = a.grading.lifted(common), b.grading.lifted(common)
    pieces: Dict[PieceKey, Dict[Bidegree, int]] = {key: dict(d) for key, d in ga.pieces.items()}
    for key, dims in gb.pieces.items():
        target = pieces.setdefault(key, {})
        for bideg, h in dims.items():
            target[bideg] = target.get(bideg, 0) + h
    return Grading(common, pieces)


def direct_sum(a: GradedHodgeStructure, *others: GradedHodgeStructure) -> GradedHodgeStructure:
    """
    Pointwise sum of Hodge numbers; gradings are merged over the lcm of their moduli.
    An ungraded non-zero summand drops the grading of the result.
    """
    out = a
    for b in others:
        if b.weight != out.weight:
            raise WeightMismatch(f"cannot add weight {out.weight} and weight {b.weight}")
        dims = dict(out.dims)
        for bideg, h in b.dims.items():
            dims[bideg] = dims.get(bideg, 0) + h
        out = GradedHodgeStructure(out.weight, dims, _merge_gradings(out, b))
    return out


def tensor(a: GradedHodgeStructure, b: GradedHodgeStructure, coerce: bool = False) -> GradedHodgeStructure:
    """
    Kunneth tensor product: h^{r,s} = sum h^{p,q}(a) h^{p',q'}(b) over p+p'=r, q+q'=s.

    Character indices add and involution signs multiply. Gradings with different moduli
    are rejected unless ``coerce`` lifts both to the lcm.
    """
    weight = a.weight + b.weight
    dims: Dict[Bidegree, int] = {}
    for (p, q), h in a.dims.items():
        for (p2, q2), h2 in b.dims.items():
            dims[(p + p2, q + q2)] = dims.get((p + p2, q + q2), 0) + h * h2
    grading = None
    if a.grading is not None and b.grading is not None:
        ga, gb = a.grading, b.grading
        if ga.m != gb.m:
            if not coerce:
                raise GradingIncompatible(f"cannot tensor a Z/{ga.m} grading with a Z/{gb.m} grading")
            common = lcm(ga.m, gb.m)
            logger.debug(f"lifting Z/{ga.m} and Z/{gb.m} gradings to Z/{common}")
            ga, gb = ga.lifted(common), gb.lifted(common)
        pieces: Dict[PieceKey, Dict[Bidegree, int]] = {}
        for (j, s), da in ga.pieces.items():
            for (j2, s2), db in gb.pieces.items():
                target = pieces.setdefault(((j + j2) % ga.m, s * s2), {})
                for (p, q), h in da.items():
                    for (p2, q2), h2 in db.items():
                        target[(p + p2, q + q2)] = target.get((p + p2, q + q2), 0) + h * h2
        grading = Grading(ga.m, pieces)
    return GradedHodgeStructure(weight, dims, grading)


def tate_twist(a: GradedHodgeStructure, n: int) -> GradedHodgeStructure:
    """
    The twist a(-n): bidegrees shift by (n, n) and the weight grows by 2n.

    Raises:
        NegativeBidegree: if a class would land at p < 0 or q < 0
    """
    return a.twisted(n)


def sign_part(a: GradedHodgeStructure, sign: Sign) -> GradedHodgeStructure:
    return a.piece(sign=sign)


def subtract(a: GradedHodgeStructure, b: GradedHodgeStructure) -> GradedHodgeStructure:
    """
    Complement of b inside a at the dimension level.

    Raises:
        HardLefschetzViolation: if some graded dimension of b exceeds that of a
    """
    if a.weight != b.weight:
        raise WeightMismatch(f"cannot subtract weight {b.weight} from weight {a.weight}")
    dims = dict(a.dims)
    for bideg, h in b.dims.items():
        dims[bideg] = dims.get(bideg, 0) - h
        if dims[bideg] < 0:
            raise HardLefschetzViolation(f"dimension at {bideg} of weight {a.weight} would become {dims[bideg]}")
    grading = None
    if a.grading is not None and (b.grading is not None or b.is_zero):
        gb = b.grading or Grading(a.grading.m, {})
        common = lcm(a.grading.m, gb.m)
        ga, gb = a.grading.lifted(common), gb.lifted(common)
        pieces = {key: dict(d) for key, d in ga.pieces.items()}
        for key, d in gb.pieces.items():
            target = pieces.setdefault(key, {})
            for bideg, h in d.items():
                target[bideg] = target.get(bideg, 0) - h
                if target[bideg] < 0:
                    raise HardLefschetzViolation(f"graded piece {key} at {bideg} would become {target[bideg]}")
        grading = Grading(common, pieces)
    return GradedHodgeStructure(a.weight, dims, grading)


def poincare_polynomial(obj: Union[GradedHodgeStructure, HodgeDiamondFamily]) -> Dict[Bidegree, int]:
    """Coefficients of sum h^{p,q} x^p y^q, over all levels for a family."""
    if isinstance(obj, GradedHodgeStructure):
        return dict(obj.dims)
    out: Dict[Bidegree, int] = {}
    for level in obj.all_levels():
        for bideg, h in level.dims.items():
            out[bideg] = out.get(bideg, 0) + h
    return out


def multiply_polynomials(a: Mapping[Bidegree, int], b: Mapping[Bidegree, int]) -> Dict[Bidegree, int]:
    out: Dict[Bidegree, int] = {}
    for (p, q), h in a.items():
        for (p2, q2), h2 in b.items():
            out[(p + p2, q + q2)] = out.get((p + p2, q + q2), 0) + h * h2
    return {k: v for k, v in sorted(out.items()) if v}


def is_pp_concentrated(hs: GradedHodgeStructure) -> bool:
    """True for the zero structure or one supported in a single bidegree (p, p)."""
    if hs.is_zero:
        return True
    return len(hs.dims) == 1 and next(iter(hs.dims))[0] == next(iter(hs.dims))[1]


def describe(hs: GradedHodgeStructure) -> str:
    return f"H(w={hs.weight})" + str(hs.hodge_numbers())
