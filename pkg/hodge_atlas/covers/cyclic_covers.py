"""
Eigenspace bookkeeping for cyclic covers of P^1, Fermat curves and the Viehweg-Zuo
assembly of iterated cyclic covers.

Character convention: index j means the deck transformation acts on forms by zeta_m^j.
Under this convention r_n = h^{1,0}_{m-n}.
"""

from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Tuple

from loguru import logger

from hodge_atlas.covers.hypersurface import hypersurface_hodge_oracle
from hodge_atlas.exceptions import ConventionMismatch, DegenerateSpec, MissingGrading
from hodge_atlas.hodge.hodge_calculus import direct_sum, tate_twist, tensor
from hodge_atlas.models.domain_models import (
    Bidegree,
    CyclicCoverSpec,
    EigenTable,
    FermatClass,
    GradedHodgeStructure,
    Grading,
    PieceKey,
    Sign,
    SurfaceAssembly,
    VZTowerReport,
)


def genus_riemann_hurwitz(spec: CyclicCoverSpec) -> int:
    """2g - 2 = -2m + sum_i (m - gcd(m, d_i)) for a connected cover."""
    m = spec.m
    total = -2 * m + sum(m - gcd(m, d) for d in spec.branch_exponents)
    if total % 2:
        raise DegenerateSpec(f"Riemann-Hurwitz gives odd 2g - 2 = {total} for {spec}")
    return total // 2 + 1


def eigen_dims_cyclic_cover(spec: CyclicCoverSpec) -> EigenTable:
    """
    Chevalley-Weil dimensions h^{1,0}_j = -1 + sum_i <j d_i / m>, clamped at 0.

    Args:
        spec: Cover degree and branch exponents, the point at infinity included

    Returns:
        The table of (h^{1,0}_j, h^{0,1}_j) for j = 1..m-1

    Raises:
        DegenerateSpec: for disconnected covers or inconsistent genus
    """
    m = spec.m
    common = m
    for d in spec.branch_exponents:
        common = gcd(common, d)
    if common != 1:
        raise DegenerateSpec(f"gcd(m, d_i) = {common}: the cover y^{m} = ... is disconnected")
    h10: Dict[int, int] = {}
    for j in range(1, m):
        s = sum(Fraction(j * d, m) - (j * d) // m for d in spec.branch_exponents)
        if s.denominator != 1:
            raise DegenerateSpec(f"fractional parts at j = {j} sum to {s}")
        h10[j] = max(int(s) - 1, 0)
    entries = tuple((h10[j], h10[m - j]) for j in range(1, m))
    table = EigenTable(m, entries)
    genus = genus_riemann_hurwitz(spec)
    if table.genus != genus:
        raise DegenerateSpec(f"eigenspaces add to genus {table.genus}, Riemann-Hurwitz gives {genus}")
    logger.debug(f"cover m={m}, d={spec.branch_exponents}: h10 = {[h10[j] for j in range(1, m)]}")
    return table


def fermat_curve_eigen(m: int) -> EigenTable:
    """
    The Fermat curve of degree m as the cover w^m = prod_i (z - eps_i) with m branch points.
    """
    if m < 3:
        raise DegenerateSpec(f"Fermat curves need degree at least 3, got {m}")
    return eigen_dims_cyclic_cover(CyclicCoverSpec(m, (1,) * m))


def fermat_character_classes(m: int) -> List[FermatClass]:
    """The characters (a, b), 1 <= a, b <= m-1, a + b != m, spanning H^1 of the Fermat curve."""
    return [FermatClass(m, a, b) for a in range(1, m) for b in range(1, m) if a + b != m]


def vz_family_spec(m: int, n: int) -> CyclicCoverSpec:
    """
    First Viehweg-Zuo step: y^m = x (x - 1) (x - a_1) ... (x - a_{n-1}), i.e. n + 2 finite
    branch points of exponent 1 and the point at infinity with the balancing exponent.
    """
    if n < 1:
        raise DegenerateSpec(f"family dimension must be positive, got {n}")
    infinity = (-(n + 2)) % m or m
    return CyclicCoverSpec(m, (1,) * (n + 2) + (infinity,))


def _curve_piece(table: EigenTable, j: int) -> Dict[Bidegree, int]:
    return {(1, 0): table.h10(j), (0, 1): table.h01(j)}


def _graded(weight: int, m: int, pieces: Dict[PieceKey, Dict[Bidegree, int]]) -> GradedHodgeStructure:
    dims: Dict[Bidegree, int] = {}
    for piece in pieces.values():
        for bideg, h in piece.items():
            dims[bideg] = dims.get(bideg, 0) + h
    return GradedHodgeStructure(weight, dims, Grading(m, pieces))


def resolve_correction(core: GradedHodgeStructure, target_b2: int) -> Tuple[int, GradedHodgeStructure]:
    """
    Resolve c = dim W - dim W' against a target second Betti number; the correction
    lives in bidegree (1, 1) and in the trivial character.
    """
    c = target_b2 - core.dimension
    if core.h(1, 1) + c < 0:
        raise ConventionMismatch(f"target b2 = {target_b2} is below the core's non-(1,1) part",
                                 "correction term has non-negative final h^{1,1}")
    if c >= 0 and core.grading is not None:
        correction = GradedHodgeStructure(2, {(1, 1): c}, Grading(core.grading.m, {(0, Sign.NONE): {(1, 1): c}}))
        return c, direct_sum(core, correction)
    dims = dict(core.dims)
    dims[(1, 1)] = dims.get((1, 1), 0) + c
    return c, GradedHodgeStructure(2, dims)


def vz_surface_assemble(
    base: EigenTable,
    fermat: EigenTable,
    target_b2: Optional[int] = None,
    expected_h20: Optional[int] = 1,
) -> SurfaceAssembly:
    """
    Core of the second step: sum_i H^1(F_1)_i (x) H^1(Sigma)_{m-i}, graded by the base index i.

    Args:
        base: Eigenspace table of the first-step curve
        fermat: Eigenspace table of the Fermat curve of the same degree
        target_b2: Second Betti number used to resolve the (1,1) correction
        expected_h20: Geometric genus the core must reach; None skips the check

    Raises:
        ConventionMismatch: if the core's h^{2,0} differs from ``expected_h20``
    """
    if base.m != fermat.m:
        raise ConventionMismatch(f"base table has m = {base.m}, Fermat table has m = {fermat.m}")
    m = base.m
    pieces: Dict[PieceKey, Dict[Bidegree, int]] = {}
    for i in range(1, m):
        left = GradedHodgeStructure(1, _curve_piece(base, i))
        right = GradedHodgeStructure(1, _curve_piece(fermat, m - i))
        pieces[(i, Sign.NONE)] = dict(tensor(left, right).dims)
    core = _graded(2, m, pieces)
    if expected_h20 is not None and core.h(2, 0) != expected_h20:
        raise ConventionMismatch(
            f"core h^{{2,0}} = {core.h(2, 0)}, expected {expected_h20}; check the eigenspace index convention"
        )
    if target_b2 is None:
        return SurfaceAssembly(core=core)
    c, final = resolve_correction(core, target_b2)
    logger.info(f"surface core {core.hodge_numbers()} resolved with c = {c} to {final.hodge_numbers()}")
    return SurfaceAssembly(core=core, correction=c, final=final)


def vz_surface_character_grading(base: EigenTable) -> GradedHodgeStructure:
    """
    Z/m-graded core of the second step built from Fermat characters.

    The class H^1(F_1)_i (x) (a, b) occurs when i + (a + b) = 0 mod m and is graded by the
    character m - b of the deck group of the new cover. Its totals equal the core of
    :func:`vz_surface_assemble`.
    """
    m = base.m
    pieces: Dict[PieceKey, Dict[Bidegree, int]] = {}
    for cls in fermat_character_classes(m):
        i = (-cls.diagonal_character) % m
        if i == 0:
            continue
        target = pieces.setdefault((cls.second_character, Sign.NONE), {})
        cp, cq = cls.bidegree
        for (p, q), h in _curve_piece(base, i).items():
            target[(p + cp, q + cq)] = target.get((p + cp, q + cq), 0) + h
    return _graded(2, m, pieces)


def vz_threefold_assemble(
    surface_graded: GradedHodgeStructure,
    fermat: EigenTable,
    base_curve: EigenTable,
    expected_h30: Optional[int] = 1,
) -> GradedHodgeStructure:
    """
    Third step: sum_{i} H^2(F_2)_i (x) H^1(Sigma)_{m-i}  plus  (m-1) copies of H^1(F_1)(-1).

    The output is graded by i, the twisted copies sitting in the trivial character.

    Raises:
        MissingGrading: if the surface data is not Z/m graded
        ConventionMismatch: if h^{3,0} differs from ``expected_h30``
    """
    m = fermat.m
    grading = surface_graded.grading
    if grading is None or not grading.pieces:
        raise MissingGrading("surface data carries no character grading")
    if grading.m != m:
        raise MissingGrading(f"surface data is Z/{grading.m} graded, Fermat table has m = {m}")
    if surface_graded.weight != 2:
        raise MissingGrading(f"surface data has weight {surface_graded.weight}, expected 2")
    pieces: Dict[PieceKey, Dict[Bidegree, int]] = {}
    for i in range(1, m):
        surface_piece = surface_graded.piece(j=i).without_grading()
        curve_piece = GradedHodgeStructure(1, _curve_piece(fermat, m - i))
        pieces[(i, Sign.NONE)] = dict(tensor(surface_piece, curve_piece).dims)
    twisted = tate_twist(base_curve.as_hodge().without_grading(), 1)
    pieces[(0, Sign.NONE)] = {bideg: (m - 1) * h for bideg, h in twisted.dims.items()}
    threefold = _graded(3, m, pieces)
    if expected_h30 is not None and threefold.h(3, 0) != expected_h30:
        raise ConventionMismatch(f"assembled h^{{3,0}} = {threefold.h(3, 0)}, expected {expected_h30}")
    logger.info(f"threefold assembly H^3 = {threefold.hodge_numbers()}")
    return threefold


def vz_tower_report(m: int, n: int) -> VZTowerReport:
    """
    Eigenspace tables and assemblies of the degree-m tower over the n-parameter family.

    The surface correction is resolved against the Betti number of a smooth degree-m
    surface in P^3. The level F_{m-2} is Calabi-Yau, so its top Hodge number is pinned to 1.
    """
    spec = vz_family_spec(m, n)
    base = eigen_dims_cyclic_cover(spec)
    fermat = fermat_curve_eigen(m)
    oracle = tuple(hypersurface_hodge_oracle(m, 3))
    surface = vz_surface_assemble(base, fermat, target_b2=sum(oracle), expected_h20=1 if m == 4 else None)
    threefold = None
    if n >= 2:
        graded = vz_surface_character_grading(base)
        threefold = vz_threefold_assemble(graded, fermat, base, expected_h30=1 if m == 5 else None)
    logger.info(f"degree-{m} tower over {n} parameters: genus {base.genus}, r = {base.r_values()}")
    return VZTowerReport(
        spec=spec, n=n, base=base, fermat=fermat, surface=surface, surface_oracle=oracle, threefold=threefold
    )
