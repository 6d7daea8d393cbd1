"""
The Borcea-Voisin step and its iteration.

From Calabi-Yau varieties with involution A_1, A_2 the step blows up the fixed locus
R_1 x R_2 of I_1 x I_2 on A_1 x A_2 and takes the quotient. Cohomologically

    H^k(B) = H^k(A_1 x A_2)^{I_1 x I_2} + H^{k-2}(R_1 x R_2)(-1),

the exceptional summand sitting in the invariant part of the new involution, which is
induced by I_1 x Id.
"""

from typing import List, Sequence, Tuple

from loguru import logger

from hodge_atlas.config.hodge_constants import TowerFamilies
from hodge_atlas.exceptions import (
    EmptyProduct,
    GradingMismatch,
    HodgeAtlasException,
    InvariantViolation,
    MissingSignData,
    TooFewBases,
)
from hodge_atlas.hodge.cm_propagation import Leaf, Sum, Tensor, Twist, cm_propagate
from hodge_atlas.hodge.diamond import (
    family_sum,
    invariant_kunneth,
    kunneth_product,
    point_family,
    sign_part_family,
)
from hodge_atlas.hodge.hodge_calculus import direct_sum, make_hodge, tate_twist, tensor, zero_hodge
from hodge_atlas.models.domain_models import (
    BVStepReport,
    CMState,
    CMStatus,
    CYWithInvolution,
    GradedHodgeStructure,
    Grading,
    HodgeDiamondFamily,
    Sign,
)


def check_cy(candidate: HodgeDiamondFamily) -> Tuple[bool, List[str]]:
    """
    Check the Calabi-Yau profile h^{0,0} = 1, h^{j,0} = 0 for 0 < j < n and h^{n,0} = 1.

    Returns:
        (holds, violations) where violations lists every failed condition
    """
    n = candidate.dim
    violations = []
    if candidate.level(0).h(0, 0) != 1:
        violations.append(f"h^{{0,0}} = {candidate.level(0).h(0, 0)}, expected 1")
    for j in range(1, n):
        if candidate.level(j).h(j, 0) != 0:
            violations.append(f"h^{{{j},0}} = {candidate.level(j).h(j, 0)}, expected 0")
    if n > 0 and candidate.level(n).h(n, 0) != 1:
        violations.append(f"h^{{{n},0}} = {candidate.level(n).h(n, 0)}, expected 1")
    return not violations, violations


def validate_cy_with_involution(a: CYWithInvolution) -> None:
    """
    Raises:
        EmptyProduct: for a zero-dimensional input
        MissingSignData: if some non-zero level has no +/- split
        InvariantViolation: if the Calabi-Yau profile or the sign of the top form fails
    """
    if a.dim < 1 or not a.levels:
        raise EmptyProduct(f"{a.name} has dimension {a.dim}; a tower step needs positive-dimensional factors")
    if len(a.levels) != a.dim + 1 or len(a.cm) != a.dim + 1:
        raise InvariantViolation(f"{a.name} needs levels and CM statuses for k = 0..{a.dim}")
    for k, level in enumerate(a.levels):
        if not level.is_zero and (level.grading is None or not level.grading.has_signs):
            raise MissingSignData(f"{a.name} level {k} has no involution sign data")
    try:
        holds, violations = check_cy(a.diamond())
    except GradingMismatch as e:
        raise InvariantViolation(f"{a.name}: {e.message}") from e
    if not holds:
        raise InvariantViolation(f"{a.name} is not Calabi-Yau: {'; '.join(violations)}")
    top = a.levels[a.dim].piece(sign=Sign.PLUS)
    if top.h(a.dim, 0) != 0:
        raise InvariantViolation(f"{a.name}: the ({a.dim},0) class must be anti-invariant",
                                 "holomorphic top form lies in the minus part")
    if a.ramification.dim != a.dim - 1:
        raise InvariantViolation(f"{a.name}: fixed divisor has dimension {a.ramification.dim}, expected {a.dim - 1}",
                                 "ramification locus is a divisor")


def elliptic_with_involution(name: str = "E", cm: CMState = CMState.UNKNOWN) -> CYWithInvolution:
    """
    An elliptic curve with the involution p -> -p: H^1 is anti-invariant and the fixed
    locus is the four 2-torsion points.
    """
    h0 = make_hodge(0, {(0, 0): 1}, {(0, "+"): {(0, 0): 1}})
    h1 = make_hodge(1, {(1, 0): 1, (0, 1): 1}, {(0, "-"): {(1, 0): 1, (0, 1): 1}})
    return CYWithInvolution(
        name=name,
        dim=1,
        levels=(h0, h1),
        ramification=point_family(TowerFamilies.ELLIPTIC_FIXED_POINTS),
        cm=(CMStatus.asserted(CMState.CM, f"{name}.H0"), CMStatus.asserted(cm, f"{name}.H1")),
    )


def _signed(hs: GradedHodgeStructure, sign: Sign) -> GradedHodgeStructure:
    return GradedHodgeStructure(hs.weight, dict(hs.dims), Grading(1, {(0, sign): dict(hs.dims)}))


def _level_expression(a1: CYWithInvolution, a2: CYWithInvolution, ramification: HodgeDiamondFamily, k: int):
    terms = []
    x, y = a1.diamond(), a2.diamond()
    for r in range(max(0, k - 2 * a2.dim), min(k, 2 * a1.dim) + 1):
        s = k - r
        for sign in (Sign.PLUS, Sign.MINUS):
            left = x.level(r).piece(sign=sign) if not x.level(r).is_zero else x.level(r)
            right = y.level(s).piece(sign=sign) if not y.level(s).is_zero else y.level(s)
            terms.append(
                Tensor(
                    (
                        Leaf(left.without_grading(), a1.cm_at(r), f"{a1.name}.H{r}{sign.value}"),
                        Leaf(right.without_grading(), a2.cm_at(s), f"{a2.name}.H{s}{sign.value}"),
                    ),
                    label=f"{a1.name}.H{r}{sign.value} x {a2.name}.H{s}{sign.value}",
                )
            )
    if k >= 2:
        exceptional = Leaf(ramification.level(k - 2), CMStatus(), f"R1xR2.H{k - 2}")
        terms.append(Twist(exceptional, 1, label=f"R1xR2.H{k - 2}(-1)"))
    return Sum(tuple(terms), label=f"H{k}")


def bv_step(a1: CYWithInvolution, a2: CYWithInvolution) -> BVStepReport:
    """
    One Borcea-Voisin step.

    Args:
        a1: First factor; its involution induces the involution of the output
        a2: Second factor

    Returns:
        The report holding the output Calabi-Yau with involution and the per-degree
        Kunneth, invariant and exceptional tables

    Raises:
        InvariantViolation: if an input is not a Calabi-Yau with involution
        EmptyProduct: if an input is zero-dimensional
        MissingSignData: if a needed sign datum is absent
    """
    validate_cy_with_involution(a1)
    validate_cy_with_involution(a2)
    n = a1.dim + a2.dim
    x, y = a1.diamond(), a2.diamond()
    fixed = kunneth_product(a1.ramification, a2.ramification)
    logger.debug(
        f"step {a1.name} x {a2.name}: fixed locus of dimension {fixed.dim}, "
        f"betti {[lv.dimension for lv in fixed.all_levels()]}"
    )

    kunneth, invariant, exceptional, levels, statuses = [], [], [], [], []
    for k in range(n + 1):
        full = zero_hodge(k)
        for r in range(max(0, k - 2 * a2.dim), min(k, 2 * a1.dim) + 1):
            full = direct_sum(full, tensor(x.level(r), y.level(k - r)))
        inv = invariant_kunneth(x, y, k)
        exc = _signed(tate_twist(fixed.level(k - 2), 1), Sign.PLUS) if k >= 2 else _signed(zero_hodge(k), Sign.PLUS)
        kunneth.append(full)
        invariant.append(inv)
        exceptional.append(exc)
        levels.append(direct_sum(inv, exc))
        statuses.append(cm_propagate(_level_expression(a1, a2, fixed, k)))

    plus1 = sign_part_family(x, Sign.PLUS)
    plus2 = sign_part_family(y, Sign.PLUS)
    ramification = family_sum(kunneth_product(a1.ramification, plus2), kunneth_product(plus1, a2.ramification))

    output = CYWithInvolution(
        name=f"({a1.name} x {a2.name})",
        dim=n,
        levels=tuple(levels),
        ramification=ramification,
        cm=tuple(statuses),
    )
    holds, violations = check_cy(output.diamond())
    if not holds:
        raise InvariantViolation(f"step output {output.name} is not Calabi-Yau: {'; '.join(violations)}",
                                 "ramification data consistent with the factors")
    logger.info(f"Borcea-Voisin step {output.name}: dimension {n}, H^{n} = {levels[n].hodge_numbers()}")
    return BVStepReport(
        output=output,
        kunneth=tuple(kunneth),
        invariant=tuple(invariant),
        exceptional=tuple(exceptional),
        cm_trace=tuple(statuses),
    )


def run_tower(bases: Sequence[CYWithInvolution]) -> List[BVStepReport]:
    """
    Left fold of :func:`bv_step` over ``bases``.

    Raises:
        TooFewBases: for fewer than two bases
    """
    if len(bases) < 2:
        raise TooFewBases(f"a tower needs at least two bases, got {len(bases)}")
    reports: List[BVStepReport] = []
    current = bases[0]
    for base in bases[1:]:
        try:
            report = bv_step(current, base)
        except HodgeAtlasException as e:
            logger.error(f"tower step {current.name} x {base.name} failed: {e.message}")
            raise
        reports.append(report)
        current = report.output
    return reports


def tower_cm_status(reports: Sequence[BVStepReport]) -> List[Tuple[str, Tuple[CMStatus, ...]]]:
    return [(report.output.name, report.output.cm) for report in reports]
