"""
Conversion between the JSON DTOs and the domain types, and the text tables the CLI prints.
"""

from pathlib import Path
from typing import Iterable, List, Sequence

import mpmath
from loguru import logger

from hodge_atlas.hodge.diamond import betti_numbers, euler_characteristic
from hodge_atlas.io.report_dto import (
    AlgebraicityReportDto,
    BaseSpecDto,
    BVStepReportDto,
    CMStatusDto,
    CYWithInvolutionDto,
    EigenTableDto,
    HodgeFamilyDto,
    HodgeStructureDto,
    PeriodTableDto,
    PeriodValueDto,
    TowerSpecDto,
)
from hodge_atlas.linalg.selftest import SelftestReport
from hodge_atlas.models.domain_models import (
    BVStepReport,
    CMState,
    CMStatus,
    CYWithInvolution,
    EigenTable,
    GradedHodgeStructure,
    HodgeDiamondFamily,
    Sign,
    VZTowerReport,
)
from hodge_atlas.models.period_models import AlgebraicityReport, PeriodTable, PeriodValue
from hodge_atlas.towers.bv_tower import elliptic_with_involution
from hodge_atlas.utils.common import read_json_spec

PRESETS = {"elliptic": elliptic_with_involution}


# DTO -> domain

def hodge_from_dto(dto: HodgeStructureDto) -> GradedHodgeStructure:
    return GradedHodgeStructure.from_dict(dto.model_dump())


def family_from_dto(dto: HodgeFamilyDto) -> HodgeDiamondFamily:
    return HodgeDiamondFamily(
        dim=dto.dim,
        levels=tuple(hodge_from_dto(level) for level in dto.levels),
        poincare_dual=True,
        connected=dto.connected,
        primitive=dto.primitive,
    )


def cm_from_dto(dto: CMStatusDto) -> CMStatus:
    return CMStatus(CMState(dto.state), tuple(dto.provenance))


def cy_from_dto(dto: CYWithInvolutionDto, name: str = "") -> CYWithInvolution:
    return CYWithInvolution(
        name=dto.name or name,
        dim=dto.dim,
        levels=tuple(hodge_from_dto(level) for level in dto.levels),
        ramification=family_from_dto(dto.ramification),
        cm=tuple(cm_from_dto(status) for status in dto.cm),
    )


def base_from_dto(dto: BaseSpecDto) -> CYWithInvolution:
    if dto.cy is not None:
        return cy_from_dto(dto.cy, dto.name)
    preset = PRESETS.get(dto.preset)
    if preset is None:
        raise ValueError(f"unknown preset {dto.preset!r} for base {dto.name!r}; known: {sorted(PRESETS)}")
    return preset(dto.name, CMState(dto.cm or CMState.UNKNOWN.value))


def load_tower_spec(path: Path) -> List[CYWithInvolution]:
    """
    Read a tower spec file.

    Raises:
        OSError: if the file cannot be read
        ValueError: for malformed JSON or an unknown preset
        pydantic.ValidationError: if the JSON does not match the spec schema
    """
    spec = TowerSpecDto.model_validate(read_json_spec(path))
    bases = [base_from_dto(base) for base in spec.bases]
    logger.debug(f"loaded tower spec {path} with {len(bases)} bases")
    return bases


def bv_report_from_dto(dto: BVStepReportDto) -> BVStepReport:
    return BVStepReport(
        output=cy_from_dto(dto.output),
        kunneth=tuple(hodge_from_dto(level) for level in dto.kunneth),
        invariant=tuple(hodge_from_dto(level) for level in dto.invariant),
        exceptional=tuple(hodge_from_dto(level) for level in dto.exceptional),
        cm_trace=tuple(cm_from_dto(status) for status in dto.cm_trace),
    )


def eigen_table_from_dto(dto: EigenTableDto) -> EigenTable:
    entries = tuple((h10, h01) for _, h10, h01 in sorted(dto.entries))
    return EigenTable(dto.m, entries)


def period_value_from_dto(dto: PeriodValueDto) -> PeriodValue:
    precision = int(dto.precision)
    with mpmath.workdps(precision + 10):
        value = mpmath.mpc(mpmath.mpf(dto.re), mpmath.mpf(dto.im))
        err = mpmath.mpf(dto.err)
    return PeriodValue(value, err, precision, dto.method)


def period_table_from_dto(dto: PeriodTableDto) -> PeriodTable:
    return PeriodTable(
        name=dto.name,
        periods={label: period_value_from_dto(v) for label, v in dto.periods.items()},
        normalized={label: period_value_from_dto(v) for label, v in dto.normalized.items()},
        reference=dto.reference,
    )


def algebraicity_from_dto(dto: AlgebraicityReportDto) -> AlgebraicityReport:
    value = period_value_from_dto(dto.value)
    residual = None
    if dto.residual is not None:
        with mpmath.workdps(value.precision + 10):
            residual = mpmath.mpf(dto.residual)
    return AlgebraicityReport(
        value=value,
        degree_bound=int(dto.degree_bound),
        height_bound=int(dto.height_bound),
        polynomial=None if dto.polynomial is None else tuple(int(c) for c in dto.polynomial),
        residual=residual,
        verified_at_double_precision=dto.verified_at_double_precision,
    )


# tables

def _row(cells: Iterable, widths: Sequence[int]) -> str:
    return "  ".join(str(c).rjust(w) for c, w in zip(cells, widths)).rstrip()


def render_levels(levels: Sequence[GradedHodgeStructure], title: str = "") -> str:
    """One row per degree k: h^{k,0} ... h^{0,k} and b_k."""
    lines = [title] if title else []
    for level in levels:
        numbers = " ".join(str(h) for h in level.hodge_numbers())
        lines.append(f"  H^{level.weight}: ({numbers})  b={level.dimension}")
    return "\n".join(lines)


def render_cy(cy: CYWithInvolution) -> str:
    diamond = cy.diamond()
    lines = [render_levels(diamond.all_levels(), f"{cy.name}  dim={cy.dim}")]
    lines.append(f"  betti={betti_numbers(diamond)}  euler={euler_characteristic(diamond)}")
    for k, level in enumerate(cy.levels):
        plus = level.piece(sign=Sign.PLUS).hodge_numbers() if level.grading is not None else "-"
        minus = level.piece(sign=Sign.MINUS).hodge_numbers() if level.grading is not None else "-"
        lines.append(f"  H^{k} +{plus} -{minus}  cm={cy.cm_at(k).state.value}")
    return "\n".join(lines)


def render_bv_reports(reports: Sequence[BVStepReport]) -> str:
    blocks = []
    for level, report in enumerate(reports, start=1):
        blocks.append(f"level {level}")
        blocks.append(render_cy(report.output))
        exceptional = [lv.dimension for lv in report.exceptional]
        blocks.append(f"  exceptional contribution per degree: {exceptional}")
    return "\n".join(blocks)


def render_eigen_table(table: EigenTable, title: str) -> str:
    widths = (4, 6, 6)
    lines = [f"{title}  m={table.m}  genus={table.genus}", _row(("j", "h10", "h01"), widths)]
    for j in range(1, table.m):
        lines.append(_row((j, table.h10(j), table.h01(j)), widths))
    lines.append(f"r = {table.r_values()}")
    return "\n".join(lines)


def render_vz(report: VZTowerReport) -> str:
    lines = [
        f"degree {report.m}, n = {report.n}, branch exponents {report.spec.branch_exponents}",
        render_eigen_table(report.base, "first-step curve"),
        render_eigen_table(report.fermat, "Fermat curve"),
        f"surface core {report.surface.core.hodge_numbers()}",
    ]
    if report.surface.final is not None:
        lines.append(
            f"surface with correction c={report.surface.correction}: {report.surface.final.hodge_numbers()}"
            f"  (hypersurface oracle {report.surface_oracle})"
        )
    if report.threefold is not None:
        lines.append(f"threefold H^3 {report.threefold.hodge_numbers()}")
    return "\n".join(lines)


def render_period_value(label: str, value: PeriodValue) -> str:
    data = value.to_dict()
    return f"{label}: {data['re']} + {data['im']}i  err={data['err']}  [{data['method']}]"


def render_period_table(table: PeriodTable) -> str:
    lines = [f"{table.name} (normalized by {table.reference})"]
    for label in sorted(table.periods):
        lines.append(render_period_value(f"  {label}", table.periods[label]))
        lines.append(render_period_value(f"  {label}/{table.reference}", table.normalized[label]))
    return "\n".join(lines)


def render_algebraicity(report: AlgebraicityReport) -> str:
    lines = [render_period_value("value", report.value), f"relation: {report.describe()}"]
    if report.found:
        lines.append(f"residual {mpmath.nstr(report.residual, 5)}, re-verified at doubled precision")
    return "\n".join(lines)


def render_selftest(report: SelftestReport) -> str:
    widths = (26, 8)
    lines = [f"lemma self-check, seed {report.seed}", _row(("lemma", "passed"), widths)]
    for name, count in sorted(report.passed.items()):
        lines.append(_row((name, count), widths))
    for name, m, detail in report.failures:
        lines.append(f"FAILED {name} over Q(zeta_{m}): {detail}")
    return "\n".join(lines)


def render_oracle(degree: int, ambient: int, row: Sequence[int]) -> str:
    return f"smooth degree-{degree} hypersurface in P^{ambient}: middle Hodge numbers {tuple(row)}"

