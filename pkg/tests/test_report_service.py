"""
Tests for tower spec loading, DTO conversion and the text tables.
"""
import json
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import mpmath
import pytest
from pydantic import ValidationError

from hodge_atlas.covers.cyclic_covers import vz_tower_report
from hodge_atlas.io import report_service
from hodge_atlas.io.report_dto import (
    AlgebraicityReportDto,
    BVStepReportDto,
    EigenTableDto,
    PeriodTableDto,
)
from hodge_atlas.models.domain_models import CMState
from hodge_atlas.models.period_models import PeriodValue
from hodge_atlas.periods.cm_detect import cm_detect
from hodge_atlas.periods.elliptic import kummer_normalized_periods
from hodge_atlas.towers.bv_tower import run_tower
from hodge_atlas.utils.common import convert


def _write(tmp_path: Path, data) -> Path:
    path = tmp_path / "spec.json"
    path.write_text(json.dumps(data), encoding="utf-8")
    return path


class TestLoadTowerSpec:

    def test_kummer_spec(self, kummer_spec):
        bases = report_service.load_tower_spec(kummer_spec)
        assert [b.name for b in bases] == ["E1", "E2"]
        assert all(b.cm_at(1).state == CMState.CM for b in bases)

    def test_missing_cm_is_unknown(self, borcea_spec):
        bases = report_service.load_tower_spec(borcea_spec)
        assert bases[2].cm_at(1).state == CMState.UNKNOWN

    def test_explicit_cy_round_trip(self, tmp_path, elliptic_cm):
        path = _write(tmp_path, {"bases": [{"name": "A", "cy": convert(elliptic_cm)}, {"name": "B", "preset": "elliptic"}]})
        bases = report_service.load_tower_spec(path)
        assert convert(bases[0]) == convert(elliptic_cm)

    def test_extra_key(self, tmp_path):
        with pytest.raises(ValidationError):
            report_service.load_tower_spec(_write(tmp_path, {"bases": [], "depth": 3}))

    def test_preset_and_cy_are_exclusive(self, tmp_path, elliptic_cm):
        base = {"name": "A", "preset": "elliptic", "cy": convert(elliptic_cm)}
        with pytest.raises(ValidationError):
            report_service.load_tower_spec(_write(tmp_path, {"bases": [base]}))

    def test_unknown_preset(self, tmp_path):
        with pytest.raises(ValueError, match="unknown preset"):
            report_service.load_tower_spec(_write(tmp_path, {"bases": [{"name": "A", "preset": "quartic"}]}))

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            report_service.load_tower_spec(tmp_path / "absent.json")


class TestDtoRoundTrip:

    def test_bv_report(self, kummer_spec):
        report = run_tower(report_service.load_tower_spec(kummer_spec))[0]
        dto = BVStepReportDto.model_validate(convert(report))
        assert convert(report_service.bv_report_from_dto(dto)) == convert(report)

    def test_eigen_table(self):
        table = vz_tower_report(5, 2).base
        restored = report_service.eigen_table_from_dto(EigenTableDto.model_validate(table.to_dict()))
        assert restored == table

    def test_period_table(self):
        table = kummer_normalized_periods("1/2", "0.3", prec=20)
        restored = report_service.period_table_from_dto(PeriodTableDto.model_validate(convert(table)))
        assert restored.reference == "11"
        assert abs(restored.normalized["21"].value - 1j) < mpmath.mpf(10) ** -18

    def test_algebraicity(self):
        with mpmath.workdps(60):
            value = PeriodValue(mpmath.mpc(0, 1), mpmath.mpf(0), 50, "literal")
        report = cm_detect(value, 2, 10)
        restored = report_service.algebraicity_from_dto(AlgebraicityReportDto.model_validate(convert(report)))
        assert restored.polynomial == (1, 0, 1)
        assert restored.verified_at_double_precision


class TestTables:

    def test_kummer_table(self, kummer_spec):
        reports = run_tower(report_service.load_tower_spec(kummer_spec))
        text = report_service.render_bv_reports(reports)
        assert "level 1" in text
        assert "H^2: (1 20 1)  b=22" in text
        assert "euler=24" in text

    def test_vz_table(self):
        text = report_service.render_vz(vz_tower_report(4, 1))
        assert "r = (2, 1, 0)" in text
        assert "genus=3" in text
