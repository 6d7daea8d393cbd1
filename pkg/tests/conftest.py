"""
Shared fixtures: elliptic curves with involution, small cyclotomic fields and the
sample tower specs under docs/specs.
"""
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import pytest

from hodge_atlas.linalg.cyclotomic import CyclotomicNumber
from hodge_atlas.models.domain_models import CMState
from hodge_atlas.towers.bv_tower import elliptic_with_involution

SPECS_DIR = project_root / "docs" / "specs"


@pytest.fixture
def elliptic_cm():
    return elliptic_with_involution("E1", CMState.CM)


@pytest.fixture
def elliptic_cm_second():
    return elliptic_with_involution("E2", CMState.CM)


@pytest.fixture
def elliptic_unknown():
    return elliptic_with_involution("E3", CMState.UNKNOWN)


@pytest.fixture
def i_unit() -> CyclotomicNumber:
    return CyclotomicNumber.i()


@pytest.fixture
def zeta5() -> CyclotomicNumber:
    return CyclotomicNumber.zeta(5)


@pytest.fixture
def kummer_spec() -> Path:
    return SPECS_DIR / "kummer.json"


@pytest.fixture
def borcea_spec() -> Path:
    return SPECS_DIR / "borcea_threefold.json"
