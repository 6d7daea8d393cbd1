"""
Hodge Atlas - Hodge numbers of Calabi-Yau towers, exact cyclotomic linear algebra and period numerics.

This package tracks Hodge numbers, involution and character splits, and CM flags through
Borcea-Voisin towers and Viehweg-Zuo cyclic covers, and evaluates the periods of those
families to high precision with an integer-relation search for algebraic values.
"""

__version__ = "0.1.0"
__license__ = "MIT"

# Public API
from hodge_atlas.covers.cyclic_covers import eigen_dims_cyclic_cover, vz_tower_report
from hodge_atlas.models.domain_models import CMState, CYWithInvolution, GradedHodgeStructure, HodgeDiamondFamily
from hodge_atlas.periods.cm_detect import cm_detect
from hodge_atlas.periods.period_factory import PeriodFactory
from hodge_atlas.towers.bv_tower import bv_step, run_tower

__all__ = [
    "CMState",
    "CYWithInvolution",
    "GradedHodgeStructure",
    "HodgeDiamondFamily",
    "PeriodFactory",
    "bv_step",
    "cm_detect",
    "eigen_dims_cyclic_cover",
    "run_tower",
    "vz_tower_report",
]
