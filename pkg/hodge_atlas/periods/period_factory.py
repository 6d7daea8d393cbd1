from typing import Callable, Dict, Optional, Tuple

from loguru import logger

from hodge_atlas.covers.cyclic_covers import fermat_character_classes
from hodge_atlas.models.period_models import PeriodTable
from hodge_atlas.periods.appell import appell_f1, appell_f1_integral
from hodge_atlas.periods.elliptic import (
    agm_periods,
    elliptic_periods,
    kummer_normalized_periods,
    quartic_k3_periods,
    tau,
    tower_period_product,
)
from hodge_atlas.periods.gamma import beta_periods, beta_value, gamma_value
from hodge_atlas.periods.hypergeometric import gauss_2f1, hypergeom_closed_forms, schwarz_T, schwarz_T_series
from hodge_atlas.periods.quadrature import quintic_threefold_periods, vz_curve_periods, vz_normalized_periods


def fermat_beta_periods(m: int, prec: Optional[int] = None) -> PeriodTable:
    """Beta periods of the holomorphic characters of the Fermat curve of degree m."""
    return beta_periods(m, fermat_character_classes(m), prec)


_EVALUATORS: Dict[str, Callable] = {
    "gauss": gauss_2f1,
    "closed-form": hypergeom_closed_forms,
    "elliptic": elliptic_periods,
    "agm": agm_periods,
    "tau": tau,
    "schwarz": schwarz_T,
    "schwarz-series": schwarz_T_series,
    "appell": appell_f1,
    "appell-integral": appell_f1_integral,
    "vz5": vz_curve_periods,
    "vz5-normalized": vz_normalized_periods,
    "quintic": quintic_threefold_periods,
    "quartic": quartic_k3_periods,
    "kummer": kummer_normalized_periods,
    "tower": tower_period_product,
    "fermat": fermat_beta_periods,
    "gamma": gamma_value,
    "beta": beta_value,
}


class PeriodFactory:

    @staticmethod
    def kinds() -> Tuple[str, ...]:
        return tuple(sorted(_EVALUATORS))

    @staticmethod
    def create(kind: str) -> Callable:
        logger.debug(f"Creating period evaluator for kind: {kind}")
        evaluator = _EVALUATORS.get(kind.lower())
        if evaluator is None:
            raise ValueError(f"Unsupported period kind: {kind}")
        return evaluator
