"""
Double-exponential quadrature for Euler-type integrals and the periods of the genus-6
curves of the degree-5 family

    P_1 = int_0^1,  P_2 = int_1^{a_1},  P_3 = int_0^{a_2}
    of  W^{-2/5} (W - 1)^{-2/5} (W - a_1)^{-2/5} (W - a_2)^{-2/5} dW.

Each factor is a principal power evaluated along straight segments; a segment is split
at every branch point lying on it, so tanh-sinh only meets singularities at endpoints.
"""

from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import mpmath
from loguru import logger

from hodge_atlas.config.hodge_constants import TowerFamilies
from hodge_atlas.exceptions import CoincidentBranchPoints
from hodge_atlas.models.period_models import PeriodTable, PeriodValue
from hodge_atlas.periods.gamma import beta_value
from hodge_atlas.periods.precision import (
    Number,
    divide_values,
    multiply_values,
    resolve_precision,
    rounding_error,
    to_mpc,
    working_precision,
)

PERIOD_LABELS = ("P1", "P2", "P3")


def segment_integral(
    integrand: Callable, a, b, prec: Optional[int] = None, breakpoints: Sequence = ()
) -> PeriodValue:
    """
    int_a^b integrand along the straight segment, by tanh-sinh with level-doubling error
    estimate. ``breakpoints`` are interior points where the integrand is singular.
    """
    prec = resolve_precision(prec)
    with working_precision(prec):
        nodes = [a, *breakpoints, b]
        value, estimate = mpmath.quad(integrand, nodes, method="tanh-sinh", error=True)
        err = estimate + rounding_error(prec) * len(nodes) * max(1, abs(value))
    return PeriodValue(mpmath.mpc(value), err, prec, "tanh-sinh")


def _check_branch_points(a1: mpmath.mpc, a2: mpmath.mpc) -> None:
    for name, a in (("a1", a1), ("a2", a2)):
        if a == 0 or a == 1:
            raise CoincidentBranchPoints(f"{name} = {mpmath.nstr(a, 8)} coincides with a fixed branch point")
    if a1 == a2:
        raise CoincidentBranchPoints(f"a1 = a2 = {mpmath.nstr(a1, 8)}")


def _interior_points(start: mpmath.mpc, end: mpmath.mpc, candidates: Sequence[mpmath.mpc]) -> List[mpmath.mpc]:
    """Branch points strictly inside [start, end], ordered along the segment."""
    d = end - start
    length2 = abs(d) ** 2
    inside = []
    eps = mpmath.mpf(10) ** (-mpmath.mp.dps + 5)
    for z in candidates:
        t = ((z - start) * mpmath.conj(d)).real / length2
        if eps < t < 1 - eps and abs(start + t * d - z) <= eps * max(1, abs(d)):
            inside.append((t, z))
    return [z for _, z in sorted(inside, key=lambda item: item[0])]


def vz_integrand(a1: mpmath.mpc, a2: mpmath.mpc) -> Callable[[mpmath.mpc], mpmath.mpc]:
    e = TowerFamilies.VZ5_EXPONENT
    exponent = mpmath.mpf(e.numerator) / e.denominator

    def integrand(w):
        return (
            mpmath.power(w, exponent)
            * mpmath.power(w - 1, exponent)
            * mpmath.power(w - a1, exponent)
            * mpmath.power(w - a2, exponent)
        )

    return integrand


def vz_curve_periods(
    a1: Number, a2: Number, prec: Optional[int] = None
) -> Tuple[PeriodValue, PeriodValue, PeriodValue]:
    """
    (P_1, P_2, P_3) of the holomorphic form in the zeta_5^3 eigenspace.

    Raises:
        CoincidentBranchPoints: if a1 or a2 lies in {0, 1} or a1 = a2
    """
    prec = resolve_precision(prec)
    with working_precision(prec):
        a1, a2 = to_mpc(a1), to_mpc(a2)
        _check_branch_points(a1, a2)
        branch = [mpmath.mpc(0), mpmath.mpc(1), a1, a2]
        segments = ((mpmath.mpc(0), mpmath.mpc(1)), (mpmath.mpc(1), a1), (mpmath.mpc(0), a2))
        integrand = vz_integrand(a1, a2)
        plans = [(start, end, _interior_points(start, end, branch)) for start, end in segments]
    periods = tuple(segment_integral(integrand, start, end, prec, inner) for start, end, inner in plans)
    logger.debug(
        f"genus-6 periods at a1={mpmath.nstr(a1, 6)}, a2={mpmath.nstr(a2, 6)}: "
        + ", ".join(mpmath.nstr(p.value, 8) for p in periods)
    )
    return periods


def vz_normalized_periods(a1: Number, a2: Number, prec: Optional[int] = None) -> PeriodTable:
    """The three periods with the ratios P_2 / P_1 and P_3 / P_1."""
    p = vz_curve_periods(a1, a2, prec)
    periods: Dict[str, PeriodValue] = dict(zip(PERIOD_LABELS, p))
    normalized = {label: divide_values(value, p[0], "normalized-period") for label, value in periods.items()}
    return PeriodTable(name="vz5", periods=periods, normalized=normalized, reference=PERIOD_LABELS[0])


def quintic_threefold_periods(a1: Number, a2: Number, prec: Optional[int] = None) -> PeriodTable:
    """
    Periods B(1/5, 1/5) B(2/5, 2/5) P_i(a_1, a_2) of the top form of the quintic threefold
    in the degree-5 tower, up to algebraic factors. Normalizing removes the Beta constant.
    """
    prec = resolve_precision(prec)
    fifth, two_fifths = Fraction(1, 5), Fraction(2, 5)
    constant = multiply_values([beta_value(fifth, fifth, prec), beta_value(two_fifths, two_fifths, prec)], "beta")
    curve = vz_normalized_periods(a1, a2, prec)
    periods = {label: multiply_values([constant, value], "period-product") for label, value in curve.periods.items()}
    logger.info(f"quintic threefold periods at ({a1}, {a2})")
    return PeriodTable(name="quintic", periods=periods, normalized=dict(curve.normalized), reference=curve.reference)
