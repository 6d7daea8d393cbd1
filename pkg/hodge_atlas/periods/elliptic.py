"""
Periods of the Legendre curve y^2 = x (x - 1) (x - lambda) and of products of such curves.

    omega_2(lambda) = pi F(1/2, 1/2, 1; lambda)
    omega_1(lambda) = -i pi F(1/2, 1/2, 1; 1 - lambda)
    tau = omega_2 / omega_1

The factor -i fixes the embedding of zeta_4 so that Im tau > 0 on (0, 1).
"""

from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

import mpmath
from loguru import logger

from hodge_atlas.config.config import configs
from hodge_atlas.config.hodge_constants import HypergeometricParameters
from hodge_atlas.exceptions import DegenerateLambda, SingularPath
from hodge_atlas.models.period_models import PeriodTable, PeriodValue
from hodge_atlas.periods.gamma import beta_value
from hodge_atlas.periods.hypergeometric import gauss_2f1
from hodge_atlas.periods.picard_fuchs import check_path, pf_continue
from hodge_atlas.periods.precision import (
    Number,
    divide_values,
    guard,
    multiply_values,
    resolve_precision,
    rounding_error,
    to_mpc,
    working_precision,
)

# series are used inside the unit disk while they need at most this many terms
SERIES_TERM_LIMIT = 20000

BASE_POINT = mpmath.mpf("0.5")


def _check_lambda(lam: mpmath.mpc) -> None:
    if lam == 0 or lam == 1:
        raise DegenerateLambda(f"lambda = {mpmath.nstr(lam.real, 5)} gives a singular Legendre curve")


def _series_terms(x_abs, prec: int) -> mpmath.mpf:
    """Rough number of terms the 2F1 series needs at modulus x_abs."""
    if x_abs == 0:
        return mpmath.mpf(0)
    return guard(prec) * mpmath.log(10) / -mpmath.log(x_abs)


def continuation_path(x: mpmath.mpc) -> List[mpmath.mpc]:
    """
    Polyline from 1/2 to x for the principal branch: straight when the segment keeps clear of
    0 and 1 before its end, otherwise over the half plane of x (the lower one for real x)
    and straight onto it.
    """
    direct = [mpmath.mpc(BASE_POINT), x]
    try:
        check_path(direct, mpmath.mpf(configs.HODGE_ODE_CLEARANCE), open_end=True)
        return direct
    except SingularPath:
        side = 1 if x.imag > 0 else -1
        height = side * max(1, abs(x.imag))
        return [mpmath.mpc(BASE_POINT), mpmath.mpc(BASE_POINT, height), mpmath.mpc(x.real, height), x]


def legendre_F(x: Number, prec: Optional[int] = None) -> PeriodValue:
    """
    Principal branch of F(1/2, 1/2, 1; x), the value on [1, oo) taken from below
    to match the principal square root in the AGM form.

    Raises:
        DegenerateLambda: for x = 1, where the function has its logarithmic singularity
    """
    prec = resolve_precision(prec)
    with working_precision(prec):
        x = to_mpc(x)
        x_abs = abs(x)
        if x == 1:
            raise DegenerateLambda("F(1/2, 1/2, 1; x) diverges at x = 1")
        use_series = x_abs < 1 and _series_terms(x_abs, prec) <= SERIES_TERM_LIMIT
    if use_series:
        return gauss_2f1(*HypergeometricParameters.LEGENDRE, x, prec)
    with working_precision(prec):
        path = continuation_path(x)
    solution = pf_continue(path, prec, HypergeometricParameters.LEGENDRE, open_end=True)
    return solution.period_values()[0]


def elliptic_periods(lam: Number, prec: Optional[int] = None) -> Tuple[PeriodValue, PeriodValue]:
    """
    (omega_1, omega_2) of the Legendre curve.

    Raises:
        DegenerateLambda: for lambda in {0, 1}
    """
    prec = resolve_precision(prec)
    with working_precision(prec):
        lam = to_mpc(lam)
        _check_lambda(lam)
        dual = 1 - lam
    f_lam = legendre_F(lam, prec)
    f_dual = legendre_F(dual, prec)
    with working_precision(prec):
        pi = mpmath.pi
        omega1 = PeriodValue(-1j * pi * f_dual.value, pi * f_dual.err, prec, f_dual.method)
        omega2 = PeriodValue(pi * f_lam.value, pi * f_lam.err, prec, f_lam.method)
    return omega1, omega2


def agm_periods(lam: Number, prec: Optional[int] = None) -> Tuple[PeriodValue, PeriodValue]:
    """
    The same periods from pi F(1/2, 1/2, 1; x) = pi / agm(1, sqrt(1 - x)).

    Raises:
        DegenerateLambda: for lambda in {0, 1}
    """
    prec = resolve_precision(prec)
    with working_precision(prec):
        lam = to_mpc(lam)
        _check_lambda(lam)
        pi = mpmath.pi
        omega2 = pi / mpmath.agm(1, mpmath.sqrt(1 - lam))
        omega1 = -1j * pi / mpmath.agm(1, mpmath.sqrt(lam))
        err = rounding_error(prec)
        result = (
            PeriodValue(omega1, err * max(1, abs(omega1)), prec, "agm"),
            PeriodValue(omega2, err * max(1, abs(omega2)), prec, "agm"),
        )
    return result


def tau(lam: Number, prec: Optional[int] = None) -> PeriodValue:
    """
    Normalized period omega_2 / omega_1.

    Raises:
        DivisionByZeroPeriod: if omega_1 vanishes within its error bound
    """
    omega1, omega2 = elliptic_periods(lam, prec)
    return divide_values(omega2, omega1, "period-ratio")


def kummer_normalized_periods(lam1: Number, lam2: Number, prec: Optional[int] = None) -> PeriodTable:
    """
    Periods omega_i(lambda_1) omega_j(lambda_2) of dz_1 ^ dz_2 on the Kummer surface of
    E_1 x E_2, normalized by the (1,1) period: 1, tau_2, tau_1 and tau_1 tau_2.
    """
    return tower_period_product([lam1, lam2], prec, name="kummer")


def tower_period_product(lambdas: Sequence[Number], prec: Optional[int] = None, name: str = "tower") -> PeriodTable:
    """
    Periods of the top form of a Borcea-Voisin tower over Legendre curves: products
    prod_k omega_{i_k}(lambda_k), labelled by the index string i_1 ... i_n.
    """
    prec = resolve_precision(prec)
    if not lambdas:
        raise DegenerateLambda("a period product needs at least one curve")
    factors: List[Tuple[PeriodValue, PeriodValue]] = [elliptic_periods(lam, prec) for lam in lambdas]
    periods: Dict[str, PeriodValue] = {}
    for choice in product((0, 1), repeat=len(factors)):
        label = "".join(str(i + 1) for i in choice)
        periods[label] = multiply_values([factors[k][i] for k, i in enumerate(choice)], "period-product")
    reference = "1" * len(factors)
    normalized = {
        label: divide_values(value, periods[reference], "normalized-period") for label, value in periods.items()
    }
    logger.info(f"{name} periods for {len(factors)} curves: {len(periods)} products")
    return PeriodTable(name=name, periods=periods, normalized=normalized, reference=reference)


def quartic_k3_periods(s: Number, prec: Optional[int] = None) -> PeriodTable:
    """
    Periods B(1/4, 1/4) omega_i(s) of the (2,0)-form on the quartic K3 surfaces of the
    degree-4 tower; their ratio is tau(s).
    """
    prec = resolve_precision(prec)
    constant = beta_value(Fraction(1, 4), Fraction(1, 4), prec)
    omegas = elliptic_periods(s, prec)
    periods = {f"P{i + 1}": multiply_values([constant, omega], "period-product") for i, omega in enumerate(omegas)}
    normalized = {label: divide_values(value, periods["P1"], "normalized-period") for label, value in periods.items()}
    return PeriodTable(name="quartic-k3", periods=periods, normalized=normalized, reference="P1")
