"""
Gamma and Beta values at rational arguments, and Beta periods of Fermat character classes.

Gamma uses Spouge's approximation

    Gamma(z + 1) = (z + A)^(z + 1/2) e^-(z + A) [c_0 + sum_{k=1}^{A-1} c_k / (z + k) + eps],

with relative error below A^-1/2 (2 pi)^-(A + 1/2) for Re z > 0, and the reflection
formula for Re z < 1/2.
"""

from fractions import Fraction
from functools import lru_cache
from math import ceil, factorial, log
from typing import Dict, Iterable, Optional, Tuple

import mpmath
from loguru import logger

from hodge_atlas.exceptions import PoleAtNonPositiveInteger
from hodge_atlas.models.domain_models import FermatClass
from hodge_atlas.models.period_models import PeriodTable, PeriodValue
from hodge_atlas.periods.precision import (
    Number,
    divide_values,
    guard,
    is_nonpositive_integer,
    resolve_precision,
    rounding_error,
    to_mp,
    working_precision,
)


def spouge_parameter(digits: int) -> int:
    """Smallest A with A^-1/2 (2 pi)^-(A + 1/2) < 10^-digits."""
    return max(2, ceil(digits * log(10) / log(2 * 3.141592653589793)))


@lru_cache(maxsize=32)
def _spouge_coefficients(a: int, dps: int) -> Tuple[mpmath.mpf, ...]:
    # the c_k alternate in sign and grow like e^A, so they need about A extra digits
    with mpmath.workdps(dps + a):
        coeffs = [mpmath.sqrt(2 * mpmath.pi)]
        for k in range(1, a):
            sign = 1 if k % 2 else -1
            coeffs.append(sign * mpmath.power(a - k, k - mpmath.mpf(0.5)) * mpmath.exp(a - k) / factorial(k - 1))
    return tuple(coeffs)


def _spouge(z: mpmath.mpf, digits: int) -> mpmath.mpf:
    """Gamma(z) for Re z >= 1/2."""
    if z < 1:
        with mpmath.workdps(digits + 5):
            return _spouge(z + 1, digits) / z
    a = spouge_parameter(digits)
    coeffs = _spouge_coefficients(a, digits)
    with mpmath.workdps(digits + a):
        x = z - 1
        series = coeffs[0] + sum(coeffs[k] / (x + k) for k in range(1, a))
        value = mpmath.power(x + a, x + mpmath.mpf(0.5)) * mpmath.exp(-(x + a)) * series
    return value


def gamma_value(x: Number, prec: Optional[int] = None) -> PeriodValue:
    """
    Gamma(x) for a rational (or real) x.

    Raises:
        PoleAtNonPositiveInteger: if x is 0, -1, -2, ...
    """
    prec = resolve_precision(prec)
    if is_nonpositive_integer(x):
        raise PoleAtNonPositiveInteger(f"Gamma has a pole at {x}")
    digits = guard(prec)
    with working_precision(prec):
        z = to_mp(x)
        if isinstance(x, (int, Fraction)) and Fraction(x).denominator == 1:
            return PeriodValue(mpmath.mpc(factorial(int(x) - 1)), mpmath.mpf(0), prec, "factorial")
        if z < mpmath.mpf(0.5):
            value = mpmath.pi / (mpmath.sinpi(z) * _spouge(1 - z, digits))
            method = "spouge-reflection"
        else:
            value = _spouge(z, digits)
            method = "spouge"
        err = rounding_error(prec) * abs(value) * 10
    return PeriodValue(mpmath.mpc(value), err, prec, method)


def beta_value(a: Number, b: Number, prec: Optional[int] = None) -> PeriodValue:
    """
    B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b); zero when a + b is a pole of Gamma.

    Raises:
        PoleAtNonPositiveInteger: if a or b is a non-positive integer
    """
    prec = resolve_precision(prec)
    ga = gamma_value(a, prec)
    gb = gamma_value(b, prec)
    total = Fraction(a) + Fraction(b) if isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)) else None
    with working_precision(prec):
        if total is None:
            total = to_mp(a) + to_mp(b)
        if is_nonpositive_integer(total):
            return PeriodValue(mpmath.mpc(0), mpmath.mpf(0), prec, "beta")
        numerator = PeriodValue(ga.value * gb.value, abs(ga.value) * gb.err + abs(gb.value) * ga.err, prec, "beta")
    return divide_values(numerator, gamma_value(total, prec), "beta")


def beta_periods(m: int, classes: Iterable[FermatClass], prec: Optional[int] = None) -> PeriodTable:
    """
    Periods B(a/m, b/m) of the holomorphic classes (a, b), a + b < m, among the given
    characters of the Fermat curve of degree m, normalized by B(1/m, 1/m).
    """
    prec = resolve_precision(prec)
    periods: Dict[str, PeriodValue] = {}
    for cls in classes:
        if cls.holomorphic:
            periods[f"{cls.a},{cls.b}"] = beta_value(*cls.beta_exponents(), prec=prec)
    reference = "1,1"
    normalized = {label: divide_values(v, periods[reference], "normalized-period") for label, v in periods.items()}
    logger.info(f"Fermat curve of degree {m}: {len(periods)} holomorphic Beta periods")
    return PeriodTable(name=f"fermat-{m}", periods=periods, normalized=normalized, reference=reference)
