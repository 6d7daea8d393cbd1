"""
Working-precision helpers shared by the period evaluators.

Precision is counted in decimal digits; every evaluator works with
``prec + HODGE_GUARD_DIGITS`` digits and truncates series once the tail is below
``10^-(prec + HODGE_GUARD_DIGITS)``.
"""

from contextlib import contextmanager
from fractions import Fraction
from typing import Iterator, Optional, Sequence, Union

import mpmath

from hodge_atlas.config.config import configs
from hodge_atlas.exceptions import DivisionByZeroPeriod
from hodge_atlas.models.period_models import PeriodValue

Number = Union[int, Fraction, float, complex, str, mpmath.mpf, mpmath.mpc]


def resolve_precision(prec: Optional[int]) -> int:
    prec = configs.HODGE_PREC if prec is None else prec
    configs.validate_precision(prec)
    return prec


def guard(prec: int) -> int:
    return prec + configs.HODGE_GUARD_DIGITS


@contextmanager
def working_precision(prec: int) -> Iterator[int]:
    """Run the block at ``prec`` plus guard digits; yields the working digit count."""
    dps = guard(prec)
    with mpmath.workdps(dps):
        yield dps


def truncation_threshold(prec: int) -> mpmath.mpf:
    return mpmath.mpf(10) ** (-guard(prec))


def rounding_error(prec: int) -> mpmath.mpf:
    """Error bound attributed to a closed-form evaluation at ``prec`` digits."""
    return mpmath.mpf(10) ** (-guard(prec) + 2)


def to_mp(x: Number) -> Union[mpmath.mpf, mpmath.mpc]:
    """Convert a rational, float, complex or decimal string at the current precision."""
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    if isinstance(x, str):
        text = x.strip().replace(" ", "")
        if "/" in text and "j" not in text:
            return to_mp(Fraction(text))
        # mpmath parses "a+bj" at full precision
        return mpmath.mpmathify(text.replace("i", "j"))
    if isinstance(x, complex):
        return mpmath.mpc(x)
    return mpmath.mpmathify(x)


def to_mpc(x: Number) -> mpmath.mpc:
    return mpmath.mpc(to_mp(x))


def is_nonpositive_integer(x: Number) -> bool:
    if isinstance(x, (int, Fraction)):
        return x <= 0 and Fraction(x).denominator == 1
    v = to_mp(x)
    if isinstance(v, mpmath.mpc):
        if v.imag != 0:
            return False
        v = v.real
    return v <= 0 and v == mpmath.floor(v)


def divide_values(num: PeriodValue, den: PeriodValue, method: str = "quotient") -> PeriodValue:
    """num / den with first-order error propagation.

    Raises:
        DivisionByZeroPeriod: if ``den`` cannot be separated from zero
    """
    with working_precision(min(num.precision, den.precision)):
        size = abs(den.value)
        if size <= den.err:
            raise DivisionByZeroPeriod(
                f"normalizing period {mpmath.nstr(den.value, 10)} is zero within {mpmath.nstr(den.err, 3)}"
            )
        q = num.value / den.value
        err = (num.err + abs(q) * den.err) / (size - den.err)
    return PeriodValue(q, err, min(num.precision, den.precision), method)


def multiply_values(values: Sequence[PeriodValue], method: str = "product") -> PeriodValue:
    prec = min(v.precision for v in values)
    with working_precision(prec):
        total = mpmath.mpc(1)
        err = mpmath.mpf(0)
        for v in values:
            err = err * abs(v.value) + abs(total) * v.err + err * v.err
            total *= v.value
    return PeriodValue(total, err, prec, method)
