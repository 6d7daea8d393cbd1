"""
Algebraicity detection for normalized periods by integer-relation search.

For each degree d <= D the lattice spanned by the rows

    (e_k | round(N Re v^k), round(N Im v^k)),   k = 0..d,   N = 10^prec

is LLL-reduced; a short vector whose first d + 1 entries are bounded by H is a candidate
polynomial. Candidates are kept only if they vanish at v to half the working precision
and again, to the full precision, at a doubled-precision value of v. A failed search
reports "none found at (D, H)", which proves nothing about transcendence.
"""

from math import ceil, gcd, log10
from typing import Callable, List, Optional, Sequence, Tuple

import mpmath
from loguru import logger
from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from hodge_atlas.config.config import configs
from hodge_atlas.exceptions import InsufficientPrecision
from hodge_atlas.models.period_models import AlgebraicityReport, PeriodValue
from hodge_atlas.periods.precision import working_precision

Recompute = Callable[[int], PeriodValue]


def required_precision(degree_bound: int, height_bound: int) -> int:
    """Smallest working precision for which a search at (D, H) is meaningful."""
    return ceil(2 * degree_bound * log10(max(height_bound, 2))) + 20


def _evaluate(coeffs: Sequence[int], v: mpmath.mpc) -> mpmath.mpc:
    """sum_k coeffs[k] v^k, coefficients listed from the constant term up."""
    total = mpmath.mpc(0)
    for c in reversed(coeffs):
        total = total * v + c
    return total


def _normalize(coeffs: Sequence[int]) -> Tuple[int, ...]:
    """Primitive, positive leading coefficient, listed from the leading term down."""
    divisor = 0
    for c in coeffs:
        divisor = gcd(divisor, c)
    top = [c // divisor for c in reversed(coeffs)]
    while top and top[0] == 0:
        top.pop(0)
    if top and top[0] < 0:
        top = [-c for c in top]
    return tuple(top)


def _lattice_candidates(v: mpmath.mpc, degree: int, prec: int) -> List[List[int]]:
    scale = mpmath.mpf(10) ** prec
    rows = []
    power = mpmath.mpc(1)
    for k in range(degree + 1):
        identity = [1 if j == k else 0 for j in range(degree + 1)]
        rows.append(identity + [int(mpmath.nint(scale * power.real)), int(mpmath.nint(scale * power.imag))])
        power *= v
    lattice = DomainMatrix([[ZZ(x) for x in row] for row in rows], (degree + 1, degree + 3), ZZ)
    reduced = lattice.lll()
    return [[int(x) for x in row[: degree + 1]] for row in reduced.to_list()]


def _search(v: mpmath.mpc, degree_bound: int, height_bound: int, prec: int):
    threshold = mpmath.mpf(10) ** (-(prec // 2))
    for degree in range(1, degree_bound + 1):
        logger.debug(f"relation search at degree {degree}")
        for coeffs in _lattice_candidates(v, degree, prec):
            if coeffs[degree] == 0 or max(abs(c) for c in coeffs) > height_bound:
                continue
            residual = abs(_evaluate(coeffs, v))
            if residual < threshold:
                return coeffs, residual
    return None, None


def cm_detect(
    value: PeriodValue,
    degree_bound: Optional[int] = None,
    height_bound: Optional[int] = None,
    recompute: Optional[Recompute] = None,
) -> AlgebraicityReport:
    """
    Look for an integer polynomial of degree <= D and height <= H vanishing at ``value``.

    Args:
        value: The number to test, known to ``value.precision`` digits
        degree_bound: D, defaults to HODGE_CM_DEGREE
        height_bound: H, defaults to HODGE_CM_HEIGHT
        recompute: Re-evaluates the number at a given precision; without it the digits of
            ``value`` are taken as exact for the doubled-precision re-check

    Raises:
        InsufficientPrecision: if value.precision < ceil(2 D log10 H) + 20
    """
    degree_bound = configs.HODGE_CM_DEGREE if degree_bound is None else degree_bound
    height_bound = configs.HODGE_CM_HEIGHT if height_bound is None else height_bound
    if degree_bound < 1 or height_bound < 1:
        raise ValueError(f"degree and height bounds must be positive, got D={degree_bound}, H={height_bound}")
    prec = value.precision
    needed = required_precision(degree_bound, height_bound)
    if prec < needed:
        raise InsufficientPrecision(
            f"a search at D={degree_bound}, H={height_bound} needs {needed} digits, the value carries {prec}"
        )
    with working_precision(prec):
        coeffs, residual = _search(value.value, degree_bound, height_bound, prec)
    report = AlgebraicityReport(value=value, degree_bound=degree_bound, height_bound=height_bound)
    if coeffs is None:
        logger.warning(f"no relation at D={degree_bound}, H={height_bound}; this is not a transcendence statement")
        return report

    double = 2 * prec
    check_value = recompute(double).value if recompute is not None else value.value
    with working_precision(double):
        recheck = abs(_evaluate(coeffs, check_value))
        verified = recheck < mpmath.mpf(10) ** (-prec)
    if not verified:
        logger.warning(f"candidate {coeffs} failed the {double}-digit re-check ({mpmath.nstr(recheck, 3)})")
        return report

    polynomial = _normalize(coeffs)
    report = AlgebraicityReport(
        value=value,
        degree_bound=degree_bound,
        height_bound=height_bound,
        polynomial=polynomial,
        residual=residual,
        verified_at_double_precision=True,
    )
    logger.info(f"algebraic relation found: {report.describe()}")
    return report
