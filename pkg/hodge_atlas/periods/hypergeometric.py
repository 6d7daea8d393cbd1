"""
Gauss hypergeometric series with tail bounds, the closed forms of the degree-4 Schwarz
family and the Schwarz map built from them.
"""

from typing import Optional

import mpmath
from loguru import logger

from hodge_atlas.config.hodge_constants import HypergeometricParameters
from hodge_atlas.exceptions import BranchCut, OutOfRegion, PolarC
from hodge_atlas.models.period_models import PeriodValue
from hodge_atlas.periods.precision import (
    Number,
    divide_values,
    is_nonpositive_integer,
    resolve_precision,
    rounding_error,
    to_mp,
    to_mpc,
    truncation_threshold,
    working_precision,
)

FIRST = "first"
SECOND = "second"

MAX_TERMS = 200000


def _ratio_bound(a, b, c, x_abs, n: int):
    """Bound on |t_{k+1} / t_k| for every k >= n, valid once n > |c|."""
    big_a, big_b, big_c = abs(a), abs(b), abs(c)
    return x_abs * (1 + max(big_a - 1, 0) / (n + 1)) * (1 + (big_b + big_c) / (n - big_c))


def gauss_2f1(a: Number, b: Number, c: Number, x: Number, prec: Optional[int] = None) -> PeriodValue:
    """
    F(a, b, c; x) = sum_n (a)_n (b)_n / (c)_n x^n / n! inside the unit disk.

    The sum stops once the geometric majorant of the remaining terms drops below
    10^-(prec + guard); that majorant is the reported error.

    Raises:
        OutOfRegion: if |x| >= 1
        PolarC: if c is a non-positive integer
    """
    prec = resolve_precision(prec)
    with working_precision(prec):
        a, b, c, x = to_mp(a), to_mp(b), to_mp(c), to_mpc(x)
        x_abs = abs(x)
        if x_abs >= 1:
            raise OutOfRegion(f"|x| = {mpmath.nstr(x_abs, 8)} is outside the unit disk")
        if is_nonpositive_integer(c):
            raise PolarC(f"c = {c} is a non-positive integer")
        threshold = truncation_threshold(prec)
        term = mpmath.mpc(1)
        total = mpmath.mpc(0)
        n = 0
        tail = None
        while n < MAX_TERMS:
            total += term
            term = term * (a + n) * (b + n) / ((c + n) * (n + 1)) * x
            n += 1
            if term == 0:
                tail = mpmath.mpf(0)
                break
            if n > abs(c) + 1:
                rho = _ratio_bound(a, b, c, x_abs, n)
                if rho < 1:
                    bound = abs(term) / (1 - rho)
                    if bound < threshold:
                        tail = bound
                        break
        if tail is None:
            raise OutOfRegion(f"series did not converge in {MAX_TERMS} terms at |x| = {mpmath.nstr(x_abs, 8)}")
        err = tail + n * rounding_error(prec) * max(1, abs(total))
    logger.debug(f"2F1 at |x|={mpmath.nstr(x_abs, 5)}: {n} terms")
    return PeriodValue(total, err, prec, "series")


def _on_cut(s: mpmath.mpc) -> bool:
    return s.imag == 0 and s.real >= 1


def _closed_form_parts(s: mpmath.mpc):
    root = mpmath.sqrt(s)
    first = (1 - root) ** mpmath.mpf(-0.5)
    second = (1 + root) ** mpmath.mpf(-0.5)
    return root, first, second


def hypergeom_closed_forms(s: Number, which: str = FIRST, prec: Optional[int] = None) -> PeriodValue:
    """
    F(1/4, 3/4, 1/2; s) = (A + B) / 2 and F(5/4, 3/4, 3/2; s) = (A - B) / sqrt(s), where
    A = (1 - sqrt s)^{-1/2} and B = (1 + sqrt s)^{-1/2} with principal branches.

    Raises:
        BranchCut: for real s >= 1
    """
    prec = resolve_precision(prec)
    if which not in (FIRST, SECOND):
        raise ValueError(f"which must be '{FIRST}' or '{SECOND}', got {which!r}")
    with working_precision(prec):
        s = to_mpc(s)
        if _on_cut(s):
            raise BranchCut(f"s = {mpmath.nstr(s.real, 10)} lies on the branch cut [1, oo)")
        if s == 0:
            return PeriodValue(mpmath.mpc(1), mpmath.mpf(0), prec, "closed-form")
        root, big_a, big_b = _closed_form_parts(s)
        value = (big_a + big_b) / 2 if which == FIRST else (big_a - big_b) / root
        # (A - B) / sqrt(s) cancels about log10(1/|sqrt s|) digits
        loss = max(mpmath.mpf(1), 1 / abs(root)) if which == SECOND else mpmath.mpf(1)
        err = rounding_error(prec) * loss * max(1, abs(value))
    return PeriodValue(value, err, prec, "closed-form")


def hypergeom_series_form(s: Number, which: str = FIRST, prec: Optional[int] = None) -> PeriodValue:
    params = HypergeometricParameters.SCHWARZ_FIRST if which == FIRST else HypergeometricParameters.SCHWARZ_SECOND
    return gauss_2f1(*params, s, prec=prec)


def schwarz_T(s: Number, prec: Optional[int] = None) -> PeriodValue:
    """
    T(s) = sqrt(s) F(5/4, 3/4, 3/2; s) / F(1/4, 3/4, 1/2; s) = 2 (A - B) / (A + B).

    Raises:
        BranchCut: for real s >= 1
    """
    prec = resolve_precision(prec)
    with working_precision(prec):
        s = to_mpc(s)
        if _on_cut(s):
            raise BranchCut(f"s = {mpmath.nstr(s.real, 10)} lies on the branch cut [1, oo)")
        if s == 0:
            return PeriodValue(mpmath.mpc(0), mpmath.mpf(0), prec, "closed-form")
        _, big_a, big_b = _closed_form_parts(s)
        value = 2 * (big_a - big_b) / (big_a + big_b)
        err = rounding_error(prec) * max(1, abs(value))
    return PeriodValue(value, err, prec, "closed-form")


def schwarz_T_series(s: Number, prec: Optional[int] = None) -> PeriodValue:
    """The series quotient route to T(s), for |s| < 1."""
    prec = resolve_precision(prec)
    numerator = hypergeom_series_form(s, SECOND, prec)
    denominator = hypergeom_series_form(s, FIRST, prec)
    with working_precision(prec):
        root = mpmath.sqrt(to_mpc(s))
        scaled = PeriodValue(root * numerator.value, abs(root) * numerator.err, prec, "series")
    return divide_values(scaled, denominator, "series-quotient")
