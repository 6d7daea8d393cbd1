"""
Appell's F1 as a double series, its Euler integral and the residuals of its PDE system.
"""

from fractions import Fraction
from typing import Optional, Tuple

import mpmath
from loguru import logger

from hodge_atlas.exceptions import OutOfRegion, PolarC
from hodge_atlas.models.period_models import PeriodValue
from hodge_atlas.periods.gamma import gamma_value
from hodge_atlas.periods.precision import (
    Number,
    is_nonpositive_integer,
    resolve_precision,
    rounding_error,
    to_mp,
    to_mpc,
    truncation_threshold,
    working_precision,
)
from hodge_atlas.periods.quadrature import segment_integral

MAX_DEGREE = 20000


def appell_f1(
    a: Number, b: Number, b_prime: Number, c: Number, x: Number, y: Number, prec: Optional[int] = None
) -> PeriodValue:
    """
    F1(a, b, b', c; x, y) = sum_{m,n} (a)_{m+n} (b)_m (b')_n / (c)_{m+n} x^m / m! y^n / n!.

    Terms are summed by total degree N = m + n. Since
    sum_{m+n=N} |(b)_m (b')_n| / (m! n!) <= (|b| + |b'|)_N / N!, the degree-N block is
    dominated by |(a)_N / (c)_N| (|b| + |b'|)_N / N! r^N with r = max(|x|, |y|), and the
    tail is bounded by the geometric majorant of that sequence.

    Raises:
        OutOfRegion: if |x| >= 1 or |y| >= 1
        PolarC: if c is a non-positive integer
    """
    prec = resolve_precision(prec)
    with working_precision(prec):
        a, b, b_prime, c = (to_mp(v) for v in (a, b, b_prime, c))
        x, y = to_mpc(x), to_mpc(y)
        r = max(abs(x), abs(y))
        if r >= 1:
            raise OutOfRegion(f"max(|x|, |y|) = {mpmath.nstr(r, 8)} is outside the unit polydisk")
        if is_nonpositive_integer(c):
            raise PolarC(f"c = {c} is a non-positive integer")
        threshold = truncation_threshold(prec)
        big_a, big_b, big_c = abs(a), abs(b) + abs(b_prime), abs(c)
        # u[m] = (b)_m x^m / m!, v[n] = (b')_n y^n / n!
        u = [mpmath.mpc(1)]
        v = [mpmath.mpc(1)]
        pochhammer_ratio = mpmath.mpc(1)
        majorant = mpmath.mpf(1)
        total = mpmath.mpc(0)
        n = 0
        tail = None
        while n < MAX_DEGREE:
            total += pochhammer_ratio * sum(u[m] * v[n - m] for m in range(n + 1))
            u.append(u[n] * (b + n) * x / (n + 1))
            v.append(v[n] * (b_prime + n) * y / (n + 1))
            pochhammer_ratio = pochhammer_ratio * (a + n) / (c + n)
            majorant = majorant * abs(a + n) / abs(c + n) * (big_b + n) / (n + 1) * r
            n += 1
            if majorant == 0:
                tail = mpmath.mpf(0)
                break
            if n > big_c + 1:
                rho = r * (1 + max(big_a - 1, 0) / (n + 1)) * (1 + (big_b + big_c) / (n - big_c))
                if rho < 1 and majorant / (1 - rho) < threshold:
                    tail = majorant / (1 - rho)
                    break
        if tail is None:
            raise OutOfRegion(f"double series did not converge by degree {MAX_DEGREE}")
        err = tail + n * n * rounding_error(prec) * max(1, abs(total))
    logger.debug(f"F1 at r={mpmath.nstr(r, 5)}: total degree {n}")
    return PeriodValue(total, err, prec, "double-series")


def appell_f1_integral(
    a: Number, b: Number, b_prime: Number, c: Number, x: Number, y: Number, prec: Optional[int] = None
) -> PeriodValue:
    """
    Euler integral Gamma(c) / (Gamma(a) Gamma(c-a)) int_0^1 t^{a-1} (1-t)^{c-a-1} (1-xt)^{-b} (1-yt)^{-b'} dt,
    valid for Re c > Re a > 0 and x, y off [1, oo).
    """
    prec = resolve_precision(prec)
    with working_precision(prec):
        a_, b_, bp_, c_ = (to_mp(v) for v in (a, b, b_prime, c))
        x_, y_ = to_mpc(x), to_mpc(y)
        if not (c_ > a_ > 0):
            raise OutOfRegion(f"the Euler integral needs c > a > 0, got a = {a_}, c = {c_}")

        def integrand(t):
            return t ** (a_ - 1) * (1 - t) ** (c_ - a_ - 1) * (1 - x_ * t) ** (-b_) * (1 - y_ * t) ** (-bp_)

        integral = segment_integral(integrand, mpmath.mpf(0), mpmath.mpf(1), prec)
        exact = isinstance(a, (int, Fraction)) and isinstance(c, (int, Fraction))
        c_minus_a = Fraction(c) - Fraction(a) if exact else c_ - a_
    g_c = gamma_value(c, prec)
    g_a = gamma_value(a, prec)
    g_ca = gamma_value(c_minus_a, prec)
    with working_precision(prec):
        scale = g_c.value / (g_a.value * g_ca.value)
        value = scale * integral.value
        err = abs(scale) * integral.err + abs(value) * (g_c.err / abs(g_c.value) + g_a.err / abs(g_a.value)
                                                         + g_ca.err / abs(g_ca.value))
    return PeriodValue(value, err, prec, "euler-integral")


def appell_pde_residuals(
    a: Number,
    b: Number,
    b_prime: Number,
    c: Number,
    x: Number,
    y: Number,
    h: Number = "1e-4",
    prec: Optional[int] = None,
) -> Tuple[mpmath.mpf, mpmath.mpf]:
    """
    Absolute residuals of

        x(1-x) F_xx + y(1-x) F_xy + (c - (a+b+1)x) F_x - b y F_y - a b F = 0,
        y(1-y) F_yy + x(1-y) F_xy + (c - (a+b'+1)y) F_y - b' x F_x - a b' F = 0

    at (x, y), with all derivatives by central differences of step h.
    """
    prec = resolve_precision(prec)
    with working_precision(prec):
        step = to_mp(h)

    def f(dx: int, dy: int) -> mpmath.mpc:
        with working_precision(prec):
            px = to_mpc(x) + dx * step
            py = to_mpc(y) + dy * step
        return appell_f1(a, b, b_prime, c, px, py, prec).value

    grid = {(i, j): f(i, j) for i in (-1, 0, 1) for j in (-1, 0, 1)}
    with working_precision(prec):
        a_, b_, bp_, c_ = (to_mp(v) for v in (a, b, b_prime, c))
        x_, y_ = to_mpc(x), to_mpc(y)
        f0 = grid[(0, 0)]
        fx = (grid[(1, 0)] - grid[(-1, 0)]) / (2 * step)
        fy = (grid[(0, 1)] - grid[(0, -1)]) / (2 * step)
        fxx = (grid[(1, 0)] - 2 * f0 + grid[(-1, 0)]) / step ** 2
        fyy = (grid[(0, 1)] - 2 * f0 + grid[(0, -1)]) / step ** 2
        fxy = (grid[(1, 1)] - grid[(1, -1)] - grid[(-1, 1)] + grid[(-1, -1)]) / (4 * step ** 2)
        first = (x_ * (1 - x_) * fxx + y_ * (1 - x_) * fxy + (c_ - (a_ + b_ + 1) * x_) * fx
                 - b_ * y_ * fy - a_ * b_ * f0)
        second = (y_ * (1 - y_) * fyy + x_ * (1 - y_) * fxy + (c_ - (a_ + bp_ + 1) * y_) * fy
                  - bp_ * x_ * fx - a_ * bp_ * f0)
        residuals = (abs(first), abs(second))
    logger.debug(f"Appell residuals at step {h}: {mpmath.nstr(residuals[0], 3)}, {mpmath.nstr(residuals[1], 3)}")
    return residuals
