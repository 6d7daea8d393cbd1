"""
Analytic continuation of solutions of the hypergeometric equation

    s (1 - s) F'' + (c - (a + b + 1) s) F' - a b F = 0

along polylines avoiding the singular points 0 and 1, by Taylor re-expansion.

At a regular point z0 the solution is sum_n f_n h^n with

    f_{n+2} = -[(p1 n (n+1) + q0 (n+1)) f_{n+1} + (p2 n (n-1) + q1 n - a b) f_n] / (p0 (n+1) (n+2)),

p0 = z0 (1 - z0), p1 = 1 - 2 z0, p2 = -1, q0 = c - (a+b+1) z0, q1 = -(a+b+1). Each step
is at most half the distance to {0, 1}. Truncation is bounded by a Cauchy majorant of the
local solution, and earlier errors are carried through the linear map of each step.
"""

from typing import List, Optional, Sequence, Tuple

import mpmath
from loguru import logger

from hodge_atlas.config.config import configs
from hodge_atlas.config.hodge_constants import HypergeometricParameters
from hodge_atlas.exceptions import SingularPath
from hodge_atlas.models.period_models import ContinuedSolution
from hodge_atlas.periods.hypergeometric import gauss_2f1
from hodge_atlas.periods.precision import (
    Number,
    resolve_precision,
    rounding_error,
    to_mp,
    to_mpc,
    truncation_threshold,
    working_precision,
)

SINGULAR_POINTS = (0, 1)
MAX_ORDER = 20000

InitialData = Tuple[Tuple[mpmath.mpc, mpmath.mpc], Tuple[mpmath.mpc, mpmath.mpc]]


def _segment_distance(p: mpmath.mpc, q: mpmath.mpc, z: mpmath.mpc, clamp_end: bool = True) -> mpmath.mpf:
    d = q - p
    length2 = abs(d) ** 2
    if length2 == 0:
        return abs(z - p)
    t = ((z - p) * mpmath.conj(d)).real / length2
    t = max(t, 0)
    if clamp_end:
        t = min(t, 1)
    elif t >= 1:
        # the end point is the closest point to z
        return mpmath.inf if q != z else mpmath.mpf(0)
    return abs(p + t * d - z)


def check_path(points: Sequence[mpmath.mpc], clearance, open_end: bool = False) -> None:
    """
    With ``open_end`` the target itself may lie closer than ``clearance`` to 0 or 1, as long
    as it is not singular and the last segment gets no closer to that point on its way.

    Raises:
        SingularPath: if some segment comes closer than ``clearance`` to 0 or 1
    """
    last = len(points) - 2
    for z in SINGULAR_POINTS:
        if points[-1] == z:
            raise SingularPath(f"target {mpmath.nstr(points[-1], 8)} is a singular point")
        if len(points) == 1 and abs(points[0] - z) < clearance:
            raise SingularPath(f"point {mpmath.nstr(points[0], 8)} is within {clearance} of {z}")
        for i, (p, q) in enumerate(zip(points, points[1:])):
            d = _segment_distance(p, q, z, clamp_end=not (open_end and i == last))
            if d < clearance:
                raise SingularPath(
                    f"segment {mpmath.nstr(p, 8)} -> {mpmath.nstr(q, 8)} passes within {mpmath.nstr(d, 5)} of {z}"
                )


def default_initial_data(a, b, c, s0: mpmath.mpc, prec: int) -> Tuple[InitialData, mpmath.mpf]:
    """
    Values and derivatives at s0 of F(a,b,c;s) and F(a,b,a+b-c+1;1-s), both from series.
    """
    with working_precision(prec):
        c2 = a + b - c + 1
        f1 = gauss_2f1(a, b, c, s0, prec)
        d1 = gauss_2f1(a + 1, b + 1, c + 1, s0, prec)
        f2 = gauss_2f1(a, b, c2, 1 - s0, prec)
        d2 = gauss_2f1(a + 1, b + 1, c2 + 1, 1 - s0, prec)
        k1 = a * b / c
        k2 = -a * b / c2
        data = ((f1.value, k1 * d1.value), (f2.value, k2 * d2.value))
        err = max(f1.err, abs(k1) * d1.err, f2.err, abs(k2) * d2.err)
    return data, err


def _local_majorant(a, b, c, z0, value, derivative):
    """
    Cauchy-Gronwall bound on the local solution around z0.

    On |s - z0| <= r = 3R/4, R the distance to {0, 1}, the vector (F, rho F') with
    rho = R - r satisfies a linear system of norm at most K / rho, so it stays below
    B = max(|F(z0)|, rho |F'(z0)|) exp(K r / rho). Cauchy's estimate then bounds the Taylor
    coefficients of F by B / r^n and those of F' by B / (rho r^n).

    Returns:
        (r, rho, B)
    """
    radius = min(abs(z0), abs(1 - z0))
    r = 3 * radius / 4
    rho = radius - r
    # |s (1 - s)| >= rho * sigma on the disk
    sigma = max(rho, 1 - radius - r)
    q_max = abs(c) + abs(a + b + 1) * (abs(z0) + r)
    k = max(mpmath.mpf(1), (rho * abs(a * b) + q_max) / sigma)
    bound = max(abs(value), rho * abs(derivative)) * mpmath.exp(k * r / rho)
    return r, rho, bound


def _taylor_step(a, b, c, z0, h, value, derivative, prec: int):
    """One re-expansion step with |h| <= R/2; returns (value, derivative, tail bound)."""
    p0 = z0 * (1 - z0)
    p1 = 1 - 2 * z0
    p2 = -1
    q0 = c - (a + b + 1) * z0
    q1 = -(a + b + 1)
    ab = a * b
    r, rho, bound = _local_majorant(a, b, c, z0, value, derivative)
    q = abs(h) / r
    threshold = truncation_threshold(prec)
    f_prev, f_cur = value, derivative
    out_value = f_prev + f_cur * h
    out_derivative = f_cur
    h_pow = h
    n = 0
    tail = None
    while n < MAX_ORDER:
        f_next = -((p1 * n * (n + 1) + q0 * (n + 1)) * f_cur + (p2 * n * (n - 1) + q1 * n - ab) * f_prev) / (
            p0 * (n + 1) * (n + 2)
        )
        out_derivative += (n + 2) * f_next * h_pow
        h_pow *= h
        out_value += f_next * h_pow
        n += 1
        f_prev, f_cur = f_cur, f_next
        # coefficients f_0..f_{n+1} are summed
        remaining = bound * q ** (n + 1) / (1 - q) * (q + 1 / rho)
        if remaining < threshold:
            tail = remaining
            break
    if tail is None:
        raise SingularPath(f"Taylor series at {mpmath.nstr(z0, 8)} did not converge in {MAX_ORDER} terms")
    return out_value, out_derivative, tail


def _transfer_norm(old_values, old_derivatives, new_values, new_derivatives):
    """
    Max-norm of the linear step map (F, F') -> (F, F'), recovered from the two independent
    solutions; None when they are dependent.
    """
    det = old_values[0] * old_derivatives[1] - old_values[1] * old_derivatives[0]
    if det == 0:
        return None
    inv = ((old_derivatives[1] / det, -old_values[1] / det), (-old_derivatives[0] / det, old_values[0] / det))
    rows = (new_values, new_derivatives)
    return max(sum(abs(row[0] * inv[0][j] + row[1] * inv[1][j]) for j in range(2)) for row in rows)


def _gronwall_factor(a, b, c, z0, h):
    """Growth bound exp(L |h|) of (F, F') along one step, L bounding the system's norm."""
    radius = min(abs(z0), abs(1 - z0))
    step = abs(h)
    p_min = (radius - step) * max(radius - step, 1 - radius - step)
    q_max = abs(c) + abs(a + b + 1) * (abs(z0) + step)
    norm = max(mpmath.mpf(1), (abs(a * b) + q_max) / p_min)
    return mpmath.exp(norm * step)


def _wronskian_invariant(a, b, c, s, values, derivatives):
    w = values[0] * derivatives[1] - derivatives[0] * values[1]
    return s ** c * (1 - s) ** (a + b + 1 - c) * w


def pf_continue(
    path: Sequence[Number],
    prec: Optional[int] = None,
    params: Tuple[Number, Number, Number] = HypergeometricParameters.LEGENDRE,
    initial: Optional[InitialData] = None,
    clearance: Optional[float] = None,
    open_end: bool = False,
) -> ContinuedSolution:
    """
    Continue two solutions of the hypergeometric equation along a polyline.

    Args:
        path: s_0 followed by the waypoints; the last point is the target
        prec: Working precision in decimal digits
        params: (a, b, c) of the equation
        initial: ((F1, F1'), (F2, F2')) at s_0; by default F(a,b,c;s) and F(a,b,a+b-c+1;1-s)
        clearance: Minimum distance of the path from {0, 1}
        open_end: Let the target lie closer than ``clearance`` to 0 or 1; the steps shrink
            towards it

    Returns:
        The continued values with the accumulated error bound and the relative drift of
        s^c (1-s)^{a+b+1-c} W(F1, F2)

    Raises:
        SingularPath: if the path comes too close to a singular point
    """
    prec = resolve_precision(prec)
    clearance = configs.HODGE_ODE_CLEARANCE if clearance is None else clearance
    with working_precision(prec):
        a, b, c = (to_mp(x) for x in params)
        points = [to_mpc(p) for p in path]
        if not points:
            raise SingularPath("empty continuation path")
        check_path(points, mpmath.mpf(clearance), open_end)
    if initial is None:
        initial, err = default_initial_data(a, b, c, points[0], prec)
    else:
        err = mpmath.mpf(0)
    with working_precision(prec):
        values: List[mpmath.mpc] = [mpmath.mpc(initial[0][0]), mpmath.mpc(initial[1][0])]
        derivatives: List[mpmath.mpc] = [mpmath.mpc(initial[0][1]), mpmath.mpc(initial[1][1])]
        start_invariant = _wronskian_invariant(a, b, c, points[0], values, derivatives)
        z = points[0]
        steps = 0
        for target in points[1:]:
            while z != target:
                radius = min(abs(z), abs(1 - z))
                remaining = target - z
                h = remaining if abs(remaining) <= radius / 2 else remaining * (radius / 2) / abs(remaining)
                old_values, old_derivatives = list(values), list(derivatives)
                tails = []
                for i in range(2):
                    values[i], derivatives[i], tail = _taylor_step(a, b, c, z, h, values[i], derivatives[i], prec)
                    tails.append(tail)
                transfer = _transfer_norm(old_values, old_derivatives, values, derivatives)
                if transfer is None:
                    transfer = _gronwall_factor(a, b, c, z, h)
                scale = max(max(abs(v) for v in values), max(abs(d) for d in derivatives), 1)
                err = transfer * err + max(tails) + rounding_error(prec) * scale
                z = target if h == remaining else z + h
                steps += 1
        end_invariant = _wronskian_invariant(a, b, c, z, values, derivatives)
        drift = abs(end_invariant - start_invariant) / abs(start_invariant) if start_invariant != 0 else mpmath.mpf(0)
    logger.debug(f"continued {len(points) - 1} segments in {steps} steps, Wronskian drift {mpmath.nstr(drift, 3)}")
    return ContinuedSolution(
        point=z,
        values=(values[0], values[1]),
        derivatives=(derivatives[0], derivatives[1]),
        err=err,
        precision=prec,
        steps=steps,
        wronskian_drift=drift,
    )
