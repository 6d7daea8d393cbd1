from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import mpmath


def decimal_string(x, digits: int) -> str:
    """Render a real as a decimal string with ``digits`` significant digits."""
    if not isinstance(x, mpmath.mpf):
        with mpmath.workdps(digits + 5):
            x = mpmath.mpf(x)
    return mpmath.nstr(x, max(digits, 1))


@dataclass(frozen=True)
class PeriodValue:
    """
    A complex number known to ``precision`` digits with an absolute error bound ``err``.
    """

    value: mpmath.mpc
    err: mpmath.mpf
    precision: int
    method: str = ""

    @property
    def re(self) -> mpmath.mpf:
        return self.value.real

    @property
    def im(self) -> mpmath.mpf:
        return self.value.imag

    def agrees_with(self, other: "PeriodValue", slack=0) -> bool:
        with mpmath.workdps(max(self.precision, other.precision) + 20):
            return abs(self.value - other.value) <= self.err + other.err + slack

    def to_dict(self) -> Dict[str, str]:
        return {
            "re": decimal_string(self.re, self.precision),
            "im": decimal_string(self.im, self.precision),
            "err": mpmath.nstr(self.err, 5),
            "precision": str(self.precision),
            "method": self.method,
        }


@dataclass(frozen=True)
class AlgebraicityReport:
    """
    Outcome of an integer-relation search on a period value.

    ``polynomial`` lists integer coefficients from the leading term down; ``None`` means
    nothing was found within the bounds, which says nothing about transcendence.
    """

    value: PeriodValue
    degree_bound: int
    height_bound: int
    polynomial: Optional[Tuple[int, ...]] = None
    residual: Optional[mpmath.mpf] = None
    verified_at_double_precision: bool = False

    @property
    def found(self) -> bool:
        return self.polynomial is not None

    def describe(self) -> str:
        if self.polynomial is None:
            return f"none found at (D={self.degree_bound}, H={self.height_bound})"
        return format_polynomial(self.polynomial)

    def to_dict(self) -> Dict:
        return {
            "value": self.value.to_dict(),
            "degree_bound": str(self.degree_bound),
            "height_bound": str(self.height_bound),
            "polynomial": None if self.polynomial is None else [str(c) for c in self.polynomial],
            "description": self.describe(),
            "residual": None if self.residual is None else mpmath.nstr(self.residual, 5),
            "verified_at_double_precision": self.verified_at_double_precision,
        }


def format_polynomial(coeffs: Tuple[int, ...], var: str = "x") -> str:
    degree = len(coeffs) - 1
    terms: List[str] = []
    for i, c in enumerate(coeffs):
        e = degree - i
        if c == 0:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            power = var if e == 1 else f"{var}^{e}"
            body = power if mag == 1 else f"{mag}*{power}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(terms) if terms else "0"


@dataclass(frozen=True)
class ContinuedSolution:
    """
    Two solutions of a second-order ODE and their derivatives carried along a path.
    """

    point: mpmath.mpc
    values: Tuple[mpmath.mpc, mpmath.mpc]
    derivatives: Tuple[mpmath.mpc, mpmath.mpc]
    err: mpmath.mpf
    precision: int
    steps: int = 0
    wronskian_drift: mpmath.mpf = field(default_factory=lambda: mpmath.mpf(0))

    def period_values(self) -> Tuple[PeriodValue, PeriodValue]:
        return (
            PeriodValue(self.values[0], self.err, self.precision, "taylor-continuation"),
            PeriodValue(self.values[1], self.err, self.precision, "taylor-continuation"),
        )


@dataclass(frozen=True)
class PeriodTable:
    """
    Labelled periods of one top form together with their ratios to a reference period.
    """

    name: str
    periods: Dict[str, PeriodValue]
    normalized: Dict[str, PeriodValue]
    reference: str = ""

    def to_dict(self) -> Dict:
        return {
            "name": self.name,
            "reference": self.reference,
            "periods": {label: value.to_dict() for label, value in sorted(self.periods.items())},
            "normalized": {label: value.to_dict() for label, value in sorted(self.normalized.items())},
        }
