"""
Exact arithmetic in cyclotomic fields Q(zeta_m).

Elements are stored by their rational coordinates in the power basis
1, zeta_m, ..., zeta_m^{phi(m)-1}; products are reduced modulo the cyclotomic
polynomial Phi_m. Mixed-conductor arithmetic happens in Q(zeta_lcm).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, List, Sequence, Tuple, Union

import mpmath
import sympy

from hodge_atlas.exceptions import FieldMismatch

RationalLike = Union[int, Fraction]

_z = sympy.Symbol("z")


@lru_cache(maxsize=None)
def _cyclotomic_data(m: int) -> Tuple[int, Tuple[Fraction, ...]]:
    """(phi(m), lower coefficients a_0..a_{phi-1} of the monic Phi_m)."""
    poly = sympy.Poly(sympy.cyclotomic_poly(m, _z), _z)
    coeffs = [Fraction(int(c)) for c in reversed(poly.all_coeffs())]
    return len(coeffs) - 1, tuple(coeffs[:-1])


def euler_phi(m: int) -> int:
    return _cyclotomic_data(m)[0]


@lru_cache(maxsize=None)
def _trace_weight(m: int, k: int) -> Fraction:
    """Tr(zeta_m^k) / phi(m), a Ramanujan sum over phi(m)."""
    d = m // gcd(k, m)
    return Fraction(int(sympy.mobius(d)), euler_phi(d))


def _reduce(m: int, coeffs: List[Fraction]) -> Tuple[Fraction, ...]:
    phi, low = _cyclotomic_data(m)
    coeffs = list(coeffs)
    for deg in range(len(coeffs) - 1, phi - 1, -1):
        c = coeffs[deg]
        if c:
            coeffs[deg] = Fraction(0)
            shift = deg - phi
            for i, a in enumerate(low):
                if a:
                    coeffs[shift + i] -= c * a
    coeffs = coeffs[:phi] + [Fraction(0)] * max(0, phi - len(coeffs))
    return tuple(coeffs)


class CyclotomicNumber:
    """
    An element of Q(zeta_m), m >= 1; m = 1 gives the rationals.
    """

    __slots__ = ("_m", "_coeffs")

    def __init__(self, m: int, coeffs: Iterable[RationalLike]) -> None:
        if m < 1:
            raise FieldMismatch(f"conductor must be positive, got {m}")
        self._m = m
        self._coeffs = _reduce(m, [Fraction(c) for c in coeffs])

    @property
    def m(self) -> int:
        return self._m

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    @classmethod
    def from_rational(cls, x: RationalLike, m: int = 1) -> CyclotomicNumber:
        return cls(m, [Fraction(x)])

    @classmethod
    def zeta(cls, m: int, k: int = 1) -> CyclotomicNumber:
        """zeta_m^k for any integer k."""
        k %= m
        return cls(m, [0] * k + [1])

    @classmethod
    def i(cls) -> CyclotomicNumber:
        return cls.zeta(4)

    @classmethod
    def parse(cls, m: int, coeffs: Sequence[str]) -> CyclotomicNumber:
        """Coefficients given as strings 'p/q' (or integers), the fixture format."""
        return cls(m, [Fraction(c) for c in coeffs])

    def serialize(self) -> List[str]:
        return [str(c) for c in self._coeffs]

    # coercion

    def lift(self, m: int) -> CyclotomicNumber:
        """The same element inside Q(zeta_m), m a multiple of the conductor."""
        if m == self._m:
            return self
        if m % self._m:
            raise FieldMismatch(f"Q(zeta_{self._m}) is not contained in Q(zeta_{m})")
        step = m // self._m
        poly = [Fraction(0)] * (step * len(self._coeffs) + 1)
        for k, c in enumerate(self._coeffs):
            poly[k * step] = c
        return CyclotomicNumber(m, poly)

    @staticmethod
    def coerce(x: Union[CyclotomicNumber, RationalLike]) -> CyclotomicNumber:
        if isinstance(x, CyclotomicNumber):
            return x
        if isinstance(x, (int, Fraction)):
            return CyclotomicNumber.from_rational(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to a cyclotomic number")

    def _common(self, other) -> Tuple[CyclotomicNumber, CyclotomicNumber]:
        other = CyclotomicNumber.coerce(other)
        if other._m == self._m:
            return self, other
        if other.is_rational:
            return self, CyclotomicNumber.from_rational(other._coeffs[0], self._m)
        if self.is_rational:
            return CyclotomicNumber.from_rational(self._coeffs[0], other._m), other
        common = lcm(self._m, other._m)
        return self.lift(common), other.lift(common)

    # predicates

    @property
    def is_zero(self) -> bool:
        return not any(self._coeffs)

    @property
    def is_rational(self) -> bool:
        return not any(self._coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational:
            raise FieldMismatch(f"{self} is not rational")
        return self._coeffs[0] if self._coeffs else Fraction(0)

    def __bool__(self) -> bool:
        return not self.is_zero

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational and self.to_fraction() == other
        if isinstance(other, CyclotomicNumber):
            a, b = self._common(other)
            return a._coeffs == b._coeffs
        return NotImplemented

    def normalized_trace(self) -> Fraction:
        """Tr(x) / [Q(zeta_m) : Q], unchanged under lifting and equal to x for rationals."""
        return sum((c * _trace_weight(self._m, k) for k, c in enumerate(self._coeffs) if c), Fraction(0))

    def __hash__(self) -> int:
        # equal elements of different conductors share the normalized trace
        return hash(self.normalized_trace())

    # arithmetic

    def __neg__(self) -> CyclotomicNumber:
        return CyclotomicNumber(self._m, [-c for c in self._coeffs])

    def __add__(self, other) -> CyclotomicNumber:
        if not isinstance(other, (CyclotomicNumber, int, Fraction)):
            return NotImplemented
        a, b = self._common(other)
        return CyclotomicNumber(a._m, [x + y for x, y in zip(a._coeffs, b._coeffs)])

    def __radd__(self, other) -> CyclotomicNumber:
        return self + other

    def __sub__(self, other) -> CyclotomicNumber:
        if not isinstance(other, (CyclotomicNumber, int, Fraction)):
            return NotImplemented
        return self + (-CyclotomicNumber.coerce(other))

    def __rsub__(self, other) -> CyclotomicNumber:
        return (-self) + other

    def __mul__(self, other) -> CyclotomicNumber:
        if not isinstance(other, (CyclotomicNumber, int, Fraction)):
            return NotImplemented
        a, b = self._common(other)
        if b.is_rational:
            s = b.to_fraction()
            return CyclotomicNumber(a._m, [c * s for c in a._coeffs])
        prod = [Fraction(0)] * (len(a._coeffs) + len(b._coeffs))
        for i, x in enumerate(a._coeffs):
            if x:
                for j, y in enumerate(b._coeffs):
                    if y:
                        prod[i + j] += x * y
        return CyclotomicNumber(a._m, prod)

    def __rmul__(self, other) -> CyclotomicNumber:
        return self * other

    def inverse(self) -> CyclotomicNumber:
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational:
            return CyclotomicNumber.from_rational(1 / self.to_fraction(), self._m)
        f = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(self._coeffs)], _z, domain="QQ")
        g = sympy.Poly(sympy.cyclotomic_poly(self._m, _z), _z, domain="QQ")
        inv = f.invert(g)
        return CyclotomicNumber(self._m, [Fraction(int(c.p), int(c.q)) for c in reversed(inv.all_coeffs())])

    def __truediv__(self, other) -> CyclotomicNumber:
        if not isinstance(other, (CyclotomicNumber, int, Fraction)):
            return NotImplemented
        return self * CyclotomicNumber.coerce(other).inverse()

    def __rtruediv__(self, other) -> CyclotomicNumber:
        return CyclotomicNumber.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> CyclotomicNumber:
        if n < 0:
            return self.inverse() ** -n
        result = CyclotomicNumber.from_rational(1, self._m)
        base = self
        while n > 0:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> CyclotomicNumber:
        """The automorphism zeta_m -> zeta_m^{-1}."""
        poly = [Fraction(0)] * self._m
        for k, c in enumerate(self._coeffs):
            poly[(-k) % self._m] += c
        return CyclotomicNumber(self._m, poly)

    # embedding zeta_m -> exp(2 pi i / m)

    def embed(self, dps: int = 30) -> mpmath.mpc:
        with mpmath.workdps(dps + 10):
            w = mpmath.expjpi(mpmath.mpf(2) / self._m)
            total = mpmath.mpc(0)
            for k, c in enumerate(self._coeffs):
                if c:
                    total += mpmath.mpf(c.numerator) / c.denominator * w ** k
        return total

    def real_sign(self) -> int:
        """
        Sign of a conj-invariant element under the standard embedding, decided by
        raising precision until the value separates from zero.
        """
        if self.conj() != self:
            raise FieldMismatch(f"{self} is not real")
        if self.is_zero:
            return 0
        dps = 30
        while True:
            value = self.embed(dps).real
            if abs(value) > mpmath.mpf(10) ** (-dps + 5):
                return 1 if value > 0 else -1
            dps *= 2

    def __repr__(self) -> str:
        return f"CyclotomicNumber({self._m}, {self.serialize()})"

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self._coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                power = f"z{self._m}" if k == 1 else f"z{self._m}^{k}"
                terms.append(power if c == 1 else f"({c})*{power}")
        return " + ".join(terms) if terms else "0"


def cyc(x: Union[CyclotomicNumber, RationalLike]) -> CyclotomicNumber:
    return CyclotomicNumber.coerce(x)
