from fractions import Fraction


class TowerFamilies:
    # Legendre elliptic curve y^2 = x(x-1)(x-lambda) with x -> -x style involution:
    # four fixed points, H^1 anti-invariant
    ELLIPTIC_FIXED_POINTS = 4

    # Appell F1 parameters governing the genus-6 curve family
    APPELL_A = Fraction(3, 5)
    APPELL_B = Fraction(2, 5)
    APPELL_B_PRIME = Fraction(2, 5)
    APPELL_C = Fraction(6, 5)

    # exponent of every factor of the genus-6 period integrands
    VZ5_EXPONENT = Fraction(-2, 5)

    # r_n for n = 1..4 of the degree-5 first step
    QUINTIC_R_VALUES = (3, 2, 1, 0)

    # Betti target of the quartic K3 second step
    K3_B2 = 22


class HypergeometricParameters:
    # F(1/2,1/2,1;s): Legendre periods
    LEGENDRE = (Fraction(1, 2), Fraction(1, 2), Fraction(1))
    # F(1/4,3/4,1/2;s) and F(5/4,3/4,3/2;s): Schwarz map of the degree-4 family
    SCHWARZ_FIRST = (Fraction(1, 4), Fraction(3, 4), Fraction(1, 2))
    SCHWARZ_SECOND = (Fraction(5, 4), Fraction(3, 4), Fraction(3, 2))


class CyclotomicDefaults:
    # fields the lemma self-check runs over
    SELFTEST_CONDUCTORS = (4, 5)
    SELFTEST_MAX_DIM = 6
