"""Exact univariate rational functions over the rationals.

Every value law and window-arm law in this package denotes a small rational
function of the index variable, so questions like "is f(n) < t for every
large n, and from which index on?" reduce to locating the last sign change
of a rational function with Fraction coefficients. The sign is stable beyond
a Cauchy root bound of the numerator and denominator, which keeps the whole
analysis exact and total.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NormalizationOverflow

# Polynomials are tuples of Fractions, constant term first, no trailing zeros.
Poly = tuple

STABILITY_CAP = 10**6


def poly(*coeffs) -> Poly:
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


ZERO: Poly = ()
ONE: Poly = poly(1)
X: Poly = poly(0, 1)


def p_degree(p: Poly) -> int:
    return len(p) - 1  # degree of the zero polynomial is -1


def p_lead(p: Poly) -> Fraction:
    return p[-1] if p else Fraction(0)


def p_add(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return poly(*((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                  for i in range(n)))


def p_neg(a: Poly) -> Poly:
    return tuple(-c for c in a)


def p_sub(a: Poly, b: Poly) -> Poly:
    return p_add(a, p_neg(b))


def p_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ZERO
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return poly(*out)


def p_scale(a: Poly, c) -> Poly:
    return poly(*(coeff * Fraction(c) for coeff in a))


def p_eval(a: Poly, n) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * n + c
    return acc


def p_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q: list[Fraction] = []
    rem = list(a)
    while len(rem) >= len(b) and any(c != 0 for c in rem):
        shift = len(rem) - len(b)
        factor = rem[-1] / b[-1]
        q.append(factor)
        for i, c in enumerate(b):
            rem[shift + i] -= factor * c
        rem.pop()
    q.reverse()
    return poly(*q), poly(*rem)


def _root_bound(p: Poly) -> Fraction:
    """Cauchy bound: every real root x of p satisfies |x| <= bound."""
    if len(p) <= 1:
        return Fraction(0)
    lead = abs(p[-1])
    return 1 + max(abs(c) for c in p[:-1]) / lead


@dataclass(frozen=True)
class RatFunc:
    """num/den with den normalized to positive leading coefficient."""

    num: Poly
    den: Poly

    @staticmethod
    def make(num: Poly, den: Poly) -> "RatFunc":
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if p_lead(den) < 0:
            num, den = p_neg(num), p_neg(den)
        if not num:
            den = ONE
        return RatFunc(num, den)

    @staticmethod
    def const(c) -> "RatFunc":
        return RatFunc.make(poly(c), ONE)

    @staticmethod
    def var() -> "RatFunc":
        return RatFunc.make(X, ONE)

    def __add__(self, other: "RatFunc") -> "RatFunc":
        if self.den == other.den:
            return RatFunc.make(p_add(self.num, other.num), self.den)
        return RatFunc.make(
            p_add(p_mul(self.num, other.den), p_mul(other.num, self.den)),
            p_mul(self.den, other.den),
        )

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return self + (-other)

    def __neg__(self) -> "RatFunc":
        return RatFunc.make(p_neg(self.num), self.den)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc.make(p_mul(self.num, other.num), p_mul(self.den, other.den))

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc.make(p_mul(self.num, other.den), p_mul(self.den, other.num))

    def scale(self, c) -> "RatFunc":
        return RatFunc.make(p_scale(self.num, c), self.den)

    def shift(self, c) -> "RatFunc":
        return self + RatFunc.const(c)

    def times_var(self) -> "RatFunc":
        return RatFunc.make(p_mul(self.num, X), self.den)

    def eval(self, n) -> Fraction:
        return p_eval(self.num, n) / p_eval(self.den, n)

    def is_zero(self) -> bool:
        return not self.num

    def eventual_sign(self) -> int:
        """Sign of the function at every sufficiently large argument."""
        if not self.num:
            return 0
        s = 1 if p_lead(self.num) > 0 else -1
        return s  # denominator lead is positive by construction

    def stable_from(self) -> int:
        """An index N with sign(f(n)) == eventual_sign() for all n >= N.

        Starts one past the Cauchy root bound of numerator and denominator
        (where the sign is certainly stable) and walks down a bounded number
        of steps while the sign keeps matching, to keep explicit prefixes
        short.
        """
        bound = max(_root_bound(self.num), _root_bound(self.den))
        n0 = max(1, int(bound) + 2)
        if n0 > STABILITY_CAP:
            raise NormalizationOverflow(
                f"sign-stability index {n0} exceeds the cap {STABILITY_CAP}")
        target = self.eventual_sign()
        for _ in range(512):
            if n0 == 1:
                break
            try:
                value = self.eval(n0 - 1)
            except ZeroDivisionError:
                break
            if ((value > 0) - (value < 0)) != target:
                break
            n0 -= 1
        return n0
