"""Exact arithmetic: reduced rationals, cyclotomic polynomials, and a
certified zero-test for integer combinations of roots of unity.

The central primitive is ``root_sum_is_zero``: a sum sum_e c_e zeta_N^e of
N-th roots of unity with integer coefficients vanishes exactly when the
polynomial sum_e c_e x^e is divisible by the N-th cyclotomic polynomial
Phi_N over the integers.  Everything downstream that claims an *exact*
orthogonality certificate bottoms out here.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .errors import InvalidInputError

__all__ = [
    "reduce_rational",
    "extended_gcd",
    "cyclotomic_polynomial",
    "CycSum",
    "root_sum_is_zero",
    "evaluate_cyc",
]


def reduce_rational(p: int, q: int) -> Fraction:
    """Return p/q as a reduced fraction with positive denominator."""
    if q == 0:
        raise InvalidInputError("zero denominator")
    return Fraction(p, q)


def extended_gcd(p: int, q: int) -> tuple[int, int, int]:
    """Return (g, k, l) with g = gcd(p, q) > 0 and k*p + l*q = g."""
    if p == 0 and q == 0:
        raise InvalidInputError("gcd(0, 0) is undefined")
    old_r, r = p, q
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        quotient = old_r // r
        old_r, r = r, old_r - quotient * r
        old_s, s = s, old_s - quotient * s
        old_t, t = t, old_t - quotient * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _exact_div(dividend: list[int], divisor: tuple[int, ...]) -> list[int]:
    # Both polynomials monic; division stays in the integers.
    rem = list(dividend)
    dd = len(divisor) - 1
    quot = [0] * (len(rem) - dd)
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if c:
            quot[i - dd] = c
            for j, b in enumerate(divisor):
                rem[i - dd + j] -= c * b
    if any(rem):
        raise ArithmeticError("division was not exact")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, constant term first.

    Computed by exact division of x^n - 1 by Phi_d over the proper
    divisors d of n; memoized since callers revisit small orders often.
    """
    if n < 1:
        raise InvalidInputError("cyclotomic order must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _exact_div(poly, cyclotomic_polynomial(d))
    return tuple(poly)


class CycSum:
    """Formal integer combination sum_e c_e zeta_N^e of N-th roots of unity.

    Exponents are reduced mod N at construction; zero coefficients are
    dropped.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Mapping[int, int]):
        if order < 1:
            raise InvalidInputError("order must be positive")
        reduced: dict[int, int] = {}
        for e, c in coeffs.items():
            if c:
                e %= order
                reduced[e] = reduced.get(e, 0) + c
        self.order = order
        self.coeffs = {e: c for e, c in reduced.items() if c}

    def __eq__(self, other):
        return (
            isinstance(other, CycSum)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        return f"CycSum(order={self.order}, coeffs={self.coeffs!r})"


def root_sum_is_zero(s: CycSum) -> bool:
    """Exact vanishing test via divisibility by Phi_N over the integers."""
    if not s.coeffs:
        return True
    phi = cyclotomic_polynomial(s.order)
    dd = len(phi) - 1
    rem = [0] * s.order
    for e, c in s.coeffs.items():
        rem[e] = c
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if c:
            for j, b in enumerate(phi):
                rem[i - dd + j] -= c * b
    return not any(rem[:dd])


def evaluate_cyc(s: CycSum) -> complex:
    """Floating-point value of the sum; the numeric cross-check."""
    return sum(
        (c * cmath.exp(2j * math.pi * e / s.order) for e, c in s.coeffs.items()),
        complex(0),
    )
