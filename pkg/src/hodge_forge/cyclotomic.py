"""Exact sums of roots of unity.

A sum ``sum_e c_e * zeta_m**e`` is kept as an integer coefficient vector of
length ``m``.  Deciding whether it is a rational integer reduces the vector
modulo the ``m``-th cyclotomic polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

__all__ = ["Scalar", "cyclotomic_poly", "reduce_mod_cyclotomic", "to_rational_integer", "NonIntegralSum"]


class NonIntegralSum(ArithmeticError):
    """A root-of-unity sum expected to be an integer was not."""


@dataclass(frozen=True)
class Scalar:
    """The root of unity ``zeta_m**e``."""

    e: int
    m: int

    def __post_init__(self):
        object.__setattr__(self, "e", self.e % self.m)

    def __mul__(self, other: "Scalar") -> "Scalar":
        if self.m != other.m:
            raise ValueError("scalars over different moduli")
        return Scalar(self.e + other.e, self.m)

    @classmethod
    def one(cls, m: int) -> "Scalar":
        return cls(0, m)

    @classmethod
    def minus_one(cls, m: int) -> "Scalar":
        if m % 2:
            raise ValueError("-1 needs an even modulus")
        return cls(m // 2, m)

    def inverse(self) -> "Scalar":
        return Scalar(-self.e, self.m)


def _polydiv(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # coefficient lists, lowest degree first; den monic
    num = list(num)
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return [0], num
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    return quot, num[:dd] or [0]


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients (lowest degree first) of the ``m``-th cyclotomic polynomial."""
    if m < 1:
        raise ValueError("m must be positive")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly, rem = _polydiv(poly, list(cyclotomic_poly(d)))
            assert not any(rem)
    return tuple(poly)


def reduce_mod_cyclotomic(coeffs: list[int]) -> list[int]:
    """Reduce ``sum c_e zeta^e`` (``zeta`` primitive of order ``len(coeffs)``) to canonical form."""
    m = len(coeffs)
    _, rem = _polydiv(list(coeffs), list(cyclotomic_poly(m)))
    return rem


def to_rational_integer(coeffs: list[int]) -> int:
    """Return the integer value of the sum, or raise :class:`NonIntegralSum`."""
    rem = reduce_mod_cyclotomic(coeffs)
    if any(rem[1:]):
        raise NonIntegralSum(f"root-of-unity sum is not rational: residue {rem}")
    return rem[0]


def lcm(*xs: int) -> int:
    out = 1
    for x in xs:
        out = out * x // gcd(out, x)
    return out
