"""Monomial basis of the cohomology of a product of hyperelliptic curves.

Each curve factor of genus ``g`` contributes the letters ``1``, ``w_l``
(holomorphic, ``l = 1..g``), ``wbar_l`` and the fundamental class ``W``.  A
product ``w_l ^ wbar_m`` on one factor is a multiple of ``W``, so a basis
monomial never carries both on the same factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from functools import reduce
from typing import Iterator

from . import diamond
from .cyclotomic import lcm

__all__ = ["Kind", "ProductSpace", "basis", "iter_basis", "hodge_numbers", "bidegree", "letters"]


class Kind(IntEnum):
    ONE = 0
    HOL = 1
    ANTI = 2
    TOP = 3


# A letter is (Kind, l); l = 0 for ONE and TOP.  A monomial is a tuple of
# letters ordered by factor index.
Letter = tuple[int, int]
Monomial = tuple[Letter, ...]

ONE: Letter = (Kind.ONE, 0)
TOP: Letter = (Kind.TOP, 0)


def hol(l: int) -> Letter:
    return (Kind.HOL, l)


def anti(l: int) -> Letter:
    return (Kind.ANTI, l)


@dataclass(frozen=True)
class ProductSpace:
    """``C_{g_1} x ... x C_{g_k}``."""

    genera: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "genera", tuple(int(g) for g in self.genera))
        if any(g < 0 for g in self.genera):
            raise ValueError("genera must be >= 0")

    @classmethod
    def power(cls, g: int, k: int) -> "ProductSpace":
        return cls((g,) * k)

    @property
    def k(self) -> int:
        return len(self.genera)

    @property
    def modulus(self) -> int:
        """Order of the root-of-unity group holding every scalar (signs included)."""
        return lcm(2, *(2 * (2 * g + 1) for g in self.genera))

    def __add__(self, other: "ProductSpace") -> "ProductSpace":
        return ProductSpace(self.genera + other.genera)

    def to_json(self) -> dict:
        return {"genera": list(self.genera)}

    @classmethod
    def from_json(cls, obj: dict) -> "ProductSpace":
        return cls(tuple(obj["genera"]))


def letters(g: int) -> list[Letter]:
    return [ONE] + [hol(l) for l in range(1, g + 1)] + [anti(l) for l in range(1, g + 1)] + [TOP]


_DEG = {Kind.ONE: (0, 0), Kind.HOL: (1, 0), Kind.ANTI: (0, 1), Kind.TOP: (1, 1)}


def bidegree(m: Monomial) -> tuple[int, int]:
    p = q = 0
    for kind, _ in m:
        dp, dq = _DEG[kind]
        p += dp
        q += dq
    return p, q


def iter_basis(space: ProductSpace, p: int, q: int) -> Iterator[Monomial]:
    """Yield every basis monomial of bidegree ``(p, q)`` exactly once."""
    genera = space.genera
    k = len(genera)

    def rec(i: int, p: int, q: int, acc: tuple) -> Iterator[Monomial]:
        rest = k - i
        if p < 0 or q < 0 or p > rest or q > rest:
            return
        if i == k:
            yield acc
            return
        g = genera[i]
        yield from rec(i + 1, p, q, acc + (ONE,))
        for l in range(1, g + 1):
            yield from rec(i + 1, p - 1, q, acc + (hol(l),))
        for l in range(1, g + 1):
            yield from rec(i + 1, p, q - 1, acc + (anti(l),))
        yield from rec(i + 1, p - 1, q - 1, acc + (TOP,))

    yield from rec(0, p, q, ())


def basis(space: ProductSpace, p: int, q: int) -> list[Monomial]:
    if not (0 <= p <= space.k and 0 <= q <= space.k):
        raise ValueError(f"bidegree ({p},{q}) out of range for a {space.k}-fold product")
    return list(iter_basis(space, p, q))


def hodge_numbers(space: ProductSpace) -> diamond.FormalHodgeDiamond:
    """Hodge diamond of the product, by iterated Kunneth of curve diamonds."""
    return reduce(diamond.kunneth, (diamond.curve(g) for g in space.genera), diamond.point())
