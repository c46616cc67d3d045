"""Finite groups of monomial automorphisms of a product of curves.

A :class:`GroupElement` is stored as the linear operator it induces on
cohomology (pullback).  The letter sitting on factor ``i`` is moved to factor
``perm[i]`` and multiplied by the twist of factor ``i``: ``psi^j`` scales
``w_l`` by ``zeta^(j*l)`` and ``wbar_l`` by ``zeta^(-j*l)``, the involution
negates both, and the fundamental class is fixed.  Reordering odd-degree
letters after the permutation contributes a Koszul sign.

For an automorphism ``x -> (t_1(x_{s(1)}), ..., t_k(x_{s(k)}))`` of the
product, the pullback operator has ``perm = s`` and twist ``t_i`` on factor
``i``.  Products compose as operators: ``(e2 * e1)`` applies ``e1`` first.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

from .cohomology import Kind, Monomial, ProductSpace
from .cyclotomic import Scalar

__all__ = [
    "ResourceCapExceeded",
    "GroupElement",
    "GeneratedGroup",
    "Gabg",
    "Weight2",
    "Explicit",
    "Product",
    "GroupSpec",
    "generators",
    "close",
    "act",
    "group_spec_from_json",
    "DEFAULT_GROUP_CAP",
]

DEFAULT_GROUP_CAP = 10**7


class ResourceCapExceeded(RuntimeError):
    """A computation would exceed its configured resource cap."""


@dataclass(frozen=True)
class GroupElement:
    genera: tuple[int, ...]
    perm: tuple[int, ...]
    psi: tuple[int, ...]
    inv: tuple[int, ...]

    def __post_init__(self):
        k = len(self.genera)
        if not (len(self.perm) == len(self.psi) == len(self.inv) == k):
            raise ValueError("perm, psi and inv must have one entry per factor")
        if sorted(self.perm) != list(range(k)):
            raise ValueError(f"not a permutation: {self.perm}")
        for i, j in enumerate(self.perm):
            if self.genera[i] != self.genera[j]:
                raise ValueError(f"factor {i} (genus {self.genera[i]}) cannot move onto "
                                 f"factor {j} (genus {self.genera[j]})")
        object.__setattr__(self, "psi", tuple(x % (2 * g + 1) for x, g in zip(self.psi, self.genera)))
        object.__setattr__(self, "inv", tuple(x % 2 for x in self.inv))

    @classmethod
    def identity(cls, genera: Sequence[int]) -> "GroupElement":
        k = len(genera)
        return cls(tuple(genera), tuple(range(k)), (0,) * k, (0,) * k)

    @property
    def key(self) -> tuple:
        return (self.perm, self.psi, self.inv)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        """Operator product: apply ``other`` first, then ``self``."""
        if self.genera != other.genera:
            raise ValueError("elements act on different spaces")
        perm = tuple(self.perm[j] for j in other.perm)
        psi = tuple(other.psi[i] + self.psi[other.perm[i]] for i in range(len(perm)))
        inv = tuple(other.inv[i] + self.inv[other.perm[i]] for i in range(len(perm)))
        return GroupElement(self.genera, perm, psi, inv)

    def inverse(self) -> "GroupElement":
        k = len(self.perm)
        perm = [0] * k
        psi = [0] * k
        inv = [0] * k
        for i, j in enumerate(self.perm):
            perm[j] = i
            psi[j] = -self.psi[i]
            inv[j] = self.inv[i]
        return GroupElement(self.genera, tuple(perm), tuple(psi), tuple(inv))

    def is_identity(self) -> bool:
        return self.perm == tuple(range(len(self.perm))) and not any(self.psi) and not any(self.inv)

    def cycles(self) -> list[list[int]]:
        seen = [False] * len(self.perm)
        out = []
        for i in range(len(self.perm)):
            if seen[i]:
                continue
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                j = self.perm[j]
            out.append(cyc)
        return out

    def embed(self, genera: tuple[int, ...], offset: int) -> "GroupElement":
        """This element acting on factors ``offset..`` of a larger product, identity elsewhere."""
        k = len(genera)
        perm = list(range(k))
        psi = [0] * k
        inv = [0] * k
        for i in range(len(self.perm)):
            perm[offset + i] = offset + self.perm[i]
            psi[offset + i] = self.psi[i]
            inv[offset + i] = self.inv[i]
        return GroupElement(genera, tuple(perm), tuple(psi), tuple(inv))

    def to_json(self) -> dict:
        return {"perm": list(self.perm), "psi": list(self.psi), "inv": list(self.inv)}


def act(e: GroupElement, m: Monomial) -> tuple[Scalar, Monomial]:
    """Image of a basis monomial: ``e(m) = s * m'`` with ``s`` an exact root of unity."""
    genera = e.genera
    if len(m) != len(genera):
        raise ValueError("monomial and group element live on different spaces")
    M = ProductSpace(genera).modulus
    half = M // 2
    exp = 0
    out: list = [None] * len(m)
    odd_targets = []
    for i, (kind, l) in enumerate(m):
        j = e.perm[i]
        out[j] = (kind, l)
        if kind == Kind.HOL or kind == Kind.ANTI:
            N = 2 * genera[i] + 1
            twist = e.psi[i] * l if kind == Kind.HOL else -e.psi[i] * l
            exp += (twist % N) * (M // N) + e.inv[i] * half
            odd_targets.append(j)
    inversions = sum(1 for a, b in itertools.combinations(odd_targets, 2) if a > b)
    exp += (inversions % 2) * half
    return Scalar(exp, M), tuple(out)


# ---------------------------------------------------------------- group specs


def _signed_perm(genera, offset: int, sigma: Sequence[int], sign_first: bool) -> GroupElement:
    """``x -> (sgn * x_{s(1)}, x_{s(2)}, ...)`` on the block starting at ``offset``."""
    k = len(genera)
    perm = list(range(k))
    inv = [0] * k
    for i, s in enumerate(sigma):
        perm[offset + i] = offset + s
    if sign_first and sigma:
        inv[offset] = 1
    return GroupElement(tuple(genera), tuple(perm), (0,) * k, tuple(inv))


def _parity(sigma: Sequence[int]) -> int:
    return sum(1 for a, b in itertools.combinations(sigma, 2) if a > b) % 2


def _sym_generators(genera, offset: int, a: int) -> list[GroupElement]:
    """Generators of the signed ``Sym(a)`` action on one block.

    A transposition and an ``a``-cycle, each carrying the sign of its
    permutation on the first coordinate of the block.
    """
    if a < 2:
        return []
    transposition = [1, 0] + list(range(2, a))
    cycle = list(range(1, a)) + [0]
    gens = [_signed_perm(genera, offset, transposition, True)]
    if a > 2:
        gens.append(_signed_perm(genera, offset, cycle, _parity(cycle) == 1))
    return gens


@dataclass(frozen=True)
class Gabg:
    """The group ``G(a, b, g)`` acting on ``C_g^(a+b)``."""

    a: int
    b: int
    g: int
    kind: str = field(default="Gabg", init=False, repr=False)

    def __post_init__(self):
        if not (self.a >= self.b >= 0 and self.a + self.b >= 1 and self.g >= 0):
            raise ValueError(f"Gabg needs a >= b >= 0, a + b >= 1, g >= 0; got ({self.a},{self.b},{self.g})")

    def space(self) -> ProductSpace:
        return ProductSpace.power(self.g, self.a + self.b)

    def kind1_generators(self) -> list[GroupElement]:
        """Generators of ``{psi^j : sum_A j - sum_B j = 0 mod 2g+1}``; order ``(2g+1)^(a+b-1)``."""
        genera = self.space().genera
        k = self.a + self.b
        N = 2 * self.g + 1
        if N == 1:
            return []
        eps = [1] * self.a + [-1] * self.b
        gens = []
        for i in range(1, k):
            psi = [0] * k
            psi[i] = 1
            psi[0] = -eps[i] * eps[0]
            gens.append(GroupElement(genera, tuple(range(k)), tuple(psi), (0,) * k))
        return gens

    def kind2_generators(self) -> list[GroupElement]:
        genera = self.space().genera
        return _sym_generators(genera, 0, self.a) + _sym_generators(genera, self.a, self.b)

    def kind3_generators(self) -> list[GroupElement]:
        if self.a != self.b:
            return []
        genera = self.space().genera
        k = 2 * self.a
        perm = tuple((i + self.a) % k for i in range(k))
        return [GroupElement(genera, perm, (0,) * k, (0,) * k)]

    def generators(self) -> list[GroupElement]:
        return self.kind1_generators() + self.kind2_generators() + self.kind3_generators()

    def to_json(self) -> dict:
        return {"kind": "Gabg", "a": self.a, "b": self.b, "g": self.g}


@dataclass(frozen=True)
class Weight2:
    """Five-subgroup construction on ``(C_g^2)^(n1*n2)`` realizing ``h^{2,0} = g``, ``h^{1,1} = 1``.

    Factor ``(j, t, c)`` (block ``j < n1``, copy ``t < n2`` of ``C_g^2``,
    coordinate ``c`` in {0, 1}) has index ``(j*n2 + t)*2 + c``.
    """

    n1: int
    n2: int
    g: int
    kind: str = field(default="Weight2", init=False, repr=False)

    def __post_init__(self):
        if self.n1 < 1 or self.n2 < 1 or self.g < 0:
            raise ValueError("Weight2 needs n1, n2 >= 1 and g >= 0")

    def space(self) -> ProductSpace:
        return ProductSpace.power(self.g, 2 * self.n1 * self.n2)

    def _idx(self, j: int, t: int, c: int) -> int:
        return (j * self.n2 + t) * 2 + c

    def _twist(self, cells) -> GroupElement:
        genera = self.space().genera
        k = len(genera)
        psi = [0] * k
        for j, t in cells:
            psi[self._idx(j, t, 0)] = 1
            psi[self._idx(j, t, 1)] = -1
        return GroupElement(genera, tuple(range(k)), tuple(psi), (0,) * k)

    def _perm(self, f) -> GroupElement:
        genera = self.space().genera
        k = len(genera)
        perm = [0] * k
        for j in range(self.n1):
            for t in range(self.n2):
                for c in range(2):
                    perm[self._idx(j, t, c)] = self._idx(*f(j, t, c))
        return GroupElement(genera, tuple(perm), (0,) * k, (0,) * k)

    def generators(self) -> list[GroupElement]:
        genera = self.space().genera
        k = len(genera)
        gens: list[GroupElement] = []
        if self.g > 0:
            # G1: psi x psi^-1 on every copy inside block j
            for j in range(self.n1):
                gens.append(self._twist([(j, t) for t in range(self.n2)]))
            # G2: psi x psi^-1 on copy t of every block
            for t in range(self.n2):
                gens.append(self._twist([(j, t) for j in range(self.n1)]))
        # G3: (x1, x2) -> (-x2, x1) on every copy simultaneously
        perm = [0] * k
        inv = [0] * k
        for j in range(self.n1):
            for t in range(self.n2):
                perm[self._idx(j, t, 0)] = self._idx(j, t, 1)
                perm[self._idx(j, t, 1)] = self._idx(j, t, 0)
                inv[self._idx(j, t, 0)] = 1
        gens.append(GroupElement(genera, tuple(perm), (0,) * k, tuple(inv)))
        # G4: Sym(n1) on blocks
        if self.n1 >= 2:
            gens.append(self._perm(lambda j, t, c: ((1 - j) if j < 2 else j, t, c)))
            if self.n1 > 2:
                gens.append(self._perm(lambda j, t, c: ((j + 1) % self.n1, t, c)))
        # G5: Sym(n2) on copies inside every block
        if self.n2 >= 2:
            gens.append(self._perm(lambda j, t, c: (j, (1 - t) if t < 2 else t, c)))
            if self.n2 > 2:
                gens.append(self._perm(lambda j, t, c: (j, (t + 1) % self.n2, c)))
        return gens

    def to_json(self) -> dict:
        return {"kind": "Weight2", "n1": self.n1, "n2": self.n2, "g": self.g}


@dataclass(frozen=True)
class Explicit:
    genera: tuple[int, ...]
    gens: tuple[GroupElement, ...]
    kind: str = field(default="Explicit", init=False, repr=False)

    def space(self) -> ProductSpace:
        return ProductSpace(self.genera)

    def generators(self) -> list[GroupElement]:
        return list(self.gens)

    def to_json(self) -> dict:
        return {"kind": "Explicit", "genera": list(self.genera), "gens": [e.to_json() for e in self.gens]}


@dataclass(frozen=True)
class Product:
    """Direct product of groups acting factorwise on a product of spaces."""

    parts: tuple
    kind: str = field(default="Product", init=False, repr=False)

    def space(self) -> ProductSpace:
        genera: tuple[int, ...] = ()
        for part in self.parts:
            genera += part.space().genera
        return ProductSpace(genera)

    def generators(self) -> list[GroupElement]:
        genera = self.space().genera
        out = []
        offset = 0
        for part in self.parts:
            for e in part.generators():
                out.append(e.embed(genera, offset))
            offset += part.space().k
        return out

    def to_json(self) -> dict:
        return {"kind": "Product", "parts": [p.to_json() for p in self.parts]}


GroupSpec = Union[Gabg, Weight2, Explicit, Product]


def generators(spec: GroupSpec) -> list[GroupElement]:
    return spec.generators()


def group_spec_from_json(obj: dict) -> GroupSpec:
    kind = obj.get("kind")
    if kind == "Gabg":
        return Gabg(int(obj["a"]), int(obj["b"]), int(obj["g"]))
    if kind == "Weight2":
        return Weight2(int(obj["n1"]), int(obj["n2"]), int(obj["g"]))
    if kind == "Explicit":
        genera = tuple(obj["genera"])
        gens = tuple(GroupElement(genera, tuple(x["perm"]), tuple(x["psi"]), tuple(x["inv"]))
                     for x in obj["gens"])
        return Explicit(genera, gens)
    if kind == "Product":
        return Product(tuple(group_spec_from_json(p) for p in obj["parts"]))
    raise ValueError(f"unknown group kind {kind!r}")


@dataclass(frozen=True)
class GeneratedGroup:
    genera: tuple[int, ...]
    elements: tuple[GroupElement, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, e: GroupElement) -> bool:
        return e.key in {x.key for x in self.elements}


def close(gens: Iterable[GroupElement], genera: Optional[Sequence[int]] = None,
          cap: int = DEFAULT_GROUP_CAP) -> GeneratedGroup:
    """Closure of ``gens`` under composition, in canonical sorted order."""
    gens = list(gens)
    if genera is None:
        if not gens:
            raise ValueError("need generators or the space's genera")
        genera = gens[0].genera
    genera = tuple(genera)
    for e in gens:
        if e.genera != genera:
            raise ValueError("generators act on different spaces")
    ident = GroupElement.identity(genera)
    seen = {ident.key: ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = s * x
            if y.key not in seen:
                seen[y.key] = y
                if len(seen) > cap:
                    raise ResourceCapExceeded(f"group closure exceeds cap of {cap} elements")
                queue.append(y)
    return GeneratedGroup(genera, tuple(seen[k] for k in sorted(seen)))
