"""Recipes, the key construction and the planners built on it.

A :class:`Recipe` describes a variety abstractly: a distinguished block
``(T_i0, G_i0)`` (or a point), further blocks ``(T_i, G_i)`` that are blown up
before taking the quotient, a number of point blow-ups, and optionally a final
product with projective space.  :func:`evaluate` turns a recipe back into Hodge
numbers using only invariant dimensions, so every planner can be checked by
round-tripping.

Primitive numbers of the key construction, for ``p + q < n``::

    l(p, q) = dim H^{p,q}(T_i0)^G_i0 + sum_i dim H^{p-1,q-1}(T_i)^G_i
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence, Union

from . import diamond as dm
from .cohomology import ProductSpace
from .groups import DEFAULT_GROUP_CAP, Gabg, GroupSpec, Product, group_spec_from_json
from .invariants import DEFAULT_BASIS_CAP, InvariantTable, closed_form, invariant_table

__all__ = [
    "Block",
    "Recipe",
    "Infeasible",
    "Evaluation",
    "PlannerConstants",
    "ZcNode",
    "ZcCertificate",
    "key_construction",
    "integrate",
    "evaluate",
    "weight_floor",
    "middle_weight_floor",
    "plan_weight_k",
    "plan_middle_weight",
    "planner_constants",
    "c1_value",
    "c2_value",
    "block_family",
    "plan_truncated",
    "plan_betti",
    "zc_certificate",
    "validate_certificate",
    "recipe_from_json",
    "projective_recipe",
]

FIXED_POINT_ASSUMPTION = "T_i0 contains a point fixed by G_i0 (assumed, not computed)"


# ---------------------------------------------------------------- data types


@dataclass(frozen=True)
class Block:
    space: ProductSpace
    group: GroupSpec

    def __post_init__(self):
        if self.group.space() != self.space:
            raise ValueError(f"group {self.group.to_json()} does not act on {self.space.genera}")

    @classmethod
    def gabg(cls, a: int, b: int, g: int) -> "Block":
        spec = Gabg(a, b, g)
        return cls(spec.space(), spec)

    def to_json(self) -> dict:
        return {"space": self.space.to_json(), "group": self.group.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "Block":
        return cls(ProductSpace.from_json(obj["space"]), group_spec_from_json(obj["group"]))


@dataclass(frozen=True)
class Recipe:
    """A construction plan.

    ``n`` is the dimension of the final variety.  With ``base="key"`` the
    inner variety of dimension ``n - times_projective`` comes from the key
    construction applied to ``i0`` (``None`` means a point) and ``blocks``;
    with ``base="projective"`` it is projective space.  ``point_blowups``
    points are blown up on the inner variety, which is then multiplied by
    ``P^times_projective``.
    """

    n: int
    i0: Optional[Block]
    blocks: tuple[Block, ...] = ()
    point_blowups: int = 0
    provenance: str = ""
    base: str = "key"
    times_projective: int = 0
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))
        object.__setattr__(self, "notes", tuple(self.notes))
        if self.base not in ("key", "projective"):
            raise ValueError(f"unknown base {self.base!r}")
        if self.point_blowups < 0 or self.times_projective < 0:
            raise ValueError("point_blowups and times_projective must be >= 0")
        if self.inner_dim < 0:
            raise ValueError("times_projective exceeds n")
        if self.base == "projective" and (self.i0 is not None or self.blocks):
            raise ValueError("a projective base carries no blocks")

    @property
    def inner_dim(self) -> int:
        return self.n - self.times_projective

    @property
    def feasible(self) -> bool:
        return True

    def to_json(self) -> dict:
        i0 = None
        if self.i0 is not None:
            i0 = dict(self.i0.to_json(), assumptions=[FIXED_POINT_ASSUMPTION])
        return {
            "n": self.n,
            "base": self.base,
            "i0": i0,
            "blocks": [b.to_json() for b in self.blocks],
            "point_blowups": self.point_blowups,
            "times_projective": self.times_projective,
            "provenance": self.provenance,
            "notes": list(self.notes),
        }


def recipe_from_json(obj: dict) -> Recipe:
    try:
        i0 = obj.get("i0")
        return Recipe(
            n=int(obj["n"]),
            i0=Block.from_json(i0) if i0 else None,
            blocks=tuple(Block.from_json(b) for b in obj.get("blocks", [])),
            point_blowups=int(obj.get("point_blowups", 0)),
            provenance=str(obj.get("provenance", "")),
            base=str(obj.get("base", "key")),
            times_projective=int(obj.get("times_projective", 0)),
            notes=tuple(obj.get("notes", [])),
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed recipe: {exc}") from None


@dataclass(frozen=True)
class Infeasible:
    reason: str
    detail: dict = field(default_factory=dict)

    @property
    def feasible(self) -> bool:
        return False

    def to_json(self) -> dict:
        return {"feasible": False, "reason": self.reason, "detail": self.detail}


PlanResult = Union[Recipe, Infeasible]


@dataclass(frozen=True)
class Evaluation:
    """Result of evaluating a recipe.

    ``diamond`` holds every entry the construction determines; unknown
    entries are ``None``.
    """

    diamond: dm.PartialDiamond
    primitive: Optional[dm.PrimitiveTable]

    @property
    def n(self) -> int:
        return self.diamond.n

    def truncated(self) -> Optional[dm.TruncatedDiamond]:
        n = self.n
        if any(self.diamond.h[p][q] is None for p in range(n + 1) for q in range(n + 1) if p + q != n):
            return None
        return self.diamond.truncated()

    def full(self) -> Optional[dm.FormalHodgeDiamond]:
        try:
            return self.diamond.full()
        except dm.StructureError:
            return None

    def to_json(self) -> dict:
        full = self.full()
        return {
            "n": self.n,
            "h": [list(r) for r in self.diamond.h],
            "known_rows": self.diamond.known_rows(),
            "complete": full is not None,
        }


# ---------------------------------------------------------------- evaluation


def key_construction(i0_table: Optional[InvariantTable], block_tables: Sequence[InvariantTable],
                     n: int) -> dm.PrimitiveTable:
    """Primitive numbers ``l(p, q)`` for ``p + q < n``; ``i0_table=None`` stands for a point."""
    if n < 1:
        raise ValueError("n must be >= 1")
    i0 = i0_table.as_dict() if i0_table is not None else {(0, 0): 1}
    tables = [t.as_dict() for t in block_tables]
    rows = []
    for p in range(n + 1):
        row = []
        for q in range(n + 1):
            if p + q >= n:
                row.append(None)
                continue
            v = i0.get((p, q), 0)
            for t in tables:
                v += t.get((p - 1, q - 1), 0)
            row.append(v)
        rows.append(tuple(row))
    return dm.PrimitiveTable(n, n - 1, tuple(rows))


def integrate(prim: dm.PrimitiveTable, point_blowups: int = 0) -> dm.TruncatedDiamond:
    """Hodge numbers below the middle from primitive ones, mirrored above it.

    Each point blow-up raises ``l(1, 1)`` by one.
    """
    n = prim.n

    def l(p, q):
        v = prim[p, q]
        if (p, q) == (1, 1) and n > 2:
            v += point_blowups
        return v

    h = [[None] * (n + 1) for _ in range(n + 1)]
    for p in range(n + 1):
        for q in range(n + 1):
            if p + q < n:
                h[p][q] = sum(l(p - s, q - s) for s in range(min(p, q) + 1))
    for p in range(n + 1):
        for q in range(n + 1):
            if p + q > n:
                h[p][q] = h[n - p][n - q]
    return dm.TruncatedDiamond(n, h)


def _blown_up_projective(n: int, points: int) -> dm.FormalHodgeDiamond:
    d = dm.projective_space(n)
    if n == 0:
        return d
    if n == 1:
        if points:
            raise ValueError("blowing up points on a curve does nothing; use point_blowups=0")
        return d
    for _ in range(points):
        d = dm.blow_up(d, dm.point(), n)
    return d


def _block_cells(k: int, limit: int) -> list[tuple[int, int]]:
    return [(p, q) for p in range(k + 1) for q in range(k + 1) if p + q < limit]


def evaluate(r: Recipe, *, group_cap: int = DEFAULT_GROUP_CAP, basis_cap: int = DEFAULT_BASIS_CAP) -> Evaluation:
    """Hodge numbers determined by a recipe."""
    m = r.inner_dim
    prim = None
    if r.base == "projective":
        inner: dm.AnyDiamond = _blown_up_projective(m, r.point_blowups)
    else:
        if m < 1:
            inner = dm.point()
        else:
            i0_table = None
            if r.i0 is not None:
                i0_table = invariant_table(r.i0.group, group_cap=group_cap, basis_cap=basis_cap,
                                           cells=_block_cells(r.i0.space.k, m))
            tables = [invariant_table(b.group, group_cap=group_cap, basis_cap=basis_cap,
                                      cells=_block_cells(b.space.k, m - 2) or [(0, 0)])
                      for b in r.blocks]
            prim = key_construction(i0_table, tables, m)
            inner = integrate(prim, r.point_blowups)
    out = dm.PartialDiamond(inner.n, inner.h)
    if r.times_projective:
        out = dm.kunneth(out, dm.projective_space(r.times_projective))
        out = dm.PartialDiamond(out.n, out.h)
    return Evaluation(out, prim)


def projective_recipe(n: int, points: int = 0, provenance: str = "projective space") -> Recipe:
    return Recipe(n=n, i0=None, base="projective", point_blowups=points, provenance=provenance)


# ---------------------------------------------------------------- weight k


def weight_floor(m: int) -> int:
    """Smallest ``h^{m,m}`` produced by the weight-``2m`` planner."""
    return m * ((m + 3) // 2) + (m // 2) ** 2


def middle_weight_floor(m: int) -> int:
    return 2 * (m - 1) * ((m + 2) // 2) + 2 * ((m - 1) // 2) ** 2


def _check_row(k: int, target: Sequence[int]) -> Optional[Infeasible]:
    if len(target) != k + 1:
        return Infeasible("target length", {"expected": k + 1, "got": len(target)})
    if any((not isinstance(x, int)) or x < 0 for x in target):
        return Infeasible("target entries must be natural numbers", {"target": list(target)})
    if list(target) != list(reversed(target)):
        return Infeasible("target not symmetric", {"target": list(target)})
    return None


def plan_weight_k(k: int, target: Sequence[int], n: int) -> PlanResult:
    """Recipe whose weight-``k`` Hodge numbers are ``target = (h^{k,0}, ..., h^{0,k})``."""
    if k < 1:
        return Infeasible("weight must be >= 1", {"k": k})
    if n <= k:
        return Infeasible("dimension must exceed the weight", {"n": n, "k": k})
    bad = _check_row(k, target)
    if bad:
        return bad
    h = list(target)  # h[i] = h^{k-i,i}
    points = 0
    if k % 2 == 0:
        m = k // 2
        floor = weight_floor(m)
        if h[m] < floor:
            return Infeasible("h^{m,m} below floor", {"m": m, "floor": floor, "value": h[m]})
        points = h[m] - floor
    blocks = [Block.gabg(k - 2 * i, 0, h[i]) for i in range((k - 1) // 2 + 1)]
    return Recipe(n=n, i0=blocks[0], blocks=tuple(blocks[1:]), point_blowups=points,
                  provenance=f"weight-{k} planner")


def plan_middle_weight(target: Sequence[int], n: int) -> PlanResult:
    """Recipe realizing a weight-``n`` Hodge structure with ``h^{n,0}=0`` and even entries."""
    if n < 1:
        return Infeasible("n must be >= 1", {"n": n})
    bad = _check_row(n, target)
    if bad:
        return bad
    if target[0] != 0:
        return Infeasible("h^{n,0} must vanish", {"h_n0": target[0]})
    odd = [i for i, x in enumerate(target) if x % 2]
    if odd:
        return Infeasible("entries must be even", {"odd_positions": odd})
    if n == 1:
        return projective_recipe(1, 0, "middle-weight planner")
    if n == 2:
        if target[1] < 1:
            return Infeasible("h^{1,1} must be >= 1", {"value": target[1]})
        return projective_recipe(2, target[1] - 1, "middle-weight planner")
    inner = [x // 2 for x in target[1:-1]]
    if n % 2 == 0:
        m = n // 2
        floor = middle_weight_floor(m)
        if target[m] < floor:
            return Infeasible("h^{m,m} below floor", {"m": m, "floor": floor, "value": target[m]})
    y = plan_weight_k(n - 2, inner, n - 1)
    if isinstance(y, Infeasible):
        return y
    return Recipe(n=n, i0=y.i0, blocks=y.blocks, point_blowups=y.point_blowups,
                  provenance="middle-weight planner", times_projective=1)


# ---------------------------------------------------------------- truncated diamonds


def block_family(n: int) -> list[tuple[int, int]]:
    """Index pairs ``(a, b)`` with ``a >= b > 0`` and ``2 < a + b < n``."""
    return [(s - b, b) for s in range(3, n) for b in range(1, s // 2 + 1)]


@lru_cache(maxsize=None)
def _diag(a: int, b: int, t: int) -> int:
    """Genus-independent part of ``dim H^{t,t}`` invariants for ``G(a, b, g)``."""
    return closed_form(a, b, 0)[(t, t)]


@lru_cache(maxsize=None)
def _blocks_excess(p: int, n: int) -> int:
    return sum(_diag(a - 1, b - 1, p - 1) for a, b in block_family(n))


def c1_value(p: int, n: int, k0: int) -> int:
    """Excess at ``l(p, p)`` when ``T_i0 = C^k0`` carries ``G(k0, 0, g)`` (``k0 = 0``: a point)."""
    if not 0 <= k0 <= n - 1:
        raise ValueError(f"k0 must lie in 0..{n - 1}")
    i0 = (1 if p <= k0 else 0) if k0 >= 1 else int(p == 0)
    return i0 + _blocks_excess(p, n)


def c2_value(p: int, n: int) -> int:
    """Excess at ``l(p, p)`` when ``T_i0 = C^(n-1) x C^(n-2)`` carries the product group."""
    i0 = sum(1 for i in range(p + 1) if i <= n - 1 and p - i <= n - 2)
    return i0 + _blocks_excess(p, n)


@dataclass(frozen=True)
class PlannerConstants:
    p: int
    n: int
    c1: tuple[tuple[int, int], ...]  # (k0, C1(p, n, k0)) for k0 = 1 .. n-1
    c2: int

    @property
    def c1_max(self) -> int:
        return max(v for _, v in self.c1)

    @property
    def c(self) -> int:
        return max(self.c1_max, self.c2)

    def bounds(self) -> dict:
        """The three exact comparisons, multiplied through by 4."""
        p, n = self.p, self.n
        return {
            "C": (4 * self.c, p * (n * n - 2 * n + 5)),
            "C1": (4 * self.c1_max, p * (n - 1) ** 2),
            "C2": (4 * self.c2, p * (n - 1) ** 2 + 4 * p),
        }

    def to_json(self) -> dict:
        b = self.bounds()
        return {
            "p": self.p, "n": self.n,
            "C1": {str(k0): v for k0, v in self.c1}, "C1_max": self.c1_max, "C2": self.c2, "C": self.c,
            "bounds": {k: {"lhs_x4": lhs, "rhs_x4": rhs, "holds": lhs <= rhs} for k, (lhs, rhs) in b.items()},
        }


def planner_constants(p: int, n: int) -> PlannerConstants:
    if not (1 <= p and 2 * p < n):
        raise ValueError(f"need 1 <= p < n/2, got p={p}, n={n}")
    return PlannerConstants(p, n, tuple((k0, c1_value(p, n, k0)) for k0 in range(1, n)), c2_value(p, n))


def _is_blown_up_projective(t: dm.TruncatedDiamond, l) -> bool:
    n = t.n
    for p in range(n + 1):
        for q in range(n + 1):
            if p + q < n and (p, q) not in ((0, 0), (1, 1)) and l[p, q] != 0:
                return False
    return True


def plan_truncated(t: dm.TruncatedDiamond) -> PlanResult:
    """Recipe whose truncated Hodge diamond is ``t``."""
    violations = dm.validate(t)
    if violations:
        return Infeasible("invalid diamond", {"violations": [v.to_json() for v in violations]})
    n = t.n
    l = dm.primitive_numbers(t)
    if _is_blown_up_projective(t, l):
        return projective_recipe(n, l[1, 1] if n > 2 else 0, "truncated planner (blown-up projective space)")
    outer = [k for k in range(1, n) if t[k, 0]]
    if not outer:
        mode, k0 = "point", 0
    elif len(outer) == 1:
        mode, k0 = "single", outer[0]
    elif all(k >= n - 2 for k in outer):
        mode, k0 = "pair", None
    else:
        return Infeasible("outer pattern", {"nonzero_outer": outer})

    def excess(p):
        return c2_value(p, n) if mode == "pair" else c1_value(p, n, k0)

    diag_genus = {}
    points = 0
    for p in range(1, (n - 1) // 2 + 1):
        c = excess(p)
        if l[p, p] < c:
            return Infeasible("l^{p,p} below threshold", {"p": p, "threshold": c, "value": l[p, p]})
        if p == 1:
            points = l[1, 1] - c
        else:
            diag_genus[p] = l[p, p] - c

    if mode == "point":
        i0 = None
    elif mode == "single":
        i0 = Block.gabg(k0, 0, l[k0, 0])
    else:
        parts = (Gabg(n - 1, 0, l[n - 1, 0]), Gabg(n - 2, 0, l[n - 2, 0]))
        spec = Product(parts)
        i0 = Block(spec.space(), spec)
    blocks = []
    for a, b in block_family(n):
        g = diag_genus[a] if a == b else l[a, b]
        blocks.append(Block.gabg(a - 1, b - 1, g))
    return Recipe(n=n, i0=i0, blocks=tuple(blocks), point_blowups=points,
                  provenance=f"truncated planner ({mode} outer pattern)")


def betti_to_truncated(b: dm.BettiVector) -> dm.TruncatedDiamond:
    """Odd mass on ``(k+1, k)``, even mass on the diagonal, everything else zero."""
    n = b.n
    h = [[0] * (n + 1) for _ in range(n + 1)]
    for p in range(n + 1):
        for q in range(n + 1):
            if p + q >= n:
                continue
            if p == q:
                h[p][q] = b.b[2 * p]
            elif abs(p - q) == 1:
                h[p][q] = b.b[p + q] // 2
    for p in range(n + 1):
        for q in range(n + 1):
            if p + q == n:
                h[p][q] = None
            elif p + q > n:
                h[p][q] = h[n - p][n - q]
    return dm.TruncatedDiamond(n, h)


def betti_advisory(b: dm.BettiVector) -> list[str]:
    """Status of the sufficient condition ``b_2k - b_2k-2 >= k (n^2 - 2n + 5) / 8``.

    This condition is reported, not enforced: with the diagonal distribution
    the enforced thresholds are the exact planner constants.
    """
    n = b.n
    out = []
    for k in range(1, (n - 1) // 2 + 1):
        lhs = 8 * (b.b[2 * k] - b.b[2 * k - 2])
        rhs = k * (n * n - 2 * n + 5)
        out.append(f"k={k}: 8*(b_{2 * k}-b_{2 * k - 2})={lhs} {'>=' if lhs >= rhs else '<'} "
                   f"k*(n^2-2n+5)={rhs} (advisory /8 condition, not used for feasibility)")
    return out


def plan_betti(b: dm.BettiVector) -> PlanResult:
    """Recipe with Betti numbers ``b_k`` for all ``k != n``; ``b_n`` is ignored."""
    violations = [v for v in dm.validate_betti(b) if v.site[0] != b.n]
    if violations:
        return Infeasible("invalid Betti vector", {"violations": [v.to_json() for v in violations]})
    res = plan_truncated(betti_to_truncated(b))
    if isinstance(res, Infeasible):
        detail = dict(res.detail)
        if "p" in detail:
            detail["k"] = 2 * detail["p"]
        return Infeasible(res.reason, detail)
    return Recipe(n=res.n, i0=res.i0, blocks=res.blocks, point_blowups=res.point_blowups,
                  provenance="betti planner via " + res.provenance, base=res.base,
                  notes=tuple(betti_advisory(b)))


# ---------------------------------------------------------------- Z_c certificates


def zc_genus(c: int) -> int:
    return (3 ** c - 1) // 2


@dataclass(frozen=True)
class ZcNode:
    """A pair ``(X, phi)`` in the class with ``h^{a,b}`` primitive of dimension ``(3^c-1)/2``."""

    a: int
    b: int
    kind: str  # "leaf" or "combine"
    automorphism: str = ""  # for leaves: "psi" or "psi^-1"
    genus: int = 0  # for leaves
    children: tuple["ZcNode", ...] = ()

    def to_json(self) -> dict:
        d = {"a": self.a, "b": self.b, "kind": self.kind}
        if self.kind == "leaf":
            d.update(curve_genus=self.genus, automorphism=self.automorphism)
        else:
            d["children"] = [c.to_json() for c in self.children]
        return d

    def leaves(self) -> list["ZcNode"]:
        if self.kind == "leaf":
            return [self]
        return [x for c in self.children for x in c.leaves()]


@dataclass(frozen=True)
class ZcCertificate:
    a: int
    b: int
    c: int
    n: int
    tree: ZcNode
    offdiag: int

    @property
    def projective_factor(self) -> int:
        return self.n - self.a - self.b

    def offdiagonal_primitive(self) -> dict[tuple[int, int], int]:
        """Primitive numbers off the vertical axis; all vanish except at ``(a,b)``, ``(b,a)``."""
        return {(self.a, self.b): self.offdiag, (self.b, self.a): self.offdiag}

    def hodge(self, p: int, q: int) -> Optional[int]:
        """``h^{p,q}`` for ``p != q`` with ``p + q <= n``; ``None`` (unspecified) on the diagonal."""
        if p == q:
            return None
        if p + q > self.n:
            p, q = self.n - q, self.n - p
        lo = self.offdiagonal_primitive()
        return sum(lo.get((p - s, q - s), 0) for s in range(min(p, q) + 1))

    def to_json(self) -> dict:
        return {
            "a": self.a, "b": self.b, "c": self.c, "n": self.n,
            "offdiag": self.offdiag,
            "projective_factor": self.projective_factor,
            "h_pp": "unspecified",
            "tree": self.tree.to_json(),
        }


def _zc_tree(a: int, b: int, g: int) -> ZcNode:
    if (a, b) == (1, 0):
        return ZcNode(1, 0, "leaf", "psi", g)
    if (a, b) == (0, 1):
        return ZcNode(0, 1, "leaf", "psi^-1", g)
    if b == 0:
        return ZcNode(a, 0, "combine", children=(_zc_tree(1, 0, g), _zc_tree(a - 1, 0, g)))
    return ZcNode(a, b, "combine", children=(_zc_tree(0, 1, g), _zc_tree(a, b - 1, g)))


def zc_certificate(a: int, b: int, c: int, n: int) -> ZcCertificate:
    if not (a > b >= 0):
        raise ValueError(f"need a > b >= 0, got a={a}, b={b}")
    if n < a + b:
        raise ValueError(f"need n >= a + b, got n={n}")
    if c < 1:
        raise ValueError("need c >= 1")
    g = zc_genus(c)
    return ZcCertificate(a, b, c, n, _zc_tree(a, b, g), g)


def validate_certificate(cert: ZcCertificate) -> list[str]:
    """Structural problems of a certificate (empty when it is well formed)."""
    problems = []
    g = zc_genus(cert.c)
    if not (cert.a > cert.b >= 0 and cert.n >= cert.a + cert.b and cert.c >= 1):
        problems.append("parameters violate a > b >= 0, n >= a + b, c >= 1")
    if cert.offdiag != g:
        problems.append(f"offdiag {cert.offdiag} != (3^c-1)/2 = {g}")
    if (cert.tree.a, cert.tree.b) != (cert.a, cert.b):
        problems.append("root bidegree does not match the certificate")

    def walk(node: ZcNode, path: str):
        if node.a == node.b:
            problems.append(f"{path}: node with a = b")
        if node.kind == "leaf":
            expected = {(1, 0): "psi", (0, 1): "psi^-1"}.get((node.a, node.b))
            if expected is None:
                problems.append(f"{path}: leaf of bidegree ({node.a},{node.b})")
            elif node.automorphism != expected:
                problems.append(f"{path}: leaf automorphism {node.automorphism!r}, expected {expected!r}")
            if node.genus != g:
                problems.append(f"{path}: leaf genus {node.genus}, expected {g}")
            if node.children:
                problems.append(f"{path}: leaf with children")
            return
        if node.kind != "combine" or len(node.children) != 2:
            problems.append(f"{path}: internal node must combine exactly two children")
            return
        x, y = node.children
        if (x.a + y.a, x.b + y.b) != (node.a, node.b):
            problems.append(f"{path}: children bidegrees do not add up")
        if node.b == 0:
            if (x.a, x.b) != (1, 0) or (y.a, y.b) != (node.a - 1, 0):
                problems.append(f"{path}: b = 0 step must combine (1,0) with (a-1,0)")
        elif (x.a, x.b) != (0, 1) or (y.a, y.b) != (node.a, node.b - 1):
            problems.append(f"{path}: b >= 1 step must combine (0,1) with (a,b-1)")
        for i, ch in enumerate(node.children):
            walk(ch, f"{path}/{i}")

    walk(cert.tree, "root")
    return problems
