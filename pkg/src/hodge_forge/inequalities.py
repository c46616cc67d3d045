"""Inequality checkers, hypersurface Hodge numbers and the domination table.

All arithmetic is exact: fractional inequalities are multiplied through.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import constructor as cs
from . import diamond as dm

__all__ = [
    "Rule",
    "Report",
    "SurfaceData",
    "ThreefoldData",
    "FourfoldData",
    "surface_check",
    "threefold_check",
    "fourfold_check",
    "hypersurface_hodge",
    "product_primitive",
    "normalize",
    "dominates",
    "counterexample_family",
    "Domination",
    "Witness",
    "FANO_H21",
    "C1C2_FACTOR",
    "C3_FACTOR",
    "HODGE_FORM_LHS",
    "HODGE_FORM_RHS",
    "COARSE_H21",
]

# Three-folds with h^{1,1} = 1 and h^{3,0} = 0 (Fano three-folds of Picard rank one).
FANO_H21 = frozenset({0, 2, 3, 5, 7, 10, 14, 20, 21, 30, 52})
# Ample canonical class: 1 748 588 * c1c2 <= 3 * c3.
C1C2_FACTOR = 1748588
C3_FACTOR = 3
# Its Hodge-number form as usually quoted: 6 994 346 (1 + h20) + 3 h21 <= 6 994 349 h30.
HODGE_FORM_LHS = 6994346
HODGE_FORM_RHS = 6994349
# Direct substitution of c1c2 = 24 chi(O), c3 = 4 + 4 h20 - 2 h30 - 2 h21 into the Chern form.
REDERIVED_LHS = 6994350
REDERIVED_RHS = 6994351
# Coarse consequence: h21 < 12^6 h30.
COARSE_H21 = 12 ** 6


@dataclass(frozen=True)
class Rule:
    rule: str
    paper_anchor: str
    status: str  # "pass" | "fail" | "n/a"
    lhs: Optional[int]
    rhs: Optional[int]

    def to_json(self) -> dict:
        return {"rule": self.rule, "paper_anchor": self.paper_anchor, "status": self.status,
                "lhs": self.lhs, "rhs": self.rhs}


def _le(name, anchor, lhs, rhs) -> Rule:
    return Rule(name, anchor, "pass" if lhs <= rhs else "fail", lhs, rhs)


def _lt(name, anchor, lhs, rhs) -> Rule:
    return Rule(name, anchor, "pass" if lhs < rhs else "fail", lhs, rhs)


def _eq(name, anchor, lhs, rhs) -> Rule:
    return Rule(name, anchor, "pass" if lhs == rhs else "fail", lhs, rhs)


def _na(name, anchor, lhs=None, rhs=None) -> Rule:
    return Rule(name, anchor, "n/a", lhs, rhs)


@dataclass(frozen=True)
class Report:
    rules: tuple[Rule, ...]
    branch: str = ""
    derived: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(r.status != "fail" for r in self.rules)

    def status_of(self, name: str) -> str:
        for r in self.rules:
            if r.rule == name:
                return r.status
        raise KeyError(name)

    def to_json(self) -> dict:
        return {"branch": self.branch, "derived": self.derived, "ok": self.ok,
                "rules": [r.to_json() for r in self.rules]}


# ---------------------------------------------------------------- surfaces


@dataclass(frozen=True)
class SurfaceData:
    h10: int
    h20: int
    h11: int

    @property
    def b1(self) -> int:
        return 2 * self.h10

    @property
    def b2(self) -> int:
        return 2 * self.h20 + self.h11

    @property
    def c2(self) -> int:
        return 2 - 2 * self.b1 + self.b2

    @property
    def c1_sq(self) -> int:
        return 10 - 4 * self.b1 + 10 * self.h20 - self.h11


def surface_check(d: SurfaceData) -> Report:
    """``h^{1,1} > h^{2,0}`` for all surfaces, and the BMY inequality in Hodge-number form.

    The second rule applies to minimal surfaces of non-negative Kodaira
    dimension; there it is equivalent to ``c1^2 <= 3 c2``.
    """
    rules = (
        _lt("h20-below-h11", "h^{2,0} < h^{1,1}", d.h20, d.h11),
        _le("hodge-inequality", "1+h^{1,0}+h^{2,0} <= h^{1,1}", 1 + d.h10 + d.h20, d.h11),
        _le("bmy", "c_1^2 <= 3 c_2", d.c1_sq, 3 * d.c2),
    )
    return Report(rules, "surface", {"b1": d.b1, "b2": d.b2, "c2": d.c2, "c1^2": d.c1_sq})


# ---------------------------------------------------------------- three-folds


@dataclass(frozen=True)
class ThreefoldData:
    h10: int
    h20: int
    h30: int
    h11: int
    h21: int
    chern: Optional[dict] = None  # keys among "c1c2", "c1_3", "c3"

    @property
    def chi_o(self) -> int:
        return 1 - self.h10 + self.h20 - self.h30

    @property
    def betti(self) -> tuple[int, ...]:
        b1 = 2 * self.h10
        b2 = 2 * self.h20 + self.h11
        b3 = 2 * self.h30 + 2 * self.h21
        return (1, b1, b2, b3, b2, b1, 1)

    @property
    def c3(self) -> int:
        return sum((-1) ** k * b for k, b in enumerate(self.betti))


def threefold_check(d: ThreefoldData) -> Report:
    rules = []
    chern = d.chern or {}
    c1c2 = 24 * d.chi_o
    if "c1c2" in chern:
        rules.append(_eq("riemann-roch", "c_1c_2 = 24 chi(O_X)", chern["c1c2"], c1c2))
    if "c3" in chern:
        rules.append(_eq("euler-number", "c_3 = sum (-1)^k b_k", chern["c3"], d.c3))
    branch = "h11 != 1"
    if d.h11 == 1:
        rules.append(_eq("odd-betti-vanishing", "h^{1,0} = 0 when h^{1,1} = 1", d.h10, 0))
        rules.append(_lt("outer-bound", "h^{2,0} < max(h^{3,0}, 1)", d.h20, max(d.h30, 1)))
        if d.h30 == 0:
            branch = "anti-ample canonical class"
            rules.append(_eq("fano-h20", "h^{2,0} = 0", d.h20, 0))
            rules.append(Rule("fano-list", "h^{2,1} in {0,2,3,5,7,10,14,20,21,30,52}",
                              "pass" if d.h21 in FANO_H21 else "fail", d.h21, None))
        elif d.h30 == 1:
            branch = "numerically trivial canonical class"
            rules.append(_eq("k-trivial", "1 + h^{2,0} = h^{3,0}", 1 + d.h20, d.h30))
        else:
            branch = "ample canonical class"
            rules.append(_lt("ample-chi", "1 + h^{2,0} < h^{3,0}", 1 + d.h20, d.h30))
            rules.append(_le("chern-ample", "1748588 c_1c_2 <= 3 c_3",
                             C1C2_FACTOR * chern.get("c1c2", c1c2), C3_FACTOR * chern.get("c3", d.c3)))
            rules.append(_le("hodge-form", "6994346 (1+h^{2,0}) + 3 h^{2,1} <= 6994349 h^{3,0}",
                             HODGE_FORM_LHS * (1 + d.h20) + 3 * d.h21, HODGE_FORM_RHS * d.h30))
            rules.append(_le("hodge-form-rederived", "6994350 (1+h^{2,0}) + h^{2,1} <= 6994351 h^{3,0}",
                             REDERIVED_LHS * (1 + d.h20) + d.h21, REDERIVED_RHS * d.h30))
            rules.append(_lt("coarse-h21", "h^{2,1} < 12^6 h^{3,0}", d.h21, COARSE_H21 * d.h30))
            if "c1_3" in chern:
                rules.append(_le("yau", "8 c_1c_2 <= 3 c_1^3", 8 * chern.get("c1c2", c1c2), 3 * chern["c1_3"]))
            else:
                rules.append(_na("yau", "8 c_1c_2 <= 3 c_1^3"))
    return Report(tuple(rules), branch, {"chi(O)": d.chi_o, "c1c2": c1c2, "c3": d.c3})


# ---------------------------------------------------------------- four-folds


@dataclass(frozen=True)
class FourfoldData:
    h10: int
    h20: int
    h30: int
    h40: int
    h11: int
    h21: int
    h31: int
    h22: int
    chern: Optional[dict] = None  # keys among "c1_4", "c1_2c2", "c1c3", "c2_2", "c4"
    canonical: Optional[str] = None  # "anti-ample" | "trivial" | "ample"

    @property
    def chi(self) -> tuple[int, int, int, int, int]:
        """``(chi^0, ..., chi^4)`` with ``chi^p = sum_q (-1)^q h^{p,q}``."""
        c0 = 1 - self.h10 + self.h20 - self.h30 + self.h40
        c1 = self.h10 - self.h11 + self.h21 - self.h31 + self.h30
        c2 = 2 * self.h20 - 2 * self.h21 + self.h22
        return (c0, c1, c2, c1, c0)

    @property
    def c4(self) -> int:
        c = self.chi
        return c[0] - c[1] + c[2] - c[3] + c[4]

    def libgober_wood_rhs(self) -> int:
        c = self.chi
        return 12 * c[2] - 36 * c[3] + 72 * c[4] - 14 * self.c4

    def chern_bound_lhs(self) -> int:
        return 224 + 228 * self.h20 - 224 * self.h30 + self.h22 - 2 * self.h31 + 226 * self.h40

    def k_trivial_residual(self) -> int:
        return (52 + 40 * self.h20 - 4 * self.h21 - 2 * self.h22 - 52 * self.h30
                + 8 * self.h31 + 44 * self.h40)

    def b3_bound_k_trivial(self) -> int:
        """Upper bound for ``b_3`` forced by the Chern bound (with ``c_1 = 0``) and the K-trivial identity."""
        r = 224 + 228 * self.h20 + self.h22 + 226 * self.h40
        h30_max = r // 224
        h31_max = r // 2
        h21_max = (52 + 40 * self.h20 + 8 * h31_max + 44 * self.h40) // 4
        return 2 * h30_max + 2 * h21_max


def fourfold_check(d: FourfoldData) -> Report:
    rules = []
    chern = d.chern or {}
    chi = d.chi
    if "c4" in chern:
        rules.append(_eq("euler-number", "c_4 = sum (-1)^k b_k", chern["c4"], d.c4))
    lw_anchor = "c_1c_3 = 12 chi^2 - 36 chi^3 + 72 chi^4 - 14 c_4"
    if "c1c3" in chern:
        rules.append(_eq("libgober-wood", lw_anchor, chern["c1c3"], d.libgober_wood_rhs()))
    elif d.canonical == "trivial":
        rules.append(_eq("libgober-wood", lw_anchor, 0, d.libgober_wood_rhs()))
    else:
        rules.append(_na("libgober-wood", lw_anchor, None, d.libgober_wood_rhs()))
    rr_anchor = "720 chi^4 = -c_4 + c_1c_3 + 3 c_2^2 + 4 c_1^2c_2 - c_1^4"
    if all(k in chern for k in ("c1c3", "c2_2", "c1_2c2", "c1_4")):
        c4 = chern.get("c4", d.c4)
        lhs = -c4 + chern["c1c3"] + 3 * chern["c2_2"] + 4 * chern["c1_2c2"] - chern["c1_4"]
        rules.append(_eq("riemann-roch-chi4", rr_anchor, lhs, 720 * chi[4]))
    else:
        rules.append(_na("riemann-roch-chi4", rr_anchor))
    branch = "h11 != 1"
    if d.h11 == 1:
        branch = f"h11 = 1, canonical class {d.canonical or 'unspecified'}"
        rules.append(_eq("odd-betti-vanishing", "h^{1,0} = 0 when h^{1,1} = 1", d.h10, 0))
        bound_anchor = "3 (224+228h^{2,0}-224h^{3,0}+h^{2,2}-2h^{3,1}+226h^{4,0}) >= 4 c_1^2c_2 - c_1^4"
        if "c1_2c2" in chern and "c1_4" in chern:
            rules.append(_le("chern-bound", bound_anchor, 4 * chern["c1_2c2"] - chern["c1_4"], 3 * d.chern_bound_lhs()))
        elif d.canonical == "trivial":
            rules.append(_le("chern-bound", bound_anchor, 0, 3 * d.chern_bound_lhs()))
        else:
            rules.append(_na("chern-bound", bound_anchor, None, 3 * d.chern_bound_lhs()))
        kt_anchor = "52+40h^{2,0}-4h^{2,1}-2h^{2,2}-52h^{3,0}+8h^{3,1}+44h^{4,0} = 0"
        if d.canonical == "trivial":
            rules.append(_eq("k-trivial-identity", kt_anchor, d.k_trivial_residual(), 0))
            rules.append(_le("b3-bounded-by-b4", "b_3 bounded by h^{2,0}, h^{2,2}, h^{4,0}",
                             2 * (d.h30 + d.h21), d.b3_bound_k_trivial()))
        else:
            rules.append(_na("k-trivial-identity", kt_anchor, d.k_trivial_residual(), 0))
        if d.canonical == "ample":
            if "c1_2c2" in chern and "c1_4" in chern:
                rules.append(_le("yau", "2 c_1^4 <= 5 c_1^2c_2", 2 * chern["c1_4"], 5 * chern["c1_2c2"]))
                rules.append(_le("ample-bound", "c_1^4 <= 5 (224+228h^{2,0}-224h^{3,0}+h^{2,2}-2h^{3,1}+226h^{4,0})",
                                 chern["c1_4"], 5 * d.chern_bound_lhs()))
            else:
                rules.append(_na("yau", "2 c_1^4 <= 5 c_1^2c_2"))
    derived = {"chi": list(chi), "c4": d.c4, "libgober_wood_rhs": d.libgober_wood_rhs(),
               "k_trivial_residual": d.k_trivial_residual()}
    return Report(tuple(rules), branch, derived)


# ---------------------------------------------------------------- hypersurfaces


def _poly_pow(base: list[int], e: int) -> list[int]:
    out = [1]
    for _ in range(e):
        nxt = [0] * (len(out) + len(base) - 1)
        for i, x in enumerate(out):
            if x:
                for j, y in enumerate(base):
                    nxt[i + j] += x * y
        out = nxt
    return out


def primitive_middle(n: int, d: int) -> list[int]:
    """Primitive middle Hodge numbers ``[h^{n,0}, h^{n-1,1}, ..., h^{0,n}]`` of a degree-``d`` hypersurface."""
    poly = _poly_pow([1] * (d - 1), n + 2)
    out = []
    for q in range(n + 1):
        e = (q + 1) * d - (n + 2)
        out.append(poly[e] if 0 <= e < len(poly) else 0)
    return out


def hypersurface_hodge(n: int, d: int) -> dm.FormalHodgeDiamond:
    """Hodge diamond of a smooth degree-``d`` hypersurface in ``P^{n+1}``."""
    if n < 1 or d < 2:
        raise ValueError("need n >= 1 and d >= 2")
    prim = primitive_middle(n, d)
    h = [[int(p == q) for q in range(n + 1)] for p in range(n + 1)]
    for i in range(n + 1):
        p, q = n - i, i
        h[p][q] = prim[q] + (1 if p == q else 0)
    return dm.FormalHodgeDiamond(n, h)


def product_primitive(n: int, k: int, d: int) -> list[int]:
    """Primitive Betti numbers ``P^j = b_j - b_{j-2}``, ``j = 0..n``, of ``V_d x P^{n-k}``."""
    if not (1 <= k <= n) or d < 2:
        raise ValueError("need 1 <= k <= n and d >= 2")
    x = dm.kunneth(hypersurface_hodge(k, d), dm.projective_space(n - k))
    b = dm.betti_of(x).b
    return [b[j] - (b[j - 2] if j >= 2 else 0) for j in range(n + 1)]


# ---------------------------------------------------------------- domination


def normalize(n: int, rs: tuple[int, int], pq: tuple[int, int]) -> tuple[tuple[int, int], tuple[int, int]]:
    def norm(x):
        a, b = x
        if not (0 <= a <= n and 0 <= b <= n):
            raise ValueError(f"index {x} out of range for n={n}")
        cands = [(a, b), (b, a), (n - a, n - b), (n - b, n - a)]
        return max(c for c in cands if c[0] >= c[1] and c[0] + c[1] <= n)

    return norm(rs), norm(pq)


TRUE_TAG = "surface inequality h^{1,1} >= 1 + h^{1,0} + h^{2,0}"


@dataclass(frozen=True)
class Domination:
    n: int
    rs: tuple[int, int]
    pq: tuple[int, int]
    dominates: bool
    tag: str

    def to_json(self) -> dict:
        return {"n": self.n, "rs": list(self.rs), "pq": list(self.pq), "dominates": self.dominates,
                "justification": self.tag}


def _trivial(rs, pq) -> bool:
    r, s = rs
    p, q = pq
    return pq == (0, 0) or any((r - i, s - i) == pq for i in range(min(r, s) + 1))


def dominates(n: int, rs: tuple[int, int], pq: tuple[int, int]) -> Domination:
    """Whether ``h^{r,s}`` dominates ``h^{p,q}`` nontrivially in dimension ``n``.

    Trivial dominations (implied by symmetry and Lefschetz) are answered
    ``False`` with the tag ``"trivial"``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    (r, s), (p, q) = normalize(n, tuple(rs), tuple(pq))
    if _trivial((r, s), (p, q)):
        tag = "trivial"
    elif r + s < n:
        tag = "truncated-planner family" if p + q < n else "hypersurface family"
    elif r != s:
        tag = "point-blow-up family" if p == q else "zc-certificate family"
    elif p + q < n:
        tag = "product-with-P1 family"
    elif (p, q) != (n, 0):
        tag = "middle-weight family"
    elif r >= 2:
        tag = "product-with-curve family"
    else:
        return Domination(n, (r, s), (p, q), True, TRUE_TAG)
    return Domination(n, (r, s), (p, q), False, tag)


@dataclass(frozen=True)
class Witness:
    family: str
    j: int
    h_rs: Optional[int]  # None: not determined, but independent of j
    h_pq: int
    description: str

    def to_json(self) -> dict:
        return {"family": self.family, "j": self.j, "h_rs": self.h_rs,
                "h_rs_status": "computed" if self.h_rs is not None else "unspecified (independent of j)",
                "h_pq": self.h_pq, "description": self.description}


def _truncated_target(n: int, pq: tuple[int, int], j: int) -> dm.TruncatedDiamond:
    """Minimal feasible truncated diamond with ``l(p,q) = j`` (on top of the threshold if ``p = q``)."""
    p, q = pq
    l: dict[tuple[int, int], int] = {(0, 0): 1}
    k0 = p if (q == 0 and p >= 1) else 0
    for t in range(1, (n - 1) // 2 + 1):
        l[(t, t)] = cs.c1_value(t, n, k0)
    if p == q:
        l[(p, p)] += j
    else:
        l[(p, q)] = l[(q, p)] = j
    h = [[None] * (n + 1) for _ in range(n + 1)]
    for a in range(n + 1):
        for b in range(n + 1):
            if a + b < n:
                h[a][b] = sum(l.get((a - s, b - s), 0) for s in range(min(a, b) + 1))
    for a in range(n + 1):
        for b in range(n + 1):
            if a + b > n:
                h[a][b] = h[n - a][n - b]
    return dm.TruncatedDiamond(n, h)


def _truncated_family(n, pq, j):
    r = cs.plan_truncated(_truncated_target(n, pq, j))
    if not r.feasible:
        raise RuntimeError(f"internal: family target infeasible: {r.to_json()}")
    return cs.evaluate(r).diamond


def counterexample_family(n: int, rs: tuple[int, int], pq: tuple[int, int], j: int) -> Witness:
    """Member ``j >= 1`` of a family with ``h^{r,s}`` bounded and ``h^{p,q}`` unbounded."""
    if j < 1:
        raise ValueError("family index j must be >= 1")
    dom = dominates(n, rs, pq)
    if dom.dominates or dom.tag == "trivial":
        raise ValueError(f"no counterexample family: domination holds ({dom.tag})")
    (r, s), (p, q) = dom.rs, dom.pq
    tag = dom.tag
    if tag == "truncated-planner family":
        x = _truncated_family(n, (p, q), j)
        return Witness(tag, j, x[r, s], x[p, q], f"truncated planner with l^{{{p},{q}}} raised by {j}")
    if tag == "hypersurface family":
        deg = n + 1 + j
        x = hypersurface_hodge(n, deg)
        return Witness(tag, j, x[r, s], x[p, q], f"hypersurface of degree {deg} in P^{n + 1}")
    if tag == "point-blow-up family":
        x = cs.evaluate(cs.projective_recipe(n, j)).diamond
        return Witness(tag, j, x[r, s], x[p, q], f"P^{n} blown up in {j} points")
    if tag == "zc-certificate family":
        cert = cs.zc_certificate(p, q, j, n)
        return Witness(tag, j, cert.hodge(r, s), cert.hodge(p, q), f"Z_c certificate with c={j}")
    if tag == "product-with-P1 family":
        if p + q == n - 1:
            y = hypersurface_hodge(n - 1, n + j)
            desc = f"hypersurface of degree {n + j} in P^{n} times P^1"
        else:
            y = _truncated_family(n - 1, (p, q), j)
            desc = f"truncated planner in dimension {n - 1} times P^1"
        x = dm.kunneth(y, dm.projective_space(1))
        return Witness(tag, j, x[r, s], x[p, q], desc)
    if tag == "middle-weight family":
        target = [0] * (n + 1)
        target[n - p] = target[n - q] = 2 * j
        target[n // 2] = cs.middle_weight_floor(n // 2)
        rec = cs.plan_middle_weight(target, n)
        if not rec.feasible:
            raise RuntimeError(f"internal: family target infeasible: {rec.to_json()}")
        x = cs.evaluate(rec).diamond
        return Witness(tag, j, x[r, s], x[p, q], "middle-weight planner times P^1")
    if tag == "product-with-curve family":
        cert = cs.zc_certificate(n - 1, 0, 1, n - 1)
        h_pq = cert.hodge(n - 1, 0) * j
        return Witness(tag, j, None, h_pq, f"Z_1 certificate of dimension {n - 1} times a genus-{j} curve")
    raise AssertionError(tag)
