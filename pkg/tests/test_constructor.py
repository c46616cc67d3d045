from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hodge_forge import constructor as cs
from hodge_forge import diamond as dm
from hodge_forge.invariants import closed_form
from oracles import from_primitive, random_betti, random_truncated, truncated_of


def test_key_construction_point_i0():
    # no blocks, i0 a point: only l(0,0)
    prim = cs.key_construction(None, [], 3)
    assert prim[0, 0] == 1 and prim[1, 1] == 0 and prim[1, 0] == 0


def test_key_construction_shifts_blocks():
    prim = cs.key_construction(closed_form(2, 0, 3), [closed_form(1, 0, 5)], 4)
    # block contributes at (p+1, q+1): (1,0) of G(1,0,5) is 5 -> l(2,1) = 5
    assert prim[2, 1] == 5
    assert prim[2, 0] == 3
    assert prim[1, 1] == 1 + 1


def test_integrate_blowups():
    prim = cs.key_construction(None, [], 3)
    t = cs.integrate(prim, 4)
    assert t.h[1][1] == 5 and t.h[2][2] == 5
    assert cs.integrate(cs.key_construction(None, [], 2), 4).h[0][0] == 1


def test_recipe_json_roundtrip():
    r = cs.plan_weight_k(3, [1, 2, 2, 1], 5)
    assert cs.recipe_from_json(r.to_json()) == r
    assert "assumptions" in r.to_json()["i0"]


def test_weight_floor_values():
    # m*floor((m+3)/2) + floor(m/2)^2, hand-evaluated
    assert [cs.weight_floor(m) for m in range(1, 11)] == [2, 5, 10, 16, 24, 33, 44, 56, 70, 85]


def test_weight_planner_infeasible():
    assert isinstance(cs.plan_weight_k(2, [0, 1, 0], 3), cs.Infeasible)
    assert isinstance(cs.plan_weight_k(2, [1, 3, 2], 3), cs.Infeasible)
    assert isinstance(cs.plan_weight_k(3, [1, 2, 2, 1], 3), cs.Infeasible)


def test_middle_weight_small():
    r = cs.plan_middle_weight([0, 0], 1)
    assert cs.evaluate(r).full() == dm.projective_space(1)
    r = cs.plan_middle_weight([0, 6, 0], 2)
    d = cs.evaluate(r).full()
    assert d.h[1][1] == 6
    r = cs.plan_middle_weight([0, 4, 4, 0], 3)
    ev = cs.evaluate(r)
    assert ev.diamond.row(3) == [0, 4, 4, 0]
    assert isinstance(cs.plan_middle_weight([0, 3, 3, 0], 3), cs.Infeasible)
    assert isinstance(cs.plan_middle_weight([1, 4, 4, 1], 3), cs.Infeasible)


def test_middle_weight_matches_product_with_line():
    # the planner output must agree with Y x P^1 computed by kunneth
    inner = cs.plan_weight_k(2, [1, 5, 1], 3)
    y = cs.evaluate(inner).diamond
    r = cs.plan_middle_weight([0, 2, 10, 2, 0], 4)
    ev = cs.evaluate(r)
    prod = dm.kunneth(y, dm.projective_space(1))
    assert ev.diamond.row(4) == [0, 2, 10, 2, 0]
    assert ev.diamond.row(4) == prod.row(4)


def test_blown_up_projective_special_case():
    t = dm.blow_up(dm.projective_space(4), dm.point(), 4).truncated()
    r = cs.plan_truncated(t)
    assert r.base == "projective" and r.point_blowups == 1
    assert dm.PartialDiamond(4, truncated_of(cs.evaluate(r).diamond, 4)).h == t.h


def test_truncated_infeasible_reasons():
    n = 5
    base = {(0, 0): 1, (1, 1): cs.c1_value(1, n, 0), (2, 2): cs.c1_value(2, n, 0)}
    ok = from_primitive(n, base)
    assert not isinstance(cs.plan_truncated(ok), cs.Infeasible)
    low = from_primitive(n, {**base, (2, 2): base[(2, 2)] - 1})
    res = cs.plan_truncated(low)
    assert isinstance(res, cs.Infeasible) and res.reason == "l^{p,p} below threshold"
    assert res.detail["p"] == 2
    two_outer = {**base, (1, 0): 1, (0, 1): 1, (2, 0): 1, (0, 2): 1}
    res = cs.plan_truncated(from_primitive(n, two_outer))
    assert isinstance(res, cs.Infeasible) and res.reason == "outer pattern"
    bad = dm.TruncatedDiamond(2, [[1, 1, None], [0, None, 0], [None, 0, 1]])
    assert cs.plan_truncated(bad).reason == "invalid diamond"


def test_planner_constants_frozen():
    # n=5: block family (2,1),(3,1),(2,2); hand evaluation of the excesses
    pc = cs.planner_constants(1, 5)
    assert pc.c1_max == 4 and pc.c2 == 5 and pc.c == 5
    with pytest.raises(ValueError):
        cs.planner_constants(2, 4)


def test_zc_certificates():
    for c in range(1, 9):
        cert = cs.zc_certificate(3, 1, c, 5)
        assert cert.offdiag == sum(3 ** i for i in range(c))
        assert cs.validate_certificate(cert) == []
        assert cert.hodge(3, 1) == cert.offdiag and cert.hodge(2, 2) is None
        assert cert.hodge(4, 2) == cert.offdiag  # Lefschetz push-up into P^1 factor
        assert len(cert.tree.leaves()) == 4


def test_zc_certificate_detects_tampering():
    cert = cs.zc_certificate(2, 1, 2, 3)
    bad = cs.ZcCertificate(cert.a, cert.b, cert.c, cert.n, cert.tree, cert.offdiag + 1)
    assert cs.validate_certificate(bad)
    leaf = cs.ZcNode(1, 0, "leaf", "psi^-1", cert.offdiag)
    bad_tree = cs.ZcNode(2, 0, "combine", children=(leaf, cs.ZcNode(1, 0, "leaf", "psi", cert.offdiag)))
    root = cs.ZcNode(2, 1, "combine", children=(cs.ZcNode(0, 1, "leaf", "psi^-1", cert.offdiag), bad_tree))
    assert cs.validate_certificate(cs.ZcCertificate(2, 1, 2, 3, root, cert.offdiag))


@settings(max_examples=30, deadline=None)
@given(st.integers(3, 7), st.sampled_from(["point", "single", "pair"]), st.integers(0, 10**6))
def test_truncated_roundtrip(n, mode, seed):
    t = random_truncated(n, random.Random(seed), mode)
    r = cs.plan_truncated(t)
    assert not isinstance(r, cs.Infeasible), r
    assert truncated_of(cs.evaluate(r).diamond, n) == [list(x) for x in t.h]
    assert cs.recipe_from_json(r.to_json()) == r


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([3, 4, 5, 6]), st.integers(0, 10**6))
def test_betti_roundtrip(n, seed):
    b = random_betti(n, random.Random(seed))
    r = cs.plan_betti(b)
    assert not isinstance(r, cs.Infeasible), r
    ev = cs.evaluate(r).diamond
    for k in range(2 * n + 1):
        if k != n:
            assert sum(ev[p, k - p] for p in range(k + 1)) == b.b[k]


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 40))
def test_constants_bounds(n):
    for p in range(1, (n - 1) // 2 + 1):
        for lhs, rhs in cs.planner_constants(p, n).bounds().values():
            assert lhs <= rhs


def test_betti_of_projective_space():
    r = cs.plan_betti(dm.BettiVector(4, (1, 0, 1, 0, 1, 0, 1, 0, 1)))
    assert r.base == "projective" and r.point_blowups == 0


def test_betti_middle_entry_ignored():
    # n=4, b = (1, 0, t, 2, *, 2, t, 0, 1) with t large
    t = 40
    for mid in (0, 7, 41):
        b = dm.BettiVector(4, (1, 0, t, 2, mid, 2, t, 0, 1))
        r = cs.plan_betti(b)
        assert not isinstance(r, cs.Infeasible), r
        d = cs.evaluate(r).diamond
        for k in range(9):
            if k != 4:
                assert sum(d[p, k - p] for p in range(k + 1)) == b.b[k]


def test_betti_infeasible_names_k():
    n = 6
    b2 = 1 + cs.c1_value(1, n, 0)
    b4 = b2 + cs.c1_value(2, n, 0) - 1
    b = dm.BettiVector(n, (1, 0, b2, 0, b4, 0, b4, 0, b4, 0, b2, 0, 1))
    res = cs.plan_betti(b)
    assert isinstance(res, cs.Infeasible) and res.detail["k"] == 4
