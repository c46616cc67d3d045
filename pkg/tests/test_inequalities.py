from __future__ import annotations

import itertools
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hodge_forge import diamond as dm
from hodge_forge import inequalities as iq


def test_surface_examples():
    # P^2, a K3 surface, an abelian surface, a surface of general type with p_g = q = 0
    assert iq.surface_check(iq.SurfaceData(0, 0, 1)).ok
    assert iq.surface_check(iq.SurfaceData(0, 1, 20)).ok
    assert iq.surface_check(iq.SurfaceData(2, 1, 4)).ok
    r = iq.surface_check(iq.SurfaceData(0, 3, 3))
    assert r.status_of("h20-below-h11") == "fail" and not r.ok
    # K3 Chern numbers: c2 = 24, c1^2 = 0
    d = iq.SurfaceData(0, 1, 20)
    assert d.c2 == 24 and d.c1_sq == 0


def test_fano_branch():
    accepted = {h21 for h21 in range(0, 200)
                if iq.threefold_check(iq.ThreefoldData(0, 0, 0, 1, h21)).ok}
    assert accepted == {0, 2, 3, 5, 7, 10, 14, 20, 21, 30, 52}


def test_threefold_branches():
    assert iq.threefold_check(iq.ThreefoldData(0, 0, 1, 1, 101)).branch == "numerically trivial canonical class"
    assert not iq.threefold_check(iq.ThreefoldData(0, 1, 1, 1, 101)).ok
    r = iq.threefold_check(iq.ThreefoldData(0, 0, 5, 1, 10))
    assert r.branch == "ample canonical class"
    assert {x.rule for x in r.rules} >= {"chern-ample", "hodge-form", "hodge-form-rederived", "coarse-h21"}
    assert iq.threefold_check(iq.ThreefoldData(0, 0, 0, 2, 999)).ok


def test_threefold_chern_consistency():
    d = iq.ThreefoldData(0, 0, 1, 1, 101)
    assert d.c3 == -200 and d.chi_o == 0
    good = iq.ThreefoldData(0, 0, 1, 1, 101, chern={"c1c2": 0, "c3": -200})
    assert iq.threefold_check(good).ok
    bad = iq.ThreefoldData(0, 0, 1, 1, 101, chern={"c1c2": 24})
    assert iq.threefold_check(bad).status_of("riemann-roch") == "fail"


def test_exact_constants():
    assert (iq.C1C2_FACTOR, iq.C3_FACTOR) == (1748588, 3)
    assert (iq.HODGE_FORM_LHS, iq.HODGE_FORM_RHS) == (6994346, 6994349)
    assert iq.COARSE_H21 == 12 ** 6


def test_rederived_constants_follow_from_chern_form():
    # c1c2 = 24 chi(O) = -24 (h30 - 1 - h20) for h10 = 0; c3 = 2 (2 + 2 h20 - h30 - h21) with h11 = 1.
    # 1748588 * c1c2 <= 3 * c3  <=>  REDERIVED_LHS (1+h20) + h21 <= REDERIVED_RHS h30, up to the factor 6.
    for h20, h30, h21 in itertools.product(range(3), range(2, 5), (0, 10**7, 2 * 10**7)):
        c1c2 = 24 * (1 + h20 - h30)
        c3 = 2 * (2 + 2 * h20 - h30 - h21)
        chern = 1748588 * c1c2 <= 3 * c3
        form = iq.REDERIVED_LHS * (1 + h20) + h21 <= iq.REDERIVED_RHS * h30
        assert chern == form


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 50), st.integers(2, 10**4), st.integers(0, 10**11))
def test_printed_hodge_form_implies_coarse(h20, h30, h21):
    lhs = iq.HODGE_FORM_LHS * (1 + h20) + 3 * h21
    if lhs <= iq.HODGE_FORM_RHS * h30:
        assert h21 < iq.COARSE_H21 * h30


def fourfold_strategy():
    nat = st.integers(0, 30)
    return st.builds(iq.FourfoldData, nat, nat, nat, nat, st.integers(1, 30), nat, nat, nat)


def chi_by_definition(d):
    h = {(1, 0): d.h10, (2, 0): d.h20, (3, 0): d.h30, (4, 0): d.h40, (1, 1): d.h11,
         (2, 1): d.h21, (3, 1): d.h31, (2, 2): d.h22, (0, 0): 1}

    def get(p, q):
        if p < q:
            p, q = q, p
        if p + q > 4:
            p, q = 4 - q, 4 - p
        return h[(p, q)]

    return [sum((-1) ** q * get(p, q) for q in range(5)) for p in range(5)]


@settings(max_examples=200, deadline=None)
@given(fourfold_strategy())
def test_fourfold_chi_and_euler(d):
    assert list(d.chi) == chi_by_definition(d)
    b = [0] * 9
    full = {}
    for p in range(5):
        for q in range(5):
            a, c = (p, q) if p >= q else (q, p)
            if a + c > 4:
                a, c = 4 - c, 4 - a
            full[(p, q)] = {(1, 0): d.h10, (2, 0): d.h20, (3, 0): d.h30, (4, 0): d.h40, (1, 1): d.h11,
                            (2, 1): d.h21, (3, 1): d.h31, (2, 2): d.h22, (0, 0): 1}[(a, c)]
            b[p + q] += full[(p, q)]
    assert d.c4 == sum((-1) ** k * x for k, x in enumerate(b))


def test_fourfold_k_trivial_residual_and_chern_bound():
    zero = iq.FourfoldData(0, 0, 0, 0, 1, 0, 0, 0, canonical="trivial")
    assert zero.k_trivial_residual() == 52
    assert zero.chern_bound_lhs() == 224
    rep = iq.fourfold_check(zero)
    assert rep.status_of("k-trivial-identity") == "fail"
    assert rep.status_of("chern-bound") == "pass"


def test_fourfold_hyperkahler_example():
    # a hyper-Kahler fourfold of K3^[2] type has h11 = 21, which takes it out of the h11 = 1 branch
    d = iq.FourfoldData(0, 1, 0, 1, 21, 0, 21, 232, canonical="trivial")
    rep = iq.fourfold_check(d)
    assert d.c4 == 324
    assert rep.status_of("libgober-wood") == "pass"


def test_hypersurfaces():
    assert iq.hypersurface_hodge(3, 5).row(3) == [1, 101, 101, 1]
    assert iq.primitive_middle(2, 3) == [0, 6, 0]
    assert iq.hypersurface_hodge(2, 3).row(2) == [0, 7, 0]
    assert iq.hypersurface_hodge(1, 3).row(1) == [1, 1]
    assert iq.hypersurface_hodge(2, 2).row(2) == [0, 2, 0]
    assert iq.hypersurface_hodge(2, 4).row(2) == [1, 20, 1]


@pytest.mark.parametrize("n,d", [(1, 2), (1, 5), (2, 4), (2, 6), (3, 3), (3, 6), (4, 3), (4, 4)])
def test_hypersurface_euler_number(n, d):
    # chi = ((1-d)^{n+2} - 1)/d + n + 2, from the normal bundle sequence
    chi = ((1 - d) ** (n + 2) - 1) // d + n + 2
    assert iq.hypersurface_hodge(n, d).euler() == chi
    assert dm.validate(iq.hypersurface_hodge(n, d)) == []


def test_curve_genus():
    for d in range(2, 9):
        assert iq.hypersurface_hodge(1, d)[1, 0] == comb(d - 1, 2)


def test_product_primitive():
    assert iq.product_primitive(4, 3, 5) == [1, 0, 1, 204, 0]
    assert iq.product_primitive(2, 2, 2) == [1, 0, 1]


def test_normalize_and_trivial():
    assert iq.normalize(3, (1, 2), (0, 3)) == ((2, 1), (3, 0))
    assert iq.dominates(3, (1, 1), (0, 0)).tag == "trivial"
    assert iq.dominates(4, (2, 2), (1, 1)).tag == "trivial"
    with pytest.raises(ValueError):
        iq.counterexample_family(2, (1, 1), (2, 0), 1)


def test_only_surface_domination_holds():
    for n in range(2, 7):
        pairs = [(a, b) for a in range(n + 1) for b in range(n + 1)]
        for rs in pairs:
            for pq in pairs:
                d = iq.dominates(n, rs, pq)
                if d.dominates:
                    assert (n, d.rs, d.pq) == (2, (1, 1), (2, 0))
                assert d.tag
