from __future__ import annotations

from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hodge_forge.cohomology import ProductSpace, basis
from hodge_forge.groups import (
    Explicit,
    Gabg,
    GroupElement,
    Product,
    ResourceCapExceeded,
    Weight2,
    act,
    close,
    group_spec_from_json,
)

# Hand count: (2g+1)^(a+b-1) * (2^(a-1) a!) * (2^(b-1) b!) * (2 if a == b), with 2^(-1) 0! read as 1.
FROZEN_ORDERS = {(2, 0, 1): 12, (2, 1, 1): 36, (1, 1, 1): 6, (3, 0, 1): 216, (2, 2, 1): 864}


@pytest.mark.parametrize("abg,order", sorted(FROZEN_ORDERS.items()))
def test_gabg_orders(abg, order):
    spec = Gabg(*abg)
    assert close(spec.generators(), spec.space().genera).order == order


def test_weight2_orders():
    assert close(Weight2(2, 2, 1).generators(), Weight2(2, 2, 1).space().genera).order == 432
    assert close(Weight2(2, 2, 2).generators(), Weight2(2, 2, 2).space().genera).order == 2000


def test_cap():
    spec = Gabg(3, 0, 1)
    with pytest.raises(ResourceCapExceeded):
        close(spec.generators(), spec.space().genera, cap=100)


def test_bad_specs():
    with pytest.raises(ValueError):
        Gabg(1, 2, 0)
    with pytest.raises(ValueError):
        GroupElement((1, 2), (1, 0), (0, 0), (0, 0))
    with pytest.raises(ValueError):
        group_spec_from_json({"kind": "nope"})


def test_json_roundtrip():
    for spec in (Gabg(2, 1, 3), Weight2(2, 2, 1),
                 Product((Gabg(2, 0, 1), Gabg(1, 0, 2))),
                 Explicit((1, 1), (GroupElement((1, 1), (1, 0), (1, 2), (1, 0)),))):
        assert group_spec_from_json(spec.to_json()) == spec


def test_koszul_sign_of_swap():
    # swapping two holomorphic one-forms picks up -1
    genera = (1, 1)
    swap = GroupElement(genera, (1, 0), (0, 0), (0, 0))
    w = (1, 1)
    s, m = act(swap, (w, w))
    assert m == (w, w) and s.e == s.m // 2
    s, m = act(swap, ((3, 0), (3, 0)))
    assert s.e == 0


def elements(genera):
    k = len(genera)
    return st.builds(
        lambda perm, psi, inv: GroupElement(genera, tuple(perm), tuple(psi), tuple(inv)),
        st.permutations(range(k)),
        st.lists(st.integers(0, 20), min_size=k, max_size=k),
        st.lists(st.integers(0, 1), min_size=k, max_size=k),
    )


GEN = (2, 2, 2)


@settings(max_examples=60, deadline=None)
@given(elements(GEN), elements(GEN), elements(GEN))
def test_group_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert (x * x.inverse()).is_identity()
    assert (x.inverse() * x).is_identity()


@settings(max_examples=60, deadline=None)
@given(elements(GEN), elements(GEN), st.integers(0, 3), st.integers(0, 3), st.data())
def test_action_is_a_homomorphism(x, y, p, q, data):
    sp = ProductSpace(GEN)
    b = basis(sp, p, q)
    if not b:
        return
    m = data.draw(st.sampled_from(b))
    s1, m1 = act(y, m)
    s2, m2 = act(x, m1)
    s, mm = act(x * y, m)
    assert mm == m2
    assert s == s1 * s2


def hand_order(a, b, g):
    s = lambda x: 1 if x == 0 else 2 ** (x - 1) * factorial(x)  # noqa: E731
    return (2 * g + 1) ** (a + b - 1) * s(a) * s(b) * (2 if a == b else 1)


@pytest.mark.parametrize("abg", [(1, 0, 2), (2, 0, 2), (2, 1, 2), (3, 1, 1), (1, 1, 3), (3, 0, 0)])
def test_order_formula(abg):
    spec = Gabg(*abg)
    assert close(spec.generators(), spec.space().genera).order == hand_order(*abg)
