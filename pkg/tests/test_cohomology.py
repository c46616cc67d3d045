from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hodge_forge.cohomology import ProductSpace, basis, bidegree, hodge_numbers
from oracles import brute_hodge


def test_single_curve_basis():
    sp = ProductSpace((2,))
    assert len(basis(sp, 1, 0)) == 2
    assert len(basis(sp, 1, 1)) == 1
    assert len(basis(sp, 0, 0)) == 1


def test_frozen_counts():
    # C_1^2 at (1,1): W x 1, 1 x W, w x wbar, wbar x w
    assert len(basis(ProductSpace.power(1, 2), 1, 1)) == 4
    assert len(basis(ProductSpace.power(1, 2), 1, 1)) == hodge_numbers(ProductSpace.power(1, 2)).h[1][1]
    assert hodge_numbers(ProductSpace((2, 3))).h[1][1] == 2 + 2 * 6


def test_modulus():
    assert ProductSpace((1,)).modulus == 6
    assert ProductSpace((0, 2)).modulus == 10
    assert ProductSpace((1, 2)).modulus == 30


def test_out_of_range():
    with pytest.raises(ValueError):
        basis(ProductSpace((1,)), 2, 0)
    with pytest.raises(ValueError):
        ProductSpace((-1,))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=1, max_size=4))
def test_basis_count_matches_kunneth(genera):
    sp = ProductSpace(tuple(genera))
    d = hodge_numbers(sp)
    brute = brute_hodge(genera)
    for p in range(sp.k + 1):
        for q in range(sp.k + 1):
            b = basis(sp, p, q)
            assert len(b) == d.h[p][q] == brute[p][q]
            assert len(set(b)) == len(b)
            assert all(bidegree(m) == (p, q) for m in b)
