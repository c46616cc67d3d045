"""Independent oracles and random target generators shared by the tests."""

from __future__ import annotations

import itertools
import random
from typing import Optional

from hodge_forge import constructor as cs
from hodge_forge import diamond as dm
from hodge_forge.cohomology import ProductSpace, bidegree, letters
from hodge_forge.groups import GeneratedGroup, act


def brute_hodge(genera) -> list[list[int]]:
    """Hodge numbers of a product of curves by enumerating every letter tuple."""
    k = len(genera)
    h = [[0] * (k + 1) for _ in range(k + 1)]
    for m in itertools.product(*(letters(g) for g in genera)):
        p, q = bidegree(m)
        h[p][q] += 1
    return h


def orbit_invariant_dims(space: ProductSpace, group: GeneratedGroup) -> dict[tuple[int, int], int]:
    """Invariant dimensions of a monomial representation via orbits.

    A monomial orbit supports an invariant exactly when every stabilizer
    element fixes the representative with scalar 1.
    """
    from hodge_forge.cohomology import basis

    out = {}
    for p in range(space.k + 1):
        for q in range(space.k + 1):
            seen = set()
            count = 0
            for m in basis(space, p, q):
                if m in seen:
                    continue
                ok = True
                for e in group.elements:
                    s, m2 = act(e, m)
                    seen.add(m2)
                    if m2 == m and s.e != 0:
                        ok = False
                count += ok
            if count:
                out[(p, q)] = count
    return out


def from_primitive(n: int, l: dict) -> dm.TruncatedDiamond:
    """Truncated diamond with primitive numbers ``l[(p, q)]`` (zero when absent)."""
    h = [[None] * (n + 1) for _ in range(n + 1)]
    for p in range(n + 1):
        for q in range(n + 1):
            if p + q < n:
                h[p][q] = sum(l.get((p - t, q - t), 0) for t in range(min(p, q) + 1))
    for p in range(n + 1):
        for q in range(n + 1):
            if p + q > n:
                h[p][q] = h[n - p][n - q]
    return dm.TruncatedDiamond(n, h)


def random_truncated(n: int, rng: random.Random, mode: Optional[str] = None, spread: int = 4) -> dm.TruncatedDiamond:
    """A truncated diamond the planner promises to realize."""
    mode = mode or rng.choice(["point", "single", "pair"])
    l = {(0, 0): 1}
    if mode == "single":
        k0 = rng.randint(1, n - 1)
        l[(k0, 0)] = l[(0, k0)] = rng.randint(1, spread)
    elif mode == "pair":
        for k in (n - 2, n - 1):
            if k >= 1:
                l[(k, 0)] = l[(0, k)] = rng.randint(1, spread)
    outer = [k for k in range(1, n) if l.get((k, 0))]
    for a, b in cs.block_family(n):
        if a != b:
            l[(a, b)] = l[(b, a)] = rng.randint(0, spread)
    for p in range(1, (n - 1) // 2 + 1):
        if len(outer) == 0:
            c = cs.c1_value(p, n, 0)
        elif len(outer) == 1:
            c = cs.c1_value(p, n, outer[0])
        else:
            c = cs.c2_value(p, n)
        l[(p, p)] = c + rng.randint(0, spread)
    return from_primitive(n, l)


def random_weight_target(rng: random.Random) -> tuple[int, list[int], int]:
    k = rng.randint(1, 5)
    n = rng.randint(k + 1, 6)
    half = [rng.randint(0, 5) for _ in range(k // 2 + 1)]
    row = half + half[: (k + 1) // 2][::-1]
    if k % 2 == 0:
        row[k // 2] = cs.weight_floor(k // 2) + rng.randint(0, 6)
    return k, row, n


def random_betti(n: int, rng: random.Random) -> dm.BettiVector:
    """Feasible Betti data: Lefschetz-monotone, even odd-degree entries, thresholds met."""
    b = [0] * (2 * n + 1)
    b[0] = 1
    b[1] = 2 * rng.randint(0, 3)
    outer = [1] if b[1] else []
    for k in range(1, n):
        if 2 * k < n:
            c = cs.c1_value(k, n, outer[0]) if outer else cs.c1_value(k, n, 0)
            b[2 * k] = b[2 * k - 2] + c + rng.randint(0, 5)
        if 2 * k + 1 < n:
            b[2 * k + 1] = b[2 * k - 1] + 2 * rng.randint(0, 3)
    for k in range(n + 1, 2 * n + 1):
        b[k] = b[2 * n - k]
    b[n] = b[n - 2] if n >= 2 else 1
    return dm.BettiVector(n, tuple(b))


def truncated_of(ev_diamond, n: int) -> list[list]:
    return [[None if p + q == n else ev_diamond.h[p][q] for q in range(n + 1)] for p in range(n + 1)]
