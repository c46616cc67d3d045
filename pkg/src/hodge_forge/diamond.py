"""Formal Hodge diamonds and the arithmetic acting on them.

A diamond of dimension ``n`` is stored as a dense ``(n+1) x (n+1)`` table of
Python integers, ``h[p][q]``.  Nothing here uses floating point.  Invalid
tables (negative entries, broken symmetry) can be constructed on purpose so
that planners can inspect infeasible candidates; :func:`validate` is the only
gate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

__all__ = [
    "StructureError",
    "Violation",
    "FormalHodgeDiamond",
    "TruncatedDiamond",
    "PartialDiamond",
    "BettiVector",
    "PrimitiveTable",
    "validate",
    "validate_betti",
    "primitive_numbers",
    "betti_of",
    "kunneth",
    "blow_up",
    "point",
    "projective_space",
    "curve",
    "diamond_from_json",
]

Table = tuple[tuple[int, ...], ...]
OptTable = tuple[tuple[Optional[int], ...], ...]


class StructureError(ValueError):
    """Raised for malformed tables (wrong shape, missing entries)."""


def _freeze(rows: Iterable[Iterable]) -> tuple:
    return tuple(tuple(r) for r in rows)


def _check_square(n: int, h: Sequence[Sequence]) -> None:
    if n < 0:
        raise StructureError(f"dimension must be >= 0, got {n}")
    if len(h) != n + 1 or any(len(row) != n + 1 for row in h):
        raise StructureError(f"table must be {n + 1}x{n + 1}")


@dataclass(frozen=True)
class FormalHodgeDiamond:
    n: int
    h: Table

    def __post_init__(self):
        _check_square(self.n, self.h)
        object.__setattr__(self, "h", _freeze(self.h))
        for row in self.h:
            for x in row:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise StructureError(f"entries must be integers, got {x!r}")

    def __getitem__(self, pq: tuple[int, int]) -> int:
        p, q = pq
        if 0 <= p <= self.n and 0 <= q <= self.n:
            return self.h[p][q]
        return 0

    def row(self, k: int) -> list[int]:
        """Hodge numbers ``h^{k,0}, h^{k-1,1}, ..., h^{0,k}`` of weight ``k``."""
        return [self[k - i, i] for i in range(k + 1)]

    def truncated(self) -> "TruncatedDiamond":
        return TruncatedDiamond(
            self.n,
            [[None if p + q == self.n else self.h[p][q] for q in range(self.n + 1)]
             for p in range(self.n + 1)],
        )

    def euler(self) -> int:
        return sum((-1) ** (p + q) * self.h[p][q]
                   for p in range(self.n + 1) for q in range(self.n + 1))

    def to_json(self) -> dict:
        return {"n": self.n, "h": [list(r) for r in self.h]}

    def pretty(self) -> str:
        return _pretty(self.n, self.h)


@dataclass(frozen=True)
class TruncatedDiamond:
    """A diamond whose middle row ``p + q = n`` is absent (stored as ``None``)."""

    n: int
    h: OptTable

    def __post_init__(self):
        _check_square(self.n, self.h)
        object.__setattr__(self, "h", _freeze(self.h))
        for p in range(self.n + 1):
            for q in range(self.n + 1):
                x = self.h[p][q]
                if p + q == self.n:
                    if x is not None:
                        raise StructureError("middle row of a truncated diamond must be absent")
                elif x is None:
                    raise StructureError(f"missing entry at ({p},{q})")

    def __getitem__(self, pq: tuple[int, int]) -> Optional[int]:
        p, q = pq
        if 0 <= p <= self.n and 0 <= q <= self.n:
            return self.h[p][q]
        return 0

    def row(self, k: int) -> list[Optional[int]]:
        return [self[k - i, i] for i in range(k + 1)]

    def to_json(self) -> dict:
        return {"n": self.n, "h": [list(r) for r in self.h]}

    def pretty(self) -> str:
        return _pretty(self.n, self.h)


@dataclass(frozen=True)
class PartialDiamond:
    """A diamond where any entry may be undetermined (``None``).

    Produced by recipe evaluation: the key construction controls cohomology
    below the middle degree only, and products with projective space can push
    the unknown middle row into other rows.
    """

    n: int
    h: OptTable

    def __post_init__(self):
        _check_square(self.n, self.h)
        object.__setattr__(self, "h", _freeze(self.h))

    def __getitem__(self, pq: tuple[int, int]) -> Optional[int]:
        p, q = pq
        if 0 <= p <= self.n and 0 <= q <= self.n:
            return self.h[p][q]
        return 0

    def row(self, k: int) -> list[Optional[int]]:
        return [self[k - i, i] for i in range(k + 1)]

    def known_rows(self) -> list[int]:
        return [k for k in range(2 * self.n + 1) if None not in self.row(k)]

    def truncated(self) -> TruncatedDiamond:
        return TruncatedDiamond(
            self.n,
            [[None if p + q == self.n else self.h[p][q] for q in range(self.n + 1)]
             for p in range(self.n + 1)],
        )

    def full(self) -> FormalHodgeDiamond:
        if any(x is None for row in self.h for x in row):
            raise StructureError("diamond has undetermined entries")
        return FormalHodgeDiamond(self.n, self.h)

    def to_json(self) -> dict:
        return {"n": self.n, "h": [list(r) for r in self.h]}

    def pretty(self) -> str:
        return _pretty(self.n, self.h)


AnyDiamond = Union[FormalHodgeDiamond, TruncatedDiamond, PartialDiamond]


@dataclass(frozen=True)
class BettiVector:
    n: int
    b: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(self.b))
        if len(self.b) != 2 * self.n + 1:
            raise StructureError(f"expected {2 * self.n + 1} Betti numbers, got {len(self.b)}")

    def to_json(self) -> dict:
        return {"n": self.n, "b": list(self.b)}


@dataclass(frozen=True)
class PrimitiveTable:
    """Primitive numbers ``l[p][q] = h[p][q] - h[p-1][q-1]`` for ``p + q <= bound``."""

    n: int
    bound: int
    l: OptTable

    def __getitem__(self, pq: tuple[int, int]) -> int:
        p, q = pq
        if p < 0 or q < 0 or p + q > self.bound or p > self.n or q > self.n:
            return 0
        return self.l[p][q]

    def to_json(self) -> dict:
        return {"n": self.n, "bound": self.bound, "l": [list(r) for r in self.l]}


@dataclass(frozen=True)
class Violation:
    predicate: str
    site: tuple[int, int]
    detail: str

    def to_json(self) -> dict:
        return {"predicate": self.predicate, "site": list(self.site), "detail": self.detail}


def _pretty(n: int, h) -> str:
    cells = [[("?" if h[p][q] is None else str(h[p][q])) for q in range(n + 1)] for p in range(n + 1)]
    width = max(len(c) for row in cells for c in row) + 1
    lines = []
    for k in range(2 * n, -1, -1):
        entries = [cells[p][k - p] for p in range(n, -1, -1) if 0 <= k - p <= n]
        pad = abs(n - k) * width
        lines.append(" " * pad + "".join(e.center(2 * width) for e in entries))
    return "\n".join(line.rstrip() for line in lines)


def validate(d: AnyDiamond) -> list[Violation]:
    """Check Hodge symmetry, the Lefschetz conditions and connectivity.

    Undetermined entries (the absent middle row of a truncated diamond, or
    ``None`` in a partial one) are skipped.  Returns an empty list iff every
    checkable predicate holds.
    """
    n, h = d.n, d.h
    _check_square(n, h)
    out: list[Violation] = []

    def at(p, q):
        return h[p][q]

    for p in range(n + 1):
        for q in range(n + 1):
            x = at(p, q)
            if x is None:
                continue
            if x < 0:
                out.append(Violation("natural", (p, q), f"h^{{{p},{q}}}={x} < 0"))
            y = at(q, p)
            if y is not None and p < q and x != y:
                out.append(Violation("hodge-symmetry", (p, q), f"h^{{{p},{q}}}={x} != h^{{{q},{p}}}={y}"))
            z = at(n - p, n - q)
            if z is not None and (p, q) < (n - p, n - q) and x != z:
                out.append(Violation("serre-symmetry", (p, q),
                                     f"h^{{{p},{q}}}={x} != h^{{{n - p},{n - q}}}={z}"))
    for p in range(1, n + 1):
        for q in range(1, n + 1):
            if p + q > n:
                continue
            x, y = at(p, q), at(p - 1, q - 1)
            if x is None or y is None:
                continue
            if x < y:
                out.append(Violation("lefschetz", (p, q),
                                     f"h^{{{p},{q}}}={x} < h^{{{p - 1},{q - 1}}}={y}"))
    for site in ((0, 0), (n, n)):
        x = at(*site)
        if x is not None and x != 1:
            out.append(Violation("connectivity", site, f"h^{{{site[0]},{site[1]}}}={x} != 1"))
    return out


def validate_betti(b: BettiVector) -> list[Violation]:
    n, v = b.n, b.b
    out = []
    for k in (0, 2 * n):
        if v[k] != 1:
            out.append(Violation("connectivity", (k, k), f"b_{k}={v[k]} != 1"))
    for k in range(2 * n + 1):
        if v[k] < 0:
            out.append(Violation("natural", (k, k), f"b_{k} < 0"))
        if v[k] != v[2 * n - k] and k < n:
            out.append(Violation("poincare", (k, k), f"b_{k}={v[k]} != b_{2 * n - k}={v[2 * n - k]}"))
        if k % 2 and v[k] % 2:
            out.append(Violation("odd-betti-even", (k, k), f"b_{k}={v[k]} is odd"))
        if 2 <= k <= n and v[k] < v[k - 2]:
            out.append(Violation("lefschetz", (k, k), f"b_{k}={v[k]} < b_{k - 2}={v[k - 2]}"))
    return out


def primitive_numbers(d: AnyDiamond) -> PrimitiveTable:
    """Primitive Hodge numbers for ``p + q <= n`` (``< n`` for truncated input)."""
    n = d.n
    bound = n - 1 if isinstance(d, TruncatedDiamond) else n
    rows = []
    for p in range(n + 1):
        row = []
        for q in range(n + 1):
            if p + q > bound:
                row.append(None)
                continue
            x = d.h[p][q]
            y = d.h[p - 1][q - 1] if p >= 1 and q >= 1 else 0
            row.append(None if x is None or y is None else x - y)
        rows.append(tuple(row))
    return PrimitiveTable(n, bound, tuple(rows))


def betti_of(d: FormalHodgeDiamond) -> BettiVector:
    n = d.n
    return BettiVector(n, tuple(sum(d[p, k - p] for p in range(k + 1)) for k in range(2 * n + 1)))


def _opt_mul(x, y):
    if x == 0 or y == 0:
        return 0
    if x is None or y is None:
        return None
    return x * y


def _convolve(n1: int, h1, n2: int, h2) -> list[list]:
    n = n1 + n2
    out = [[0] * (n + 1) for _ in range(n + 1)]
    for p1 in range(n1 + 1):
        for q1 in range(n1 + 1):
            for p2 in range(n2 + 1):
                for q2 in range(n2 + 1):
                    term = _opt_mul(h1[p1][q1], h2[p2][q2])
                    cur = out[p1 + p2][q1 + q2]
                    out[p1 + p2][q1 + q2] = None if term is None or cur is None else cur + term
    return out


def kunneth(d1: AnyDiamond, d2: AnyDiamond):
    """Hodge numbers of a product.

    Two full diamonds give a full diamond; if either factor has undetermined
    entries the result is a :class:`PartialDiamond` with ``None`` wherever an
    unknown entry contributes.
    """
    h = _convolve(d1.n, d1.h, d2.n, d2.h)
    if isinstance(d1, FormalHodgeDiamond) and isinstance(d2, FormalHodgeDiamond):
        return FormalHodgeDiamond(d1.n + d2.n, h)
    return PartialDiamond(d1.n + d2.n, h)


def blow_up(ambient: FormalHodgeDiamond, center: FormalHodgeDiamond, r: int) -> FormalHodgeDiamond:
    """Blow up a smooth center of codimension ``r`` in ``ambient``.

    Each of the ``r - 1`` copies of the center's cohomology is shifted by
    ``(i+1, i+1)`` for ``i = 0 .. r-2``.
    """
    if r < 2:
        raise ValueError(f"invalid codimension {r}: blow-up centers need codimension >= 2")
    if center.n != ambient.n - r:
        raise ValueError(f"center has dimension {center.n}, expected {ambient.n - r}")
    n = ambient.n
    h = [list(row) for row in ambient.h]
    for i in range(r - 1):
        for p in range(center.n + 1):
            for q in range(center.n + 1):
                h[p + i + 1][q + i + 1] += center.h[p][q]
    return FormalHodgeDiamond(n, h)


def point() -> FormalHodgeDiamond:
    return FormalHodgeDiamond(0, [[1]])


def projective_space(n: int) -> FormalHodgeDiamond:
    return FormalHodgeDiamond(n, [[int(p == q) for q in range(n + 1)] for p in range(n + 1)])


def curve(g: int) -> FormalHodgeDiamond:
    return FormalHodgeDiamond(1, [[1, g], [g, 1]])


def diamond_from_json(obj: dict) -> AnyDiamond:
    """Parse ``{"n": int, "h": [[...]]}``; ``null`` entries mark a truncated diamond."""
    try:
        n = obj["n"]
        h = obj["h"]
    except (KeyError, TypeError) as exc:
        raise StructureError(f"expected keys 'n' and 'h': {exc}") from None
    if not isinstance(n, int):
        raise StructureError("'n' must be an integer")
    if not isinstance(h, list) or any(not isinstance(r, list) for r in h):
        raise StructureError("'h' must be a list of lists")
    _check_square(n, h)
    if any(x is None for row in h for x in row):
        return TruncatedDiamond(n, h)
    return FormalHodgeDiamond(n, h)
