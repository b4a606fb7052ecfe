"""Dot arrays on hypercubes and their correspondence with simple matricubes.

A dot array places dots at points of the hypercube [0, r]^d.  The
principal subarray at x keeps the dots at or above x; the rank of the
array along axis j counts the distinct j-th coordinates among its dots.
An array is totally rankable when, at every position, all axes agree on
that count.

A permutation array is a totally rankable array of rank r + 1 none of
whose dots sits at a redundant position (one forced by the other dots).
Such arrays encode exactly the simple matricubes of rank r or r + 1 on
[r]^d via rk(x) = r + 1 - rank of the subarray at x.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .core import (
    Hypercuboid,
    Matricube,
    MatricubeError,
    Point,
    leq,
    meet_all,
)


@dataclass(frozen=True)
class DotArray:
    """Dots on the hypercube [0, r]^d."""

    r: int
    d: int
    dots: frozenset

    def __post_init__(self):
        if self.r < 0 or self.d < 0:
            raise ValueError("r and d must be nonnegative")
        cube = Hypercuboid((self.r,) * self.d)
        dots = set()
        for p in self.dots:
            p = tuple(int(a) for a in p)
            if p not in cube:
                raise ValueError(f"dot {p} outside the hypercube [0, {self.r}]^{self.d}")
            dots.add(p)
        object.__setattr__(self, "dots", frozenset(dots))

    @property
    def width(self) -> Point:
        return (self.r,) * self.d


def rank_along(P: DotArray, x: Point, j: int) -> int:
    """Distinct j-th coordinates among dots at or above x."""
    x = tuple(x)
    if not 0 <= j < P.d:
        raise ValueError(f"axis {j} out of range")
    return len({y[j] for y in P.dots if leq(x, y)})


def rankability_violation(P: DotArray):
    """First (x, i, j) where two axes disagree on the subarray at x."""
    if P.d < 2:
        return None
    cube = Hypercuboid(P.width)
    for x in cube.points():
        counts = [rank_along(P, x, j) for j in range(P.d)]
        for j in range(1, P.d):
            if counts[j] != counts[0]:
                return (x, 0, j)
    return None


def is_totally_rankable(P: DotArray) -> bool:
    return rankability_violation(P) is None


def rank_of_array(P: DotArray) -> int:
    """The common axis count at the origin; requires total rankability."""
    if P.d == 0:
        raise ValueError("rank of a zero-direction array is undefined")
    witness = rankability_violation(P)
    if witness is not None:
        raise MatricubeError(f"array is not totally rankable at {witness[0]}")
    return rank_along(P, (0,) * P.d, 0)


def redundant_positions(P: DotArray) -> frozenset:
    """Positions pinned by the dots around them.

    x is redundant when the dots y != x at or above x that share at
    least one coordinate with x number at least two and meet exactly
    at x.
    """
    cube = Hypercuboid(P.width)
    top = cube.top()
    out = []
    for x in cube.points():
        forcing = [
            y
            for y in P.dots
            if y != x and leq(x, y) and any(a == b for a, b in zip(x, y))
        ]
        if len(forcing) >= 2 and meet_all(forcing, top) == x:
            out.append(x)
    return frozenset(out)


def is_permutation_array(P: DotArray) -> bool:
    """Totally rankable, rank r + 1, and no dot at a redundant position."""
    if P.d == 0:
        return False
    if not is_totally_rankable(P):
        return False
    if rank_of_array(P) != P.r + 1:
        return False
    return not (P.dots & redundant_positions(P))


def matricube_from_permarray(P: DotArray) -> Matricube:
    """rk(x) = r + 1 - rank of the principal subarray at x.

    The result is a simple matricube on [r]^d whose global rank is r
    (the width point carries a dot) or r + 1 (it does not).
    """
    if not is_permutation_array(P):
        raise MatricubeError("not a permutation array")
    cube = Hypercuboid(P.width)
    ranks = tuple(P.r + 1 - rank_along(P, x, 0) for x in cube.points())
    return Matricube(P.width, ranks)


def permarray_from_matricube(m: Matricube) -> DotArray:
    """The permutation array whose matricube this is.

    Accepts simple matricubes on a hypercube [r]^d of global rank r or
    r + 1.  Dots start from the flats (dropping the width point when the
    rank is r + 1), and dots at positions made redundant by the others
    are removed.
    """
    from .cryptomorph import flats_of
    from .core import is_simple

    width = m.width
    if not width or any(w != width[0] for w in width):
        raise MatricubeError(f"width {width} is not a hypercube")
    if not is_simple(m):
        raise MatricubeError("not simple")
    r = width[0]
    rank = m.rank_of()
    if rank not in (r, r + 1):
        raise MatricubeError(f"rank {rank} is not r or r + 1 for r = {r}")
    dots = set(flats_of(m).flats)
    if rank == r + 1:
        dots.discard(width)
    full = DotArray(r, m.d, frozenset(dots))
    return DotArray(r, m.d, full.dots - redundant_positions(full))
