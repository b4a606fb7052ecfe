"""Exhaustive generation of matricubes on small boxes.

``enumerate_matricubes`` walks the points of the box in canonical order
and assigns each point the set of values compatible with R1, R2 and the
diamond condition against already-assigned predecessors.  Because a
table satisfies the three rank axioms exactly when the origin is 0,
every unit step is 0 or 1, and every unit square satisfies the diamond
inequality, the pruning bounds are exact: every leaf of the search is a
matricube, and every matricube is reached.  Emission order is
lexicographic on the flattened table.

``bruteforce_matricubes`` ignores all of that and filters the full
product of candidate values through ``validate_rank_axioms``.  It is
deliberately independent of the DFS so the two can cross-check each
other, and it is kept behind a much smaller size guard.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Optional

from .core import (
    GuardError,
    Hypercuboid,
    Matricube,
    Point,
    add_unit,
    l1,
    validate_rank_axioms,
)

ENUMERATE_GUARD = 24
BRUTEFORCE_GUARD = 12


def enumerate_matricubes(
    width: Point,
    *,
    simple: bool = False,
    rank: Optional[int] = None,
    max_points: int = ENUMERATE_GUARD,
) -> Iterator[Matricube]:
    """Yield every matricube on the box, in canonical table order.

    ``simple`` restricts to simple matricubes by pinning axis values
    during the search; ``rank`` filters on the final global rank.
    """
    cube = Hypercuboid(width)
    if cube.npoints > max_points:
        raise GuardError(f"{cube.npoints} points exceeds guard {max_points}")
    if simple and any(w == 0 for w in cube.width):
        return
    d = cube.d
    width = cube.width
    strides = cube.strides
    points = list(cube.points())
    npoints = cube.npoints

    # forced axis values under the simple filter
    pinned = {}
    if simple:
        for i in range(d):
            for t in range(width[i] + 1):
                pinned[cube.index(cube.axis_point(i, t))] = t

    values = [0] * npoints

    def candidates(idx: int) -> range:
        x = points[idx]
        lo = 0
        hi = l1(x)
        below = []
        for i in range(d):
            if x[i] == 0:
                continue
            v = values[idx - strides[i]]
            below.append((i, v))
            if v > lo:
                lo = v
            if v + 1 < hi:
                hi = v + 1
        for a in range(len(below)):
            i, vi = below[a]
            xi = add_unit(x, i, -1)
            for b in range(a + 1, len(below)):
                j, vj = below[b]
                cap = vi + vj - values[cube.index(add_unit(xi, j, -1))]
                if cap < hi:
                    hi = cap
        return range(lo, hi + 1)

    def walk(idx: int) -> Iterator[Matricube]:
        if idx == npoints:
            m = Matricube(width, tuple(values))
            if rank is None or m.rank_of() == rank:
                yield m
            return
        cand = candidates(idx)
        if idx in pinned:
            want = pinned[idx]
            cand = [want] if want in cand else []
        for v in cand:
            values[idx] = v
            yield from walk(idx + 1)

    # values[0] is the origin and already holds the forced 0
    yield from walk(1)


def bruteforce_matricubes(
    width: Point, *, max_points: int = BRUTEFORCE_GUARD
) -> Iterator[Matricube]:
    """Filter the full candidate product through the axiom validator.

    Candidate values per point are 0..|x|, which is safe because every
    matricube is dominated by the uniform one of its own rank.
    """
    cube = Hypercuboid(width)
    if cube.npoints > max_points:
        raise GuardError(f"{cube.npoints} points exceeds guard {max_points}")
    ranges = [range(l1(x) + 1) for x in cube.points()]
    for table in itertools.product(*ranges):
        m = Matricube(cube.width, table)
        if not validate_rank_axioms(m):
            yield m
