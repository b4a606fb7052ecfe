"""Hypercuboid geometry and the rank axioms.

A matricube is an integer function rk on the box
C(w) = [0, w_0] x ... x [0, w_{d-1}] such that

  R1: rk(origin) = 0 and every unit step along an axis changes rk by at
      most 1 (together with R2 this pins each step to 0 or 1),
  R2: rk is monotone for the componentwise order,
  R3: rk is submodular, rk(x) + rk(y) >= rk(x v y) + rk(x ^ y).

On width (1, ..., 1) these are exactly the rank functions of matroids
on d elements, with points read as indicator vectors of subsets.

``Matricube`` itself is a dumb container: it stores any integer table of
the right shape so that invalid tables can be probed, rendered and
repaired.  ``validate_rank_axioms`` decides whether the table really is
a matricube; the ``check_*`` helpers test individual conditions on raw
tables.

Tables are stored flat in canonical layout: the last direction varies
fastest, so storage order equals lexicographic order on points.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

Point = tuple  # componentwise-ordered integer tuples

DIAMOND_GUARD = 10**6
BRUTEFORCE_PAIR_GUARD = 10**4


class MatricubeError(Exception):
    """Base class for errors raised by this package."""


class GuardError(MatricubeError):
    """A size guard was exceeded; raise the limit explicitly to proceed."""


@dataclass(frozen=True)
class Violation:
    """A single axiom failure with a concrete witness.

    ``axiom`` is the short label (R1, F2, CC2, ...), ``witness`` the
    offending point or tuple of points, ``message`` a human-readable
    account of what went wrong there.
    """

    axiom: str
    witness: tuple
    message: str

    def __str__(self) -> str:
        return f"{self.axiom} at {self.witness}: {self.message}"


class AxiomError(MatricubeError):
    """Raised when an operation requires a valid object but got violations."""

    def __init__(self, violations: Sequence[Violation]):
        self.violations = list(violations)
        lines = "; ".join(str(v) for v in self.violations[:3])
        more = "" if len(self.violations) <= 3 else f" (+{len(self.violations) - 3} more)"
        super().__init__(lines + more)


# ---------------------------------------------------------------------------
# point arithmetic

def l1(x: Point) -> int:
    return sum(x)


def leq(x: Point, y: Point) -> bool:
    """Componentwise x <= y."""
    return all(a <= b for a, b in zip(x, y, strict=True))


def meet(x: Point, y: Point) -> Point:
    return tuple(map(min, x, y))


def join(x: Point, y: Point) -> Point:
    return tuple(map(max, x, y))


def meet_all(points: Iterable[Point], top: Point) -> Point:
    out = top
    for p in points:
        out = meet(out, p)
    return out


def join_all(points: Iterable[Point], bottom: Point) -> Point:
    out = bottom
    for p in points:
        out = join(out, p)
    return out


def complement(x: Point, width: Point) -> Point:
    """Reflect x through the box: componentwise width - x."""
    return tuple(w - a for a, w in zip(x, width, strict=True))


def add_unit(x: Point, i: int, amount: int = 1) -> Point:
    return x[:i] + (x[i] + amount,) + x[i + 1 :]


@dataclass(frozen=True)
class Hypercuboid:
    """The box of integer points below a fixed width vector."""

    width: Point

    def __post_init__(self):
        object.__setattr__(self, "width", tuple(int(w) for w in self.width))
        if any(w < 0 for w in self.width):
            raise ValueError(f"negative width: {self.width}")

    @property
    def d(self) -> int:
        return len(self.width)

    @cached_property
    def strides(self) -> tuple:
        strides = [1] * self.d
        for i in range(self.d - 2, -1, -1):
            strides[i] = strides[i + 1] * (self.width[i + 1] + 1)
        return tuple(strides)

    @cached_property
    def npoints(self) -> int:
        out = 1
        for w in self.width:
            out *= w + 1
        return out

    def points(self) -> Iterator[Point]:
        """All points in canonical (= lexicographic = storage) order."""
        return itertools.product(*(range(w + 1) for w in self.width))

    def index(self, x: Point) -> int:
        if x not in self:
            raise ValueError(f"point {x} outside box of width {self.width}")
        return sum(a * s for a, s in zip(x, self.strides))

    def point_at(self, idx: int) -> Point:
        if not 0 <= idx < self.npoints:
            raise ValueError(f"index {idx} out of range")
        out = []
        for s, w in zip(self.strides, self.width):
            a, idx = divmod(idx, s)
            out.append(a)
        return tuple(out)

    def __contains__(self, x) -> bool:
        return (
            len(x) == self.d
            and all(isinstance(a, int) and not isinstance(a, bool) for a in x)
            and all(0 <= a <= w for a, w in zip(x, self.width))
        )

    def axis_point(self, i: int, t: int) -> Point:
        out = [0] * self.d
        out[i] = t
        return tuple(out)

    def top(self) -> Point:
        return self.width

    def origin(self) -> Point:
        return (0,) * self.d


def _check_table(width: Point, values) -> tuple:
    cube = Hypercuboid(width)
    vals = tuple(values)
    if len(vals) != cube.npoints:
        raise ValueError(
            f"table has {len(vals)} entries, box of width {cube.width} has {cube.npoints} points"
        )
    for v in vals:
        if not isinstance(v, int) or isinstance(v, bool):
            raise ValueError(f"table entry {v!r} is not an integer")
    return vals


@dataclass(frozen=True)
class Matricube:
    """An integer table on a hypercuboid, in canonical flat layout.

    The constructor checks shape and integrality only.  Whether the
    table satisfies R1, R2, R3 is a separate question answered by
    ``validate_rank_axioms``; most operations in this package state
    validity as a precondition.
    """

    width: Point
    ranks: tuple

    def __post_init__(self):
        width = tuple(int(w) for w in self.width)
        object.__setattr__(self, "width", width)
        object.__setattr__(self, "ranks", _check_table(width, self.ranks))

    @cached_property
    def cube(self) -> Hypercuboid:
        return Hypercuboid(self.width)

    @property
    def d(self) -> int:
        return len(self.width)

    def rank(self, x: Point) -> int:
        return self.ranks[self.cube.index(tuple(x))]

    def rank_of(self) -> int:
        """Global rank: the table value at the width point."""
        return self.ranks[-1]


def rank(m: Matricube, x: Point) -> int:
    return m.rank(x)


def rank_of(m: Matricube) -> int:
    return m.rank_of()


# ---------------------------------------------------------------------------
# validation

def validate_rank_axioms(m: Matricube, *, all_violations: bool = False) -> list:
    """Check R1, R2, R3 and return a (possibly empty) list of violations.

    With the default ``all_violations=False`` the list has at most one
    entry: the first violation in axiom-major order, scanning witnesses
    lexicographically.  R3 is checked through the diamond condition,
    which is equivalent for any integer table; its witness is reported
    as the submodular pair (x + e_i, x + e_j).
    """
    cube = m.cube
    out = []

    def done():
        return out and not all_violations

    origin = cube.origin()
    if m.rank(origin) != 0:
        out.append(Violation("R1", (origin,), f"rank at the origin is {m.rank(origin)}, not 0"))
    if not done():
        for x in cube.points():
            nonzero = [i for i, a in enumerate(x) if a]
            if len(nonzero) != 1:
                continue
            i = nonzero[0]
            step = m.rank(x) - m.rank(add_unit(x, i, -1))
            if step > 1:
                out.append(
                    Violation("R1", (x,), f"axis step in direction {i} has increment {step} > 1")
                )
                if done():
                    break

    if not done():
        for x in cube.points():
            for i in range(cube.d):
                if x[i] == m.width[i]:
                    continue
                y = add_unit(x, i)
                if m.rank(y) < m.rank(x):
                    out.append(
                        Violation(
                            "R2", (x, y), f"rank decreases from {m.rank(x)} to {m.rank(y)}"
                        )
                    )
                    if done():
                        break
            if done():
                break

    if not done():
        witness = diamond_violation(m)
        if witness is not None:
            x, i, j = witness
            out.append(
                Violation(
                    "R3",
                    (add_unit(x, i), add_unit(x, j)),
                    f"diamond fails at {x} in directions {i}, {j}",
                )
            )

    return out


def is_valid(m: Matricube) -> bool:
    return not validate_rank_axioms(m)


def require_valid(m: Matricube) -> Matricube:
    violations = validate_rank_axioms(m)
    if violations:
        raise AxiomError(violations)
    return m


def is_simple(m: Matricube) -> bool:
    """R1*: every width is positive and rk(t * e_i) = t on every axis."""
    if any(w == 0 for w in m.width):
        return False
    for i, w in enumerate(m.width):
        for t in range(w + 1):
            if m.rank(m.cube.axis_point(i, t)) != t:
                return False
    return True


# ---------------------------------------------------------------------------
# local condition checks on arbitrary tables

def diamond_violation(m: Matricube, *, max_points: int = DIAMOND_GUARD):
    """First (x, i, j) where the diamond inequality fails, or None.

    The diamond condition compares opposite increments on every unit
    square: the increment of direction i at x must be at least the
    increment of direction i at x + e_j.  For integer tables this is
    equivalent to submodularity, which is what makes a linear-size scan
    a complete R3 check.
    """
    cube = m.cube
    if cube.npoints > max_points:
        raise GuardError(f"{cube.npoints} points exceeds guard {max_points}")
    for x in cube.points():
        for i in range(cube.d):
            if x[i] == m.width[i]:
                continue
            for j in range(i + 1, cube.d):
                if x[j] == m.width[j]:
                    continue
                xi = add_unit(x, i)
                xj = add_unit(x, j)
                xij = add_unit(xi, j)
                if m.rank(xi) - m.rank(x) < m.rank(xij) - m.rank(xj):
                    return (x, i, j)
    return None


def check_diamond(m: Matricube, *, max_points: int = DIAMOND_GUARD) -> bool:
    return diamond_violation(m, max_points=max_points) is None


def submodular_violation(m: Matricube, *, max_points: int = BRUTEFORCE_PAIR_GUARD):
    """First pair (x, y) with rk(x) + rk(y) < rk(x v y) + rk(x ^ y), or None.

    Quadratic in the number of points; kept as an independent oracle for
    the diamond shortcut rather than as a production check.
    """
    cube = m.cube
    if cube.npoints > max_points:
        raise GuardError(f"{cube.npoints} points exceeds guard {max_points}")
    pts = list(cube.points())
    for x in pts:
        for y in pts:
            if m.rank(x) + m.rank(y) < m.rank(join(x, y)) + m.rank(meet(x, y)):
                return (x, y)
    return None


def check_submodular_bruteforce(m: Matricube, *, max_points: int = BRUTEFORCE_PAIR_GUARD) -> bool:
    return submodular_violation(m, max_points=max_points) is None


def multidirectional_violation(
    m: Matricube, n: int, k: int, *, max_points: int = BRUTEFORCE_PAIR_GUARD
):
    """First witness against the (n, k) multidirectional increment condition.

    The condition quantifies over a set S of at most k directions, an
    offset vector c over S with entries in [0, n], and points x <= y
    that agree on S: the increment rk(x + c) - rk(x) must be at least
    rk(y + c) - rk(y).  Returns (x, y, dirs, offsets) or None.  With
    n = k = 1 this is exactly the diamond condition.
    """
    cube = m.cube
    if cube.npoints > max_points:
        raise GuardError(f"{cube.npoints} points exceeds guard {max_points}")
    if n < 1 or k < 1:
        raise ValueError("n and k must be at least 1")
    d = cube.d
    pts = list(cube.points())
    for s in range(1, min(k, d) + 1):
        for dirs in itertools.combinations(range(d), s):
            for offsets in itertools.product(range(n + 1), repeat=s):
                if all(c == 0 for c in offsets):
                    continue
                shift = [0] * d
                for i, c in zip(dirs, offsets):
                    shift[i] = c
                shift = tuple(shift)
                for x in pts:
                    xs = tuple(a + b for a, b in zip(x, shift))
                    if xs not in cube:
                        continue
                    for y in pts:
                        if not leq(x, y):
                            continue
                        if any(x[i] != y[i] for i in dirs):
                            continue
                        ys = tuple(a + b for a, b in zip(y, shift))
                        if ys not in cube:
                            continue
                        if m.rank(xs) - m.rank(x) < m.rank(ys) - m.rank(y):
                            return (x, y, dirs, offsets)
    return None


def check_multidirectional(
    m: Matricube, n: int, k: int, *, max_points: int = BRUTEFORCE_PAIR_GUARD
) -> bool:
    return multidirectional_violation(m, n, k, max_points=max_points) is None


# ---------------------------------------------------------------------------
# basic constructions

def uniform(width: Point, r: int) -> Matricube:
    """The uniform matricube of the given width and rank r.

    rk(x) = min(r, |x|) with |x| the coordinate sum.  Requires
    0 <= r <= |width|; anything else cannot be the rank of a matricube
    on that box.
    """
    cube = Hypercuboid(width)
    if not 0 <= r <= l1(cube.width):
        raise ValueError(f"rank {r} out of range [0, {l1(cube.width)}] for width {cube.width}")
    return Matricube(cube.width, tuple(min(r, l1(x)) for x in cube.points()))


def check_dominated_by_uniform(m: Matricube) -> bool:
    """Every matricube sits below the uniform one of the same global rank."""
    r = m.rank_of()
    return all(v <= min(r, l1(x)) for x, v in zip(m.cube.points(), m.ranks))
