"""Duality, minors, direct sums, and Tutte-style invariants.

All operations here consume a valid matricube and return a valid one
(validity of inputs is the caller's contract; it is not re-checked on
every call).  The dual is the usual reflection

    rk*(x) = |x| + rk(w - x) - rk(w),

an involution that swaps deletion with contraction and exchanges the
variables of the Tutte polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence

from .core import (
    Hypercuboid,
    Matricube,
    Point,
    add_unit,
    complement,
    l1,
    leq,
)


def dual(m: Matricube) -> Matricube:
    cube = m.cube
    r = m.rank_of()
    return Matricube(
        m.width, tuple(l1(x) + m.rank(complement(x, m.width)) - r for x in cube.points())
    )


def _squeeze(width: Point, ranks: tuple, i: int) -> Matricube:
    # a direction shrunk to width 0 is dropped; the flat table is unchanged
    # because a zero-width direction contributes a factor of one point
    if width[i] == 0:
        width = width[:i] + width[i + 1 :]
    return Matricube(width, ranks)


def delete(m: Matricube, i: int) -> Matricube:
    """Remove the top layer of direction i (restrict to x_i < w_i).

    Requires w_i >= 1.  A direction shrunk to nothing disappears from
    the width vector, so deleting in a simple matricube stays simple.
    """
    _check_direction(m, i)
    if m.width[i] == 0:
        raise ValueError(f"cannot delete in direction {i}: width is 0")
    new_width = add_unit(m.width, i, -1)
    cube = Hypercuboid(new_width)
    return _squeeze(new_width, tuple(m.rank(x) for x in cube.points()), i)


def contract(m: Matricube, i: int) -> Matricube:
    """Quotient by the first layer of direction i.

    rk'(x) = rk(x + e_i) - rk(e_i) on the box with w_i lowered by one.
    Requires w_i >= 1.  As with delete, a direction shrunk to nothing
    disappears.
    """
    _check_direction(m, i)
    if m.width[i] == 0:
        raise ValueError(f"cannot contract in direction {i}: width is 0")
    new_width = add_unit(m.width, i, -1)
    cube = Hypercuboid(new_width)
    base = m.rank(m.cube.axis_point(i, 1))
    return _squeeze(
        new_width, tuple(m.rank(add_unit(x, i)) - base for x in cube.points()), i
    )


def minor(m: Matricube, ops: Iterable) -> Matricube:
    """Apply a sequence of ('d', i) / ('c', i) steps.

    Direction indices refer to the current width at each step, i.e.
    they are interpreted after the preceding steps have been applied.
    Deleting and contracting in distinct directions commute, so any
    order of such steps yields the same minor.
    """
    out = m
    for kind, i in ops:
        if kind in ("d", "delete"):
            out = delete(out, i)
        elif kind in ("c", "contract"):
            out = contract(out, i)
        else:
            raise ValueError(f"unknown minor op {kind!r}, expected 'd' or 'c'")
    return out


def direct_sum(m1: Matricube, m2: Matricube) -> Matricube:
    """Concatenate the direction lists; ranks add across the two blocks."""
    width = m1.width + m2.width
    cube = Hypercuboid(width)
    d1 = m1.d
    return Matricube(
        width, tuple(m1.rank(x[:d1]) + m2.rank(x[d1:]) for x in cube.points())
    )


def is_loop(m: Matricube, i: int) -> bool:
    """Direction i is a loop when its first layer adds no rank."""
    _check_direction(m, i)
    if m.width[i] == 0:
        raise ValueError(f"direction {i} has width 0, loop status is undefined")
    return m.rank(m.cube.axis_point(i, 1)) == 0


def is_coloop(m: Matricube, i: int) -> bool:
    """Direction i is a coloop when it is a loop of the dual.

    Equivalently, deleting the top layer of direction i drops the global
    rank.  Both routes are computed and compared; a disagreement would
    mean the input was not a valid matricube.
    """
    _check_direction(m, i)
    if m.width[i] == 0:
        raise ValueError(f"direction {i} has width 0, coloop status is undefined")
    via_dual = is_loop(dual(m), i)
    via_delete = delete(m, i).rank_of() == m.rank_of() - 1
    if via_dual != via_delete:
        raise AssertionError(
            f"coloop routes disagree in direction {i}: dual-loop {via_dual}, "
            f"deletion {via_delete}"
        )
    return via_dual


def loops(m: Matricube) -> tuple:
    return tuple(i for i in range(m.d) if m.width[i] > 0 and is_loop(m, i))


def coloops(m: Matricube) -> tuple:
    return tuple(i for i in range(m.d) if m.width[i] > 0 and is_coloop(m, i))


def _check_direction(m: Matricube, i: int):
    if not 0 <= i < m.d:
        raise ValueError(f"direction {i} out of range for width {m.width}")


# ---------------------------------------------------------------------------
# two-variable polynomials

@dataclass(frozen=True)
class TwoVarPolynomial:
    """An integer polynomial in x and y, stored as sorted nonzero terms.

    ``terms`` is a tuple of (dx, dy, coeff) sorted by dx descending then
    dy descending, which doubles as the canonical JSON order.
    """

    terms: tuple

    def __post_init__(self):
        cleaned = {}
        for dx, dy, c in self.terms:
            if dx < 0 or dy < 0:
                raise ValueError(f"negative exponent in term {(dx, dy, c)}")
            cleaned[(dx, dy)] = cleaned.get((dx, dy), 0) + int(c)
        terms = tuple(
            (dx, dy, c)
            for (dx, dy), c in sorted(cleaned.items(), key=lambda kv: (-kv[0][0], -kv[0][1]))
            if c != 0
        )
        object.__setattr__(self, "terms", terms)

    @classmethod
    def zero(cls) -> "TwoVarPolynomial":
        return cls(())

    @classmethod
    def from_coefficients(cls, coeffs) -> "TwoVarPolynomial":
        return cls(tuple((dx, dy, c) for (dx, dy), c in coeffs.items()))

    @property
    def coefficients(self) -> dict:
        return {(dx, dy): c for dx, dy, c in self.terms}

    def __add__(self, other: "TwoVarPolynomial") -> "TwoVarPolynomial":
        return TwoVarPolynomial(self.terms + other.terms)

    def __mul__(self, other: "TwoVarPolynomial") -> "TwoVarPolynomial":
        out = []
        for dx1, dy1, c1 in self.terms:
            for dx2, dy2, c2 in other.terms:
                out.append((dx1 + dx2, dy1 + dy2, c1 * c2))
        return TwoVarPolynomial(tuple(out))

    def swap_variables(self) -> "TwoVarPolynomial":
        return TwoVarPolynomial(tuple((dy, dx, c) for dx, dy, c in self.terms))

    def evaluate(self, x: int, y: int) -> int:
        return sum(c * x**dx * y**dy for dx, dy, c in self.terms)

    def text(self) -> str:
        """Human-readable rendering, e.g. 'x^2 - 2*x*y + y^2 + 1'."""
        if not self.terms:
            return "0"
        parts = []
        for pos, (dx, dy, c) in enumerate(self.terms):
            mono = "*".join(
                filter(
                    None,
                    (
                        "x" if dx == 1 else f"x^{dx}" if dx else "",
                        "y" if dy == 1 else f"y^{dy}" if dy else "",
                    ),
                )
            )
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            if pos == 0:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


def tutte(m: Matricube) -> TwoVarPolynomial:
    """Corank-nullity sum over all points of the box.

    T(x, y) = sum over points a of (x-1)^(r - rk(a)) (y-1)^(|a| - rk(a)).
    Expanded exactly with binomial coefficients; the dual swaps x and y,
    and direct sums multiply.
    """
    r = m.rank_of()
    coeffs = {}
    for a, v in zip(m.cube.points(), m.ranks):
        cork = r - v
        null = l1(a) - v
        for p in range(cork + 1):
            for q in range(null + 1):
                sign = -1 if (cork - p + null - q) % 2 else 1
                key = (p, q)
                coeffs[key] = coeffs.get(key, 0) + sign * math.comb(cork, p) * math.comb(null, q)
    return TwoVarPolynomial.from_coefficients(coeffs)


# ---------------------------------------------------------------------------
# basis candidates

class BasisCandidateKind(str, Enum):
    """The six candidate notions of 'basis', tagged a through f.

    a: maximal independent points for the componentwise order
    b: independent points whose size equals the global rank
    c: independent points with no independent point directly above
    d: independent points whose rank does not grow in any direction
    e: independent points that are not a removal of any independent point
    f: independent points a with rk(a) + rk*(complement a) = |width|
    """

    MAXIMAL = "a"
    FULL_RANK = "b"
    NO_INDEPENDENT_ABOVE = "c"
    NO_RANK_ABOVE = "d"
    NOT_A_REMOVAL = "e"
    DUAL_COMPLEMENT = "f"


def basis_candidates(m: Matricube, kind) -> frozenset:
    """Points passing the chosen candidate test; see BasisCandidateKind.

    Kinds c and d are provably the same set; both are computed from
    their own definitions so the equality stays testable.
    """
    from .cryptomorph import independents_of, removal

    kind = BasisCandidateKind(kind)
    ind = independents_of(m).independents
    width = m.width

    if kind is BasisCandidateKind.MAXIMAL:
        return frozenset(
            a for a in ind if not any(b != a and leq(a, b) for b in ind)
        )
    if kind is BasisCandidateKind.FULL_RANK:
        r = m.rank_of()
        return frozenset(a for a in ind if m.rank(a) == r)
    if kind is BasisCandidateKind.NO_INDEPENDENT_ABOVE:
        return frozenset(
            a
            for a in ind
            if not any(
                a[i] < width[i] and add_unit(a, i) in ind for i in range(m.d)
            )
        )
    if kind is BasisCandidateKind.NO_RANK_ABOVE:
        return frozenset(
            a
            for a in ind
            if all(
                m.rank(add_unit(a, i)) == m.rank(a)
                for i in range(m.d)
                if a[i] < width[i]
            )
        )
    if kind is BasisCandidateKind.NOT_A_REMOVAL:
        J = independents_of(m)
        removed = set()
        for b in ind:
            for i in range(m.d):
                if b[i] >= 1:
                    removed.add(removal(J, b, i))
        return frozenset(a for a in ind if a not in removed)
    if kind is BasisCandidateKind.DUAL_COMPLEMENT:
        md = dual(m)
        total = l1(width)
        return frozenset(
            a for a in ind if m.rank(a) + md.rank(complement(a, width)) == total
        )
    raise ValueError(f"unknown basis candidate kind {kind!r}")
