"""The matroid side: local matroids, coherent complexes, polymatroids,
natural matroids, flag matroids, and matroid unions.

Matroids and polymatroids are stored as full rank tables indexed by
bitmask: bit j of the mask stands for ``ground[j]``.  This is wasteful
but transparent, and everything in this package lives on small ground
sets anyway; construction refuses grounds above a caller-adjustable
bound.
"""

from __future__ import annotations

import itertools
from dataclasses import InitVar, dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .core import (
    AxiomError,
    GuardError,
    Hypercuboid,
    Matricube,
    MatricubeError,
    Point,
    Violation,
    add_unit,
    join_all,
)

MATROID_GROUND_GUARD = 16
NATURAL_COPIES_GUARD = 20
FLAG_GROUND_GUARD = 16


def _check_rank_table(ground, table, max_ground, what):
    ground = tuple(ground)
    if len(set(ground)) != len(ground):
        raise ValueError(f"{what} ground has repeated labels: {ground}")
    if len(ground) > max_ground:
        raise GuardError(f"{what} on {len(ground)} elements exceeds guard {max_ground}")
    table = tuple(int(v) for v in table)
    if len(table) != 1 << len(ground):
        raise ValueError(
            f"{what} rank table has {len(table)} entries, expected {1 << len(ground)}"
        )
    return ground, table


@dataclass(frozen=True)
class Matroid:
    """A matroid given by its full rank table.

    ``rank[mask]`` is the rank of the subset selected by the mask's
    bits.  The constructor checks shape only; use
    ``validate_matroid_axioms`` to test the actual axioms.
    """

    ground: tuple
    rank: tuple
    max_ground: InitVar[int] = MATROID_GROUND_GUARD

    def __post_init__(self, max_ground):
        ground, table = _check_rank_table(self.ground, self.rank, max_ground, "matroid")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "rank", table)

    @property
    def n(self) -> int:
        return len(self.ground)

    def mask_of(self, subset: Iterable) -> int:
        mask = 0
        for e in subset:
            mask |= 1 << self.ground.index(e)
        return mask

    def subset_of(self, mask: int) -> tuple:
        return tuple(e for j, e in enumerate(self.ground) if mask >> j & 1)

    def rank_of(self, subset: Iterable) -> int:
        return self.rank[self.mask_of(subset)]

    def rank_full(self) -> int:
        return self.rank[-1]


def validate_matroid_axioms(mat: Matroid, *, all_violations: bool = False) -> list:
    """Brute-force check of the rank axioms over all subset pairs.

    M1: rank of the empty set is 0.  M2: adding one element changes the
    rank by 0 or 1.  M3: rank is submodular over all pairs of subsets.
    Witnesses are tuples of sorted label tuples.
    """
    out = []

    def done():
        return out and not all_violations

    n = mat.n
    if mat.rank[0] != 0:
        out.append(Violation("M1", ((),), f"rank of the empty set is {mat.rank[0]}"))

    if not done():
        for mask in range(1 << n):
            for j in range(n):
                if mask >> j & 1:
                    continue
                step = mat.rank[mask | 1 << j] - mat.rank[mask]
                if step not in (0, 1):
                    out.append(
                        Violation(
                            "M2",
                            (tuple(sorted(mat.subset_of(mask))), mat.ground[j]),
                            f"adding the element changes rank by {step}",
                        )
                    )
                    if done():
                        break
            if done():
                break

    if not done():
        for x in range(1 << n):
            for y in range(1 << n):
                if mat.rank[x] + mat.rank[y] < mat.rank[x | y] + mat.rank[x & y]:
                    out.append(
                        Violation(
                            "M3",
                            (
                                tuple(sorted(mat.subset_of(x))),
                                tuple(sorted(mat.subset_of(y))),
                            ),
                            "submodularity fails for this pair",
                        )
                    )
                    if done():
                        break
            if done():
                break

    return out


def contract_element(mat: Matroid, e) -> Matroid:
    """Contraction: rank'(X) = rank(X + e) - rank(e) on ground minus e."""
    j = mat.ground.index(e)
    base = mat.rank[1 << j]
    ground = mat.ground[:j] + mat.ground[j + 1 :]
    table = []
    for mask in range(1 << len(ground)):
        big = _lift_mask(mask, j) | 1 << j
        table.append(mat.rank[big] - base)
    return Matroid(ground, tuple(table))


def delete_element(mat: Matroid, e) -> Matroid:
    """Restriction to ground minus e."""
    j = mat.ground.index(e)
    ground = mat.ground[:j] + mat.ground[j + 1 :]
    table = [mat.rank[_lift_mask(mask, j)] for mask in range(1 << len(ground))]
    return Matroid(ground, tuple(table))


def _lift_mask(mask: int, j: int) -> int:
    # reinsert a cleared bit position j into a compacted mask
    low = mask & ((1 << j) - 1)
    return low | (mask >> j) << (j + 1)


def matroid_union_rank(matroids: Sequence[Matroid], subset: Iterable) -> int:
    """Rank of a subset in the union of matroids on a shared ground.

    Computed by the matroid union theorem:
    min over T inside the subset of |subset minus T| + sum of ranks of T.
    An empty matroid list gives 0.
    """
    matroids = list(matroids)
    if not matroids:
        return 0
    ground = matroids[0].ground
    for mat in matroids[1:]:
        if mat.ground != ground:
            raise ValueError("matroid union requires the identical ground tuple")
    umask = matroids[0].mask_of(subset)
    usize = umask.bit_count()
    best = None
    t = umask
    while True:
        value = usize - t.bit_count() + sum(mat.rank[t] for mat in matroids)
        if best is None or value < best:
            best = value
        if t == 0:
            break
        t = (t - 1) & umask
    return best


# ---------------------------------------------------------------------------
# local matroids and coherent complexes

def free_directions(width: Point, a: Point) -> tuple:
    """Directions that are not yet saturated at a."""
    return tuple(i for i in range(len(width)) if a[i] < width[i])


def local_matroid(m: Matricube, a: Point) -> Matroid:
    """The matroid induced on the unsaturated directions at a.

    rank(X) = rk(a + sum of e_i over X) - rk(a) for X a set of
    directions with a_i < width_i.
    """
    a = tuple(a)
    ground = free_directions(m.width, a)
    base = m.rank(a)
    table = []
    for mask in range(1 << len(ground)):
        x = list(a)
        for j, i in enumerate(ground):
            if mask >> j & 1:
                x[i] += 1
        table.append(m.rank(tuple(x)) - base)
    return Matroid(ground, tuple(table))


@dataclass(frozen=True, eq=False)
class CoherentComplex:
    """A matroid at every point of the box, on the free directions there.

    The constructor checks the indexing (every point present, each
    matroid's ground equal to the free directions at its point) but not
    the compatibility conditions; those are ``validate_coherent``'s job
    so that broken complexes can be stored and inspected.
    """

    width: Point
    matroids: Mapping

    def __post_init__(self):
        cube = Hypercuboid(self.width)
        object.__setattr__(self, "width", cube.width)
        mats = {}
        for key, mat in self.matroids.items():
            p = tuple(int(v) for v in key)
            if p not in cube:
                raise ValueError(f"point {p} outside box of width {cube.width}")
            mats[p] = mat
        for x in cube.points():
            if x not in mats:
                raise ValueError(f"no matroid at point {x}")
            want = free_directions(cube.width, x)
            if tuple(mats[x].ground) != want:
                raise ValueError(
                    f"matroid at {x} has ground {mats[x].ground}, expected {want}"
                )
        object.__setattr__(self, "matroids", mats)

    def __eq__(self, other):
        return (
            isinstance(other, CoherentComplex)
            and self.width == other.width
            and self.matroids == other.matroids
        )


def coherent_complex_of(m: Matricube) -> CoherentComplex:
    cube = m.cube
    return CoherentComplex(m.width, {x: local_matroid(m, x) for x in cube.points()})


def validate_coherent(cc: CoherentComplex, *, all_violations: bool = False) -> list:
    """Check CC1 and CC2 on the stored rank tables.

    CC1: on the axis point t * e_i (t < width_i) the direction i has
    rank at most 1.  CC2: stepping from a to a + e_i, the matroid there
    is the contraction of the one at a by i, extended by a fresh element
    named i when direction i is not yet saturated.  Both are read off
    the raw tables, so they can fail even where matroid axioms fail.
    """
    cube = Hypercuboid(cc.width)
    out = []

    def done():
        return out and not all_violations

    for i in range(cube.d):
        for t in range(cc.width[i]):
            a = cube.axis_point(i, t)
            mat = cc.matroids[a]
            v = mat.rank[1 << mat.ground.index(i)]
            if v > 1:
                out.append(
                    Violation("CC1", (a, i), f"singleton rank of direction {i} is {v}")
                )
                if done():
                    return out

    for a in cube.points():
        mat = cc.matroids[a]
        for i in free_directions(cc.width, a):
            nxt = cc.matroids[add_unit(a, i)]
            contracted = contract_element(mat, i)
            got = nxt if a[i] == cc.width[i] - 1 else delete_element(nxt, i)
            if got.rank != contracted.rank:
                out.append(
                    Violation(
                        "CC2",
                        (a, i),
                        "the matroid above does not restrict to the contraction",
                    )
                )
                if done():
                    return out

    return out


def matricube_from_coherent(cc: CoherentComplex, *, check_paths: bool = False) -> Matricube:
    """Accumulate singleton ranks along staircase paths from the origin.

    The table value at a point is the sum of one-direction increments
    along the path that first raises direction 0, then direction 1, and
    so on.  With ``check_paths`` the local commutation of increments is
    verified at every point, which makes the value independent of the
    chosen path.
    """
    violations = validate_coherent(cc)
    if violations:
        raise AxiomError(violations)
    cube = Hypercuboid(cc.width)

    if check_paths:
        for a in cube.points():
            free = free_directions(cc.width, a)
            for i in free:
                for j in free:
                    if j <= i:
                        continue
                    mat = cc.matroids[a]
                    mi = cc.matroids[add_unit(a, i)]
                    mj = cc.matroids[add_unit(a, j)]
                    left = mat.rank_of((i,)) + mi.rank_of((j,))
                    right = mat.rank_of((j,)) + mj.rank_of((i,))
                    if left != right:
                        raise MatricubeError(
                            f"increments do not commute at {a} in directions {i}, {j}"
                        )

    ranks = {cube.origin(): 0}
    for x in cube.points():
        if x == cube.origin():
            continue
        i = max(k for k in range(cube.d) if x[k] > 0)
        prev = add_unit(x, i, -1)
        ranks[x] = ranks[prev] + cc.matroids[prev].rank_of((i,))
    return Matricube(cc.width, tuple(ranks[x] for x in cube.points()))


# ---------------------------------------------------------------------------
# polymatroids and the natural matroid

@dataclass(frozen=True)
class Polymatroid:
    """An integer polymatroid as a full rank table, like Matroid."""

    ground: tuple
    rank: tuple
    max_ground: InitVar[int] = MATROID_GROUND_GUARD

    def __post_init__(self, max_ground):
        ground, table = _check_rank_table(self.ground, self.rank, max_ground, "polymatroid")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "rank", table)

    @property
    def n(self) -> int:
        return len(self.ground)

    def mask_of(self, subset: Iterable) -> int:
        mask = 0
        for e in subset:
            mask |= 1 << self.ground.index(e)
        return mask

    def subset_of(self, mask: int) -> tuple:
        return tuple(e for j, e in enumerate(self.ground) if mask >> j & 1)

    def rank_of(self, subset: Iterable) -> int:
        return self.rank[self.mask_of(subset)]


def validate_polymatroid_axioms(pm: Polymatroid, *, all_violations: bool = False) -> list:
    """Normalization, monotonicity, submodularity; no unit-step bound."""
    out = []

    def done():
        return out and not all_violations

    n = pm.n
    if pm.rank[0] != 0:
        out.append(Violation("P1", ((),), f"rank of the empty set is {pm.rank[0]}"))
    if not done():
        for mask in range(1 << n):
            for j in range(n):
                if mask >> j & 1:
                    continue
                if pm.rank[mask | 1 << j] < pm.rank[mask]:
                    out.append(
                        Violation(
                            "P2",
                            (tuple(sorted(pm.subset_of(mask))), pm.ground[j]),
                            "rank decreases when adding the element",
                        )
                    )
                    if done():
                        break
            if done():
                break
    if not done():
        for x in range(1 << n):
            for y in range(1 << n):
                if pm.rank[x] + pm.rank[y] < pm.rank[x | y] + pm.rank[x & y]:
                    out.append(
                        Violation(
                            "P3",
                            (
                                tuple(sorted(pm.subset_of(x))),
                                tuple(sorted(pm.subset_of(y))),
                            ),
                            "submodularity fails for this pair",
                        )
                    )
                    if done():
                        break
            if done():
                break
    return out


def natural_polymatroid(m: Matricube) -> Polymatroid:
    """One polymatroid element per axis point of the box.

    The element labeled 'i:t' stands for the point t * e_i (the t = 0
    loops are kept); the rank of a subset is the matricube rank of the
    join of its points.
    """
    ground = []
    points = []
    for i, w in enumerate(m.width):
        for t in range(w + 1):
            ground.append(f"{i}:{t}")
            points.append(m.cube.axis_point(i, t))
    origin = m.cube.origin()
    table = []
    for mask in range(1 << len(ground)):
        sel = [points[j] for j in range(len(ground)) if mask >> j & 1]
        table.append(m.rank(join_all(sel, origin)))
    return Polymatroid(tuple(ground), tuple(table))


def natural_matroid(pm: Polymatroid, *, max_copies: int = NATURAL_COPIES_GUARD) -> Matroid:
    """Replace each element by rank-of-singleton many copies.

    The rank of a set Y of copies is min over S of
    rho(S) + |Y minus copies-of-S|, scanned over all subsets S of the
    original ground.  Copies are labeled 'e#k'.
    """
    copies = []
    owner_mask = []  # per copy, the singleton mask of its original element
    for j, e in enumerate(pm.ground):
        mult = pm.rank[1 << j]
        for k in range(mult):
            copies.append(f"{e}#{k}")
            owner_mask.append(1 << j)
    if len(copies) > max_copies:
        raise GuardError(
            f"natural matroid would have {len(copies)} elements, guard is {max_copies}"
        )
    n = pm.n
    table = []
    for ymask in range(1 << len(copies)):
        members = [c for c in range(len(copies)) if ymask >> c & 1]
        best = None
        for s in range(1 << n):
            outside = sum(1 for c in members if not owner_mask[c] & s)
            value = pm.rank[s] + outside
            if best is None or value < best:
                best = value
        table.append(best)
    return Matroid(tuple(copies), tuple(table), max_ground=max_copies)


# ---------------------------------------------------------------------------
# flag matroids

@dataclass(frozen=True)
class FlagMatroid:
    """Constituents of an initial flag matroid: M_0, ..., M_s on one ground."""

    ground: tuple
    constituents: tuple

    def __post_init__(self):
        ground = tuple(self.ground)
        constituents = tuple(self.constituents)
        if not constituents:
            raise ValueError("a flag matroid needs at least the rank-0 constituent")
        for mat in constituents:
            if mat.ground != ground:
                raise ValueError(
                    f"constituent ground {mat.ground} differs from {ground}"
                )
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "constituents", constituents)

    @property
    def s(self) -> int:
        return len(self.constituents) - 1


def validate_flag_matroid(fm: FlagMatroid, *, all_violations: bool = False) -> list:
    """Each constituent a matroid of rank j, each a quotient of the next."""
    out = []

    def done():
        return out and not all_violations

    for j, mat in enumerate(fm.constituents):
        for v in validate_matroid_axioms(mat, all_violations=all_violations):
            out.append(Violation(v.axiom, (j,) + v.witness, f"constituent {j}: {v.message}"))
            if done():
                return out

    if not done():
        for j, mat in enumerate(fm.constituents):
            if mat.rank_full() != j:
                out.append(
                    Violation(
                        "constituent rank",
                        (j,),
                        f"constituent {j} has rank {mat.rank_full()}",
                    )
                )
                if done():
                    return out

    if not done():
        n = len(fm.ground)
        for j in range(len(fm.constituents) - 1):
            low = fm.constituents[j]
            high = fm.constituents[j + 1]
            for b in range(1 << n):
                a = b
                while True:
                    if (high.rank[b] - high.rank[a]) < (low.rank[b] - low.rank[a]):
                        out.append(
                            Violation(
                                "quotient",
                                (
                                    j,
                                    tuple(sorted(low.subset_of(a))),
                                    tuple(sorted(low.subset_of(b))),
                                ),
                                f"constituent {j} is not a quotient of constituent {j + 1}",
                            )
                        )
                        if done():
                            return out
                    if a == 0:
                        break
                    a = (a - 1) & b
    return out


def matricube_from_flag_matroids(
    fms: Sequence[FlagMatroid], *, max_ground: int = FLAG_GROUND_GUARD
) -> Matricube:
    """Rank table of the pointwise matroid unions of constituents.

    The point x selects constituent x_i from the i-th flag matroid; the
    table value is the union rank of the whole ground set.  The result
    is a simple matricube of width (s_1, ..., s_d).
    """
    fms = list(fms)
    if not fms:
        raise ValueError("need at least one flag matroid")
    ground = fms[0].ground
    for fm in fms[1:]:
        if fm.ground != ground:
            raise ValueError("flag matroids must share the identical ground tuple")
    if len(ground) > max_ground:
        raise GuardError(f"ground of {len(ground)} elements exceeds guard {max_ground}")
    for fm in fms:
        violations = validate_flag_matroid(fm)
        if violations:
            raise AxiomError(violations)
    width = tuple(fm.s for fm in fms)
    cube = Hypercuboid(width)
    ranks = tuple(
        matroid_union_rank([fm.constituents[t] for fm, t in zip(fms, x)], ground)
        for x in cube.points()
    )
    return Matricube(width, ranks)
