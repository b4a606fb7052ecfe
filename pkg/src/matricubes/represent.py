"""Linear representations: matricubes from families of vector flags.

A cubical matrix assigns to each direction i an ordered list of w_i
vectors in an ambient space of dimension m.  The point (x_0, ..., x_{d-1})
gets the rank

    rk(x) = dim( span of the first x_0 vectors of direction 0
                 + ... + span of the first x_{d-1} vectors of direction d-1 ),

which always satisfies the matricube axioms.  Arithmetic is exact:
``Fraction`` over the rationals, modular inverses over a prime field.
No floating point is involved anywhere.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .core import Hypercuboid, Matricube, Point


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Either the rationals or a prime field GF(p)."""

    kind: str
    p: Optional[int] = None

    def __post_init__(self):
        if self.kind == "rational":
            if self.p is not None:
                raise ValueError("the rational field takes no modulus")
        elif self.kind == "prime":
            if self.p is None or not _is_prime(self.p):
                raise ValueError(f"modulus {self.p!r} is not prime")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    def coerce(self, value):
        if self.kind == "rational":
            if isinstance(value, bool):
                raise ValueError(f"entry {value!r} is not a number")
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
            if isinstance(value, str):
                return Fraction(value)
            raise ValueError(f"entry {value!r} is not a rational")
        if isinstance(value, bool) or not isinstance(value, int):
            raise ValueError(f"entry {value!r} is not an integer mod {self.p}")
        if not 0 <= value < self.p:
            raise ValueError(f"entry {value} out of range [0, {self.p})")
        return value


RATIONALS = FieldSpec("rational")


def prime_field(p: int) -> FieldSpec:
    return FieldSpec("prime", p)


def exact_rank(rows: Sequence[Sequence], field: FieldSpec) -> int:
    """Rank of a rectangular matrix by fraction-free-enough elimination.

    Rows may be empty (rank 0).  Entries are coerced into the field
    first, so ints and 'p/q' strings are both accepted over the
    rationals.
    """
    mat = [[field.coerce(v) for v in row] for row in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    if any(len(row) != ncols for row in mat):
        raise ValueError("rows have unequal lengths")
    modulus = field.p if field.kind == "prime" else None
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(mat)):
            if mat[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        head = mat[rank][col]
        inv = pow(head, -1, modulus) if modulus else None
        for r in range(rank + 1, len(mat)):
            if mat[r][col] == 0:
                continue
            if modulus:
                factor = mat[r][col] * inv % modulus
                mat[r] = [(a - factor * b) % modulus for a, b in zip(mat[r], mat[rank])]
            else:
                factor = mat[r][col] / head
                mat[r] = [a - factor * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank


@dataclass(frozen=True)
class CubicalMatrix:
    """Per-direction vector lists over a fixed field and ambient dimension."""

    field: FieldSpec
    m: int
    vectors: tuple  # vectors[i][j] is the j-th vector of direction i

    def __post_init__(self):
        if self.m < 0:
            raise ValueError("ambient dimension must be nonnegative")
        dirs = []
        for vecs in self.vectors:
            coerced = []
            for v in vecs:
                if len(v) != self.m:
                    raise ValueError(
                        f"vector of length {len(v)} in ambient dimension {self.m}"
                    )
                coerced.append(tuple(self.field.coerce(a) for a in v))
            dirs.append(tuple(coerced))
        object.__setattr__(self, "vectors", tuple(dirs))

    @property
    def d(self) -> int:
        return len(self.vectors)

    @property
    def width(self) -> Point:
        return tuple(len(vecs) for vecs in self.vectors)

    def rank_at(self, x: Point) -> int:
        rows = []
        for i, a in enumerate(x):
            rows.extend(self.vectors[i][:a])
        return exact_rank(rows, self.field)

    def to_matricube(self) -> Matricube:
        cube = Hypercuboid(self.width)
        return Matricube(self.width, tuple(self.rank_at(x) for x in cube.points()))


def matricube_from_flags(c: CubicalMatrix) -> Matricube:
    """Rank table of the prefix-span sums; always a valid matricube."""
    return c.to_matricube()


def is_flags_simple(c: CubicalMatrix) -> bool:
    """Simpleness of the represented matricube, read off the vectors.

    Holds exactly when every direction has positive width and each
    prefix of its vector list is linearly independent.
    """
    if any(w == 0 for w in c.width):
        return False
    return all(
        exact_rank(vecs, c.field) == len(vecs) for vecs in c.vectors
    )


def general_position_flags(width: Point, r: int, p: int, seed: int) -> CubicalMatrix:
    """Random vectors over GF(p) in ambient dimension r.

    Entries are drawn with ``random.Random(seed).randrange(p)``,
    filling directions in order, vectors within a direction in order,
    and coordinates within a vector in order.  For p large relative to
    the number of points, the result is overwhelmingly likely to
    represent the uniform matricube of rank r on the box.
    """
    cube = Hypercuboid(width)
    rng = random.Random(seed)
    field = prime_field(p)
    vectors = tuple(
        tuple(tuple(rng.randrange(p) for _ in range(r)) for _ in range(w))
        for w in cube.width
    )
    return CubicalMatrix(field, r, vectors)
