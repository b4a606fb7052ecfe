"""Strict JSON formats for every object the command line speaks.

All parsers reject unknown keys, booleans posing as integers, and
floats; all serializers emit a canonical form (fixed key order, points
sorted lexicographically, compact separators) so that outputs are
byte-reproducible.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .core import Hypercuboid, Matricube, MatricubeError
from .matroids import CoherentComplex, FlagMatroid, Matroid, Polymatroid
from .permarray import DotArray
from .represent import CubicalMatrix, FieldSpec
from .transforms import TwoVarPolynomial


class FormatError(MatricubeError):
    """The input text is not a well-formed document of the expected kind."""


def load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON: {e}") from None


def dump_json(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _dict_with_keys(obj, keys, what) -> dict:
    if not isinstance(obj, dict):
        raise FormatError(f"{what}: expected an object, got {type(obj).__name__}")
    if set(obj) != set(keys):
        raise FormatError(
            f"{what}: expected keys {sorted(keys)}, got {sorted(obj)}"
        )
    return obj


def _int(v, what) -> int:
    if type(v) is not int:
        raise FormatError(f"{what}: expected an integer, got {v!r}")
    return v


def _int_list(v, what) -> list:
    if not isinstance(v, list):
        raise FormatError(f"{what}: expected a list, got {type(v).__name__}")
    return [_int(a, what) for a in v]


def _point_list(v, what) -> list:
    if not isinstance(v, list):
        raise FormatError(f"{what}: expected a list of points")
    return [tuple(_int_list(p, what)) for p in v]


# ---------------------------------------------------------------------------
# matricubes

def matricube_to_dict(m: Matricube) -> dict:
    return {"width": list(m.width), "rank": list(m.ranks)}


def matricube_from_obj(obj) -> Matricube:
    obj = _dict_with_keys(obj, ("width", "rank"), "matricube")
    width = _int_list(obj["width"], "matricube width")
    table = _int_list(obj["rank"], "matricube rank table")
    try:
        return Matricube(tuple(width), tuple(table))
    except ValueError as e:
        raise FormatError(str(e)) from None


# ---------------------------------------------------------------------------
# point sets

def points_to_dict(width, points) -> dict:
    return {"width": list(width), "points": [list(p) for p in sorted(points)]}


# ---------------------------------------------------------------------------
# polynomials

def polynomial_to_dict(poly: TwoVarPolynomial) -> dict:
    return {"terms": [[dx, dy, c] for dx, dy, c in poly.terms]}


# ---------------------------------------------------------------------------
# matroids and friends

def matroid_to_dict(mat: Matroid) -> dict:
    return {"ground": list(mat.ground), "rank": list(mat.rank)}


def _label_list(v, what) -> list:
    if not isinstance(v, list):
        raise FormatError(f"{what}: expected a list of labels")
    out = []
    for e in v:
        if not (isinstance(e, str) or type(e) is int):
            raise FormatError(f"{what}: label {e!r} is not a string or integer")
        out.append(e)
    return out


def matroid_from_obj(obj, *, max_ground=None) -> Matroid:
    obj = _dict_with_keys(obj, ("ground", "rank"), "matroid")
    ground = _label_list(obj["ground"], "matroid ground")
    table = _int_list(obj["rank"], "matroid rank table")
    try:
        if max_ground is None:
            return Matroid(tuple(ground), tuple(table))
        return Matroid(tuple(ground), tuple(table), max_ground=max_ground)
    except ValueError as e:
        raise FormatError(str(e)) from None


def polymatroid_to_dict(pm: Polymatroid) -> dict:
    return {"ground": list(pm.ground), "rank": list(pm.rank)}


def coherent_to_dict(cc: CoherentComplex) -> dict:
    cube = Hypercuboid(cc.width)
    return {
        "width": list(cc.width),
        "matroids": {
            str(cube.index(x)): matroid_to_dict(cc.matroids[x]) for x in cube.points()
        },
    }


def coherent_from_obj(obj) -> CoherentComplex:
    obj = _dict_with_keys(obj, ("width", "matroids"), "coherent complex")
    width = tuple(_int_list(obj["width"], "coherent complex width"))
    mats_obj = obj["matroids"]
    if not isinstance(mats_obj, dict):
        raise FormatError("coherent complex: 'matroids' must map indexes to matroids")
    try:
        cube = Hypercuboid(width)
    except ValueError as e:
        raise FormatError(str(e)) from None
    mats = {}
    for key, val in mats_obj.items():
        try:
            idx = int(key)
        except ValueError:
            raise FormatError(f"coherent complex: index {key!r} is not an integer") from None
        if not 0 <= idx < cube.npoints:
            raise FormatError(f"coherent complex: index {idx} out of range")
        mats[cube.point_at(idx)] = matroid_from_obj(val)
    try:
        return CoherentComplex(width, mats)
    except ValueError as e:
        raise FormatError(str(e)) from None


def flag_matroid_from_obj(obj) -> FlagMatroid:
    obj = _dict_with_keys(obj, ("ground", "constituents"), "flag matroid")
    ground = tuple(_label_list(obj["ground"], "flag matroid ground"))
    cons_obj = obj["constituents"]
    if not isinstance(cons_obj, list):
        raise FormatError("flag matroid: 'constituents' must be a list of rank tables")
    constituents = []
    for table in cons_obj:
        ranks = _int_list(table, "flag matroid constituent")
        try:
            constituents.append(Matroid(ground, tuple(ranks)))
        except ValueError as e:
            raise FormatError(str(e)) from None
    try:
        return FlagMatroid(ground, tuple(constituents))
    except ValueError as e:
        raise FormatError(str(e)) from None


def flag_matroid_to_dict(fm: FlagMatroid) -> dict:
    return {
        "ground": list(fm.ground),
        "constituents": [list(mat.rank) for mat in fm.constituents],
    }


def flag_matroids_from_obj(obj) -> list:
    obj = _dict_with_keys(obj, ("flag_matroids",), "flag matroid collection")
    if not isinstance(obj["flag_matroids"], list):
        raise FormatError("flag matroid collection: expected a list")
    return [flag_matroid_from_obj(fm) for fm in obj["flag_matroids"]]


# ---------------------------------------------------------------------------
# dot arrays

def dotarray_to_dict(P: DotArray) -> dict:
    return {"r": P.r, "d": P.d, "dots": [list(p) for p in sorted(P.dots)]}


def dotarray_from_obj(obj) -> DotArray:
    obj = _dict_with_keys(obj, ("r", "d", "dots"), "dot array")
    r = _int(obj["r"], "dot array r")
    d = _int(obj["d"], "dot array d")
    dots = _point_list(obj["dots"], "dot array dots")
    for p in dots:
        if len(p) != d:
            raise FormatError(f"dot array: dot {list(p)} does not have {d} coordinates")
    try:
        return DotArray(r, d, frozenset(dots))
    except ValueError as e:
        raise FormatError(str(e)) from None


# ---------------------------------------------------------------------------
# cubical matrices

def field_to_dict(field: FieldSpec) -> dict:
    if field.kind == "rational":
        return {"kind": "rational"}
    return {"kind": "prime", "p": field.p}


def field_from_obj(obj) -> FieldSpec:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise FormatError("field: expected an object with a 'kind'")
    kind = obj["kind"]
    try:
        if kind == "rational":
            _dict_with_keys(obj, ("kind",), "field")
            return FieldSpec("rational")
        if kind == "prime":
            _dict_with_keys(obj, ("kind", "p"), "field")
            return FieldSpec("prime", _int(obj["p"], "field modulus"))
    except ValueError as e:
        raise FormatError(str(e)) from None
    raise FormatError(f"field: unknown kind {kind!r}")


def _entry_to_json(field: FieldSpec, value):
    if field.kind == "rational":
        return str(value)
    return value


def cubicalmatrix_to_dict(c: CubicalMatrix) -> dict:
    return {
        "field": field_to_dict(c.field),
        "m": c.m,
        "vectors": [
            [[_entry_to_json(c.field, a) for a in v] for v in vecs]
            for vecs in c.vectors
        ],
    }


def cubicalmatrix_from_obj(obj) -> CubicalMatrix:
    obj = _dict_with_keys(obj, ("field", "m", "vectors"), "cubical matrix")
    field = field_from_obj(obj["field"])
    m = _int(obj["m"], "cubical matrix m")
    vecs_obj = obj["vectors"]
    if not isinstance(vecs_obj, list):
        raise FormatError("cubical matrix: 'vectors' must be a list per direction")
    dirs = []
    for vecs in vecs_obj:
        if not isinstance(vecs, list):
            raise FormatError("cubical matrix: each direction must be a list of vectors")
        coerced = []
        for v in vecs:
            if not isinstance(v, list):
                raise FormatError("cubical matrix: each vector must be a list of entries")
            row = []
            for a in v:
                if field.kind == "prime":
                    row.append(_int(a, "cubical matrix entry"))
                else:
                    if type(a) is int:
                        row.append(Fraction(a))
                    elif isinstance(a, str):
                        try:
                            row.append(Fraction(a))
                        except (ValueError, ZeroDivisionError):
                            raise FormatError(
                                f"cubical matrix: entry {a!r} is not a rational"
                            ) from None
                    else:
                        raise FormatError(f"cubical matrix: entry {a!r} is not a rational")
            coerced.append(tuple(row))
        dirs.append(tuple(coerced))
    try:
        return CubicalMatrix(field, m, tuple(dirs))
    except ValueError as e:
        raise FormatError(str(e)) from None
