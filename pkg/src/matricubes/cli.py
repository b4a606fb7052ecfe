"""Command line interface.

One canonical JSON document per line on stdout; human-readable grids
behind --grid.  Exit codes: 0 on success, 1 when the input parses but
fails validation or a precondition, 2 when the input is malformed.

The textual grid convention: direction 0 runs left to right, direction
1 bottom to top (so rows are printed from the top layer down), and for
three directions the slices along direction 2 are printed as separate
blocks from 0 upward.
"""

from __future__ import annotations

import argparse
import sys

from . import cryptomorph, enumeration, jsonio, matroids, permarray, represent, transforms
from .core import (
    AxiomError,
    Matricube,
    MatricubeError,
    is_simple,
    uniform,
    validate_rank_axioms,
)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise jsonio.FormatError(f"cannot read {path}: {e}") from None


def _load_matricube(path: str, *, validated: bool = True) -> Matricube:
    m = jsonio.matricube_from_obj(jsonio.load_json(_read_text(path)))
    if validated:
        violations = validate_rank_axioms(m)
        if violations:
            raise AxiomError(violations)
    return m


def _emit(obj):
    print(jsonio.dump_json(obj))


def _comma_ints(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _minor_ops(text: str) -> tuple:
    ops = []
    text = text.strip()
    if not text:
        return ()
    for token in text.split(","):
        token = token.strip()
        if len(token) < 2 or token[0] not in "dc" or not token[1:].isdigit():
            raise argparse.ArgumentTypeError(
                f"bad minor op {token!r}, expected like 'd0' or 'c2'"
            )
        ops.append((token[0], int(token[1:])))
    return tuple(ops)


# ---------------------------------------------------------------------------
# grids

def _grid_lines(m: Matricube, marked=frozenset(), mark="*") -> list:
    d = m.d
    if d == 0:
        p = ()
        return [str(m.rank(p)) + (mark if p in marked else "")]
    if d > 3:
        raise MatricubeError("grid display supports at most 3 directions")

    def cell(p):
        return str(m.rank(p)) + (mark if p in marked else "")

    if d == 1:
        cells = [cell((x,)) for x in range(m.width[0] + 1)]
        w = max(map(len, cells))
        return [" ".join(c.rjust(w) for c in cells)]

    def plane(fix):
        cells = {}
        for x0 in range(m.width[0] + 1):
            for x1 in range(m.width[1] + 1):
                cells[(x0, x1)] = cell((x0, x1) + fix)
        w = max(map(len, cells.values()))
        lines = []
        for x1 in range(m.width[1], -1, -1):
            lines.append(
                " ".join(cells[(x0, x1)].rjust(w) for x0 in range(m.width[0] + 1))
            )
        return lines

    if d == 2:
        return plane(())
    lines = []
    for t in range(m.width[2] + 1):
        if t:
            lines.append("")
        lines.append(f"[direction 2 = {t}]")
        lines.extend(plane((t,)))
    return lines


def _print_grid(m, marked=frozenset()):
    for line in _grid_lines(m, marked):
        print(line)


# ---------------------------------------------------------------------------
# subcommands

def cmd_validate(args) -> int:
    m = _load_matricube(args.file, validated=False)
    violations = validate_rank_axioms(m, all_violations=args.all)
    if violations:
        for v in violations:
            print(str(v), file=sys.stderr)
        return 1
    _emit({"ok": True})
    return 0


def cmd_info(args) -> int:
    m = _load_matricube(args.file)
    info = {
        "width": list(m.width),
        "rank": m.rank_of(),
        "simple": is_simple(m),
        "loops": list(transforms.loops(m)),
        "coloops": list(transforms.coloops(m)),
    }
    if args.grid:
        for key, value in info.items():
            print(f"{key}: {value}")
        _print_grid(m)
    else:
        _emit(info)
    return 0


def _pointset_command(extract):
    def run(args) -> int:
        m = _load_matricube(args.file)
        points = extract(m)
        if args.grid:
            _print_grid(m, marked=frozenset(points))
        else:
            _emit(jsonio.points_to_dict(m.width, points))
        return 0

    return run


cmd_flats = _pointset_command(lambda m: cryptomorph.flats_of(m).flats)
cmd_circuits = _pointset_command(lambda m: cryptomorph.circuits_of(m).circuits)
cmd_independents = _pointset_command(lambda m: cryptomorph.independents_of(m).independents)


def cmd_bases(args) -> int:
    m = _load_matricube(args.file)
    points = transforms.basis_candidates(m, args.kind)
    if args.grid:
        _print_grid(m, marked=frozenset(points))
    else:
        _emit(jsonio.points_to_dict(m.width, points))
    return 0


def _matricube_out(args, m: Matricube) -> int:
    if getattr(args, "grid", False):
        _print_grid(m)
    else:
        _emit(jsonio.matricube_to_dict(m))
    return 0


def cmd_dual(args) -> int:
    return _matricube_out(args, transforms.dual(_load_matricube(args.file)))


def cmd_delete(args) -> int:
    return _matricube_out(args, transforms.delete(_load_matricube(args.file), args.dir))


def cmd_contract(args) -> int:
    return _matricube_out(args, transforms.contract(_load_matricube(args.file), args.dir))


def cmd_minor(args) -> int:
    return _matricube_out(args, transforms.minor(_load_matricube(args.file), args.ops))


def cmd_sum(args) -> int:
    m1 = _load_matricube(args.file)
    m2 = _load_matricube(args.file2)
    return _matricube_out(args, transforms.direct_sum(m1, m2))


def cmd_tutte(args) -> int:
    poly = transforms.tutte(_load_matricube(args.file))
    if args.text:
        print(poly.text())
    else:
        _emit(jsonio.polynomial_to_dict(poly))
    return 0


def cmd_local_matroid(args) -> int:
    m = _load_matricube(args.file)
    if len(args.at) != m.d:
        raise MatricubeError(
            f"point {list(args.at)} does not have {m.d} coordinates"
        )
    _emit(jsonio.matroid_to_dict(matroids.local_matroid(m, args.at)))
    return 0


def cmd_coherent_extract(args) -> int:
    m = _load_matricube(args.file)
    _emit(jsonio.coherent_to_dict(matroids.coherent_complex_of(m)))
    return 0


def cmd_coherent_check(args) -> int:
    cc = jsonio.coherent_from_obj(jsonio.load_json(_read_text(args.file)))
    violations = matroids.validate_coherent(cc, all_violations=args.all)
    if violations:
        for v in violations:
            print(str(v), file=sys.stderr)
        return 1
    _emit({"ok": True})
    return 0


def cmd_coherent_build(args) -> int:
    cc = jsonio.coherent_from_obj(jsonio.load_json(_read_text(args.file)))
    return _matricube_out(args, matroids.matricube_from_coherent(cc, check_paths=True))


def cmd_natural_polymatroid(args) -> int:
    m = _load_matricube(args.file)
    _emit(jsonio.polymatroid_to_dict(matroids.natural_polymatroid(m)))
    return 0


def cmd_natural_matroid(args) -> int:
    m = _load_matricube(args.file)
    mat = matroids.natural_matroid(matroids.natural_polymatroid(m))
    _emit(jsonio.matroid_to_dict(mat))
    return 0


def cmd_from_flags(args) -> int:
    c = jsonio.cubicalmatrix_from_obj(jsonio.load_json(_read_text(args.file)))
    return _matricube_out(args, represent.matricube_from_flags(c))


def cmd_general_position(args) -> int:
    c = represent.general_position_flags(args.width, args.r, args.p, args.seed)
    _emit(jsonio.cubicalmatrix_to_dict(c))
    return 0


def cmd_perm_from(args) -> int:
    m = _load_matricube(args.file)
    _emit(jsonio.dotarray_to_dict(permarray.permarray_from_matricube(m)))
    return 0


def cmd_perm_to(args) -> int:
    P = jsonio.dotarray_from_obj(jsonio.load_json(_read_text(args.file)))
    return _matricube_out(args, permarray.matricube_from_permarray(P))


def cmd_union_flag_matroids(args) -> int:
    fms = jsonio.flag_matroids_from_obj(jsonio.load_json(_read_text(args.file)))
    return _matricube_out(args, matroids.matricube_from_flag_matroids(fms))


def cmd_enumerate(args) -> int:
    if args.bruteforce:
        if args.simple or args.rank is not None:
            raise MatricubeError("--bruteforce does not combine with --simple/--rank")
        stream = enumeration.bruteforce_matricubes(args.width)
    else:
        stream = enumeration.enumerate_matricubes(
            args.width, simple=args.simple, rank=args.rank
        )
    for m in stream:
        _emit(jsonio.matricube_to_dict(m))
    return 0


def cmd_plot(args) -> int:
    from . import figures

    m = _load_matricube(args.file)
    marked = ()
    if args.highlight == "flats":
        marked = cryptomorph.flats_of(m).flats
    elif args.highlight == "circuits":
        marked = cryptomorph.circuits_of(m).circuits
    elif args.highlight == "independents":
        marked = cryptomorph.independents_of(m).independents
    figures.render_rank_table(m, args.out, highlight=marked)
    _emit({"file": args.out, "highlight": args.highlight})
    return 0


# ---------------------------------------------------------------------------
# parser

def _add_input(p, *, name="file"):
    p.add_argument(name, nargs="?", default="-", help="input file, '-' for stdin")


def _add_grid(p):
    p.add_argument("--grid", action="store_true", help="print a grid instead of JSON")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matricube",
        description="Validate and transform submodular rank tables on hypercuboids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the rank axioms")
    _add_input(p)
    p.add_argument("--all", action="store_true", help="report every violation")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("info", help="width, rank, simpleness, loops, coloops")
    _add_input(p)
    _add_grid(p)
    p.set_defaults(func=cmd_info)

    for name, func, blurb in (
        ("flats", cmd_flats, "points where every step raises the rank"),
        ("circuits", cmd_circuits, "join-irreducible complements of dual flats"),
        ("independents", cmd_independents, "points where every step down drops the rank"),
    ):
        p = sub.add_parser(name, help=blurb)
        _add_input(p)
        _add_grid(p)
        p.set_defaults(func=func)

    p = sub.add_parser("bases", help="basis candidates of a chosen kind")
    _add_input(p)
    p.add_argument(
        "--def",
        dest="kind",
        required=True,
        choices=[k.value for k in transforms.BasisCandidateKind],
        help="which candidate notion to use",
    )
    _add_grid(p)
    p.set_defaults(func=cmd_bases)

    p = sub.add_parser("dual", help="the dual matricube")
    _add_input(p)
    _add_grid(p)
    p.set_defaults(func=cmd_dual)

    for name, func in (("delete", cmd_delete), ("contract", cmd_contract)):
        p = sub.add_parser(name, help=f"{name} the outer layer of one direction")
        _add_input(p)
        p.add_argument("--dir", type=int, required=True, help="direction index, 0-based")
        _add_grid(p)
        p.set_defaults(func=func)

    p = sub.add_parser("minor", help="apply a sequence of deletions and contractions")
    _add_input(p)
    p.add_argument(
        "--ops",
        type=_minor_ops,
        required=True,
        help="comma-separated steps like 'd0,c1'; indices follow the current width",
    )
    _add_grid(p)
    p.set_defaults(func=cmd_minor)

    p = sub.add_parser("sum", help="direct sum with a second matricube")
    _add_input(p)
    p.add_argument("file2", help="second matricube file")
    _add_grid(p)
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("tutte", help="corank-nullity polynomial")
    _add_input(p)
    p.add_argument("--text", action="store_true", help="print as a readable expression")
    p.set_defaults(func=cmd_tutte)

    p = sub.add_parser("local-matroid", help="the matroid on the free directions at a point")
    _add_input(p)
    p.add_argument("--at", type=_comma_ints, required=True, help="point like '1,0'")
    p.set_defaults(func=cmd_local_matroid)

    p = sub.add_parser("coherent", help="coherent complexes of matroids")
    csub = p.add_subparsers(dest="subcommand", required=True)
    c = csub.add_parser("extract", help="matricube to complex")
    _add_input(c)
    c.set_defaults(func=cmd_coherent_extract)
    c = csub.add_parser("check", help="validate a complex")
    _add_input(c)
    c.add_argument("--all", action="store_true", help="report every violation")
    c.set_defaults(func=cmd_coherent_check)
    c = csub.add_parser("build", help="complex to matricube")
    _add_input(c)
    _add_grid(c)
    c.set_defaults(func=cmd_coherent_build)

    p = sub.add_parser("natural", help="the natural polymatroid and matroid")
    nsub = p.add_subparsers(dest="subcommand", required=True)
    n = nsub.add_parser("polymatroid", help="one element per axis point")
    _add_input(n)
    n.set_defaults(func=cmd_natural_polymatroid)
    n = nsub.add_parser("matroid", help="axis points expanded into singleton-rank copies")
    _add_input(n)
    n.set_defaults(func=cmd_natural_matroid)

    p = sub.add_parser("from-flags", help="rank table of a cubical matrix")
    _add_input(p)
    _add_grid(p)
    p.set_defaults(func=cmd_from_flags)

    p = sub.add_parser("general-position", help="seeded random cubical matrix over GF(p)")
    p.add_argument("--width", type=_comma_ints, required=True, help="box width like '4,3'")
    p.add_argument("--r", type=int, required=True, help="ambient dimension / target rank")
    p.add_argument("--p", type=int, required=True, help="prime modulus")
    p.add_argument("--seed", type=int, required=True, help="RNG seed (no implicit seeding)")
    p.set_defaults(func=cmd_general_position)

    p = sub.add_parser("perm", help="permutation arrays on hypercubes")
    psub = p.add_subparsers(dest="subcommand", required=True)
    q = psub.add_parser("from", help="matricube to dot array (input: a simple matricube)")
    _add_input(q)
    q.set_defaults(func=cmd_perm_from)
    q = psub.add_parser("to", help="dot array to matricube (input: a dot array)")
    _add_input(q)
    _add_grid(q)
    q.set_defaults(func=cmd_perm_to)

    p = sub.add_parser("union-flag-matroids", help="matricube of a flag matroid collection")
    _add_input(p)
    _add_grid(p)
    p.set_defaults(func=cmd_union_flag_matroids)

    p = sub.add_parser("enumerate", help="stream every matricube on a box, one per line")
    p.add_argument("--width", type=_comma_ints, required=True, help="box width like '2,2'")
    p.add_argument("--simple", action="store_true", help="only simple matricubes")
    p.add_argument("--rank", type=int, default=None, help="only this global rank")
    p.add_argument(
        "--bruteforce",
        action="store_true",
        help="use the slow product-filter oracle instead of the search",
    )
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("plot", help="render the rank table to an image file")
    _add_input(p)
    p.add_argument("--out", required=True, help="output image path")
    p.add_argument(
        "--highlight",
        choices=["flats", "circuits", "independents"],
        default=None,
        help="accent these points in the figure",
    )
    p.set_defaults(func=cmd_plot)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except jsonio.FormatError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except AxiomError as e:
        for v in e.violations:
            print(str(v), file=sys.stderr)
        return 1
    except (MatricubeError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
