"""Command-line front end.

Exit codes: 0 success, 1 negative mathematical verdict (with a
machine-readable certificate on stdout), 2 usage error, 3 computational
guard exceeded.  JSON is the default machine output; --svg/--figure flags
write picture files.  All randomized commands are fully determined by
--seed.  TILINGS_THREADS sets the default worker count for sample batches.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import counting, dominoes, exact_cover, obstructions, rectangles, render, squared
from .errors import GuardLimitExceeded, PrecisionError
from .lattice import (
    Lattice,
    Region,
    TileShape,
    build_aztec,
    build_rectangle,
    build_triangle,
    domino,
    domino_tiling_from_json,
    parse_region,
    rectangle_tile,
    region_from_json,
    remove_cells,
    tiling_to_json,
)

GUARD_EXIT = 3
NEGATIVE_EXIT = 1


def _emit(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True))


def _add_region_args(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--rect", nargs=2, type=int, metavar=("ROWS", "COLS"))
    group.add_argument("--aztec", type=int, metavar="ORDER")
    group.add_argument("--triangle", type=int, metavar="N")
    group.add_argument("--region", metavar="FILE",
                       help="region file, '#'/'.' text or JSON")
    parser.add_argument("--lattice", choices=["square", "hex"], default="square",
                        help="lattice for text region files")
    parser.add_argument("--remove", metavar="CELLS", default=None,
                        help="cells to remove, e.g. '0,0;7,7'")


def _build_region(args) -> Region:
    if args.rect:
        region = build_rectangle(*args.rect)
    elif args.aztec is not None:
        region = build_aztec(args.aztec)
    elif args.triangle is not None:
        region = build_triangle(args.triangle)
    else:
        with open(args.region) as fh:
            text = fh.read()
        if text.lstrip().startswith("{"):
            region = region_from_json(text)
        else:
            region = parse_region(text, Lattice(args.lattice))
    if args.remove:
        cells = []
        for part in args.remove.split(";"):
            r, c = part.split(",")
            cells.append((int(r), int(c)))
        region = remove_cells(region, cells)
    return region


def _add_tile_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--tile", action="append", default=None, metavar="SPEC",
                        help="domino, AxB, pentominoes, tribone, or tribone-line; "
                             "repeatable")


def _parse_tiles(specs: list[str] | None) -> list[TileShape]:
    shapes: list[TileShape] = []
    for spec in specs or ["domino"]:
        if spec == "domino":
            shapes.append(domino())
        elif spec == "pentominoes":
            shapes.extend(exact_cover.pentomino_catalog())
        elif spec == "tribone":
            shapes.append(obstructions.TRIBONE_TRIANGLE)
        elif spec == "tribone-line":
            shapes.append(obstructions.TRIBONE_LINE)
        elif "x" in spec:
            a, b = spec.split("x")
            shapes.append(rectangle_tile(int(a), int(b)))
        else:
            raise ValueError(f"unknown tile spec {spec!r}")
    return shapes


def _write_file(path: str, content: str) -> None:
    with open(path, "w") as fh:
        fh.write(content)


def _threads(args) -> int:
    if getattr(args, "threads", None):
        return args.threads
    return int(os.environ.get("TILINGS_THREADS", "1"))


# ---------------------------------------------------------------------------
# Subcommands


def _cmd_count(args) -> int:
    region = _build_region(args)
    shapes = _parse_tiles(args.tile)
    if args.canonical:
        group = exact_cover.square_point_group(region)
        options = exact_cover.SolveOptions(
            multiplicity=exact_cover.Multiplicity.ONCE_EACH if args.once_each
            else exact_cover.Multiplicity.UNLIMITED,
            group=group)
        orbits = exact_cover.canonical_orbits(region, shapes, options, guard=args.guard)
        print(orbits.canonical)
        return 0
    if (not args.once_each and len(shapes) == 1 and shapes[0].name == "domino"
            and region.lattice is Lattice.SQUARE):
        print(counting.count_domino_tilings(region, args.max_frontier))
        return 0
    options = exact_cover.SolveOptions(
        multiplicity=exact_cover.Multiplicity.ONCE_EACH if args.once_each
        else exact_cover.Multiplicity.UNLIMITED,
        limit=args.guard + 1)
    count = exact_cover.count_tilings(region, shapes, options)
    if count > args.guard:
        raise GuardLimitExceeded(f"more than {args.guard} tilings")
    print(count)
    return 0


def _cmd_sample(args) -> int:
    region = _build_region(args)
    if args.aztec is not None and not args.remove:
        tiling = counting.aztec_sample(args.aztec, args.seed)
    else:
        tiling = counting.sample_tiling(region, args.seed, max_frontier=args.max_frontier)
    if args.svg:
        _write_file(args.svg, render.svg_tiling(tiling))
    print(tiling_to_json(tiling))
    return 0


def _one_arctic_sample(order: int, seed: int, index: int) -> float:
    return counting.arctic_statistic(counting.aztec_sample(order, seed, index))


def _cmd_arctic(args) -> int:
    threads = _threads(args)
    orders = args.order
    indices = list(range(args.samples))
    per_order: dict[int, list[float]] = {}
    for order in orders:
        jobs = [(order, args.seed, i) for i in indices]
        if threads > 1:
            import multiprocessing

            with multiprocessing.get_context("fork").Pool(threads) as pool:
                per_order[order] = pool.starmap(_one_arctic_sample, jobs)
        else:
            per_order[order] = [_one_arctic_sample(*job) for job in jobs]
    print("order,sample,frozen_fraction")
    for order in orders:
        for i, v in enumerate(per_order[order]):
            print(f"{order},{i},{v:.6f}")
    means, stderrs = [], []
    for order in orders:
        values = per_order[order]
        mean = sum(values) / len(values)
        var = sum((v - mean) ** 2 for v in values) / max(1, len(values) - 1)
        se = (var / len(values)) ** 0.5
        means.append(mean)
        stderrs.append(se)
        print(f"order={order} mean={mean:.6f} stderr={se:.6f} n={len(values)}",
              file=sys.stderr)
    if args.figure:
        from . import report

        report.save_aztec_figure(
            counting.aztec_sample(orders[-1], args.seed, indices[-1]), args.figure)
    if args.trend_figure:
        from . import report

        report.save_frozen_trend_figure(orders, means, stderrs, args.trend_figure)
    return 0


def _cmd_certify(args) -> int:
    region = _build_region(args)
    tiling = dominoes.matching_tiling(region)
    if tiling is not None:
        payload = json.loads(tiling_to_json(tiling))
        payload["tileable"] = True
        _emit(payload)
        return 0
    violator = dominoes.hall_certificate(region)
    payload = json.loads(violator.to_json())
    payload["tileable"] = False
    _emit(payload)
    return NEGATIVE_EXIT


def _cmd_gomory(args) -> int:
    try:
        tiling = dominoes.gomory_tiling(args.rows, args.cols,
                                        tuple(args.hole1), tuple(args.hole2))
    except dominoes.PathTilerError as exc:
        _emit({"error": exc.code, "message": str(exc)})
        return NEGATIVE_EXIT
    if args.svg:
        _write_file(args.svg, render.svg_tiling(tiling))
    print(tiling_to_json(tiling))
    return 0


def _cmd_flips_components(args) -> int:
    region = _build_region(args)
    components = dominoes.flip_components(region, guard=args.guard)
    _emit({"tilings": sum(len(c) for c in components),
           "components": [len(c) for c in components]})
    return 0


def _cmd_flips_distance(args) -> int:
    region = _build_region(args)
    with open(args.t1) as fh:
        t1 = domino_tiling_from_json(fh.read())
    with open(args.t2) as fh:
        t2 = domino_tiling_from_json(fh.read())
    distance = dominoes.flip_distance(region, t1, t2)
    if distance == dominoes.UNREACHABLE:
        _emit({"distance": None, "reachable": False})
        return NEGATIVE_EXIT
    _emit({"distance": int(distance), "reachable": True})
    return 0


def _cmd_solve(args) -> int:
    region = _build_region(args)
    shapes = _parse_tiles(args.tile)
    options = exact_cover.SolveOptions(
        multiplicity=exact_cover.Multiplicity.ONCE_EACH if args.once_each
        else exact_cover.Multiplicity.UNLIMITED)
    tiling = exact_cover.find_tiling(region, shapes, options)
    if tiling is None:
        _emit({"found": False})
        return NEGATIVE_EXIT
    if args.svg:
        _write_file(args.svg, render.svg_tiling(tiling))
    print(tiling_to_json(tiling))
    return 0


def _cmd_decide_rect(args) -> int:
    decision = rectangles.debruijn_klarner(args.m, args.n, args.a, args.b)
    print(decision.to_json())
    return 0 if decision.tileable else NEGATIVE_EXIT


def _cmd_similar(args) -> int:
    if args.poly:
        coeffs = [int(x) for x in args.poly.split(",")]
        decision = rectangles.similar_rect_square_tileable(coeffs)
        print(decision.to_json())
        return 0 if decision.tileable else NEGATIVE_EXIT
    if args.cube_family:
        r, s = args.cube_family
        decision = rectangles.cube_root_family(r, s)
        payload = json.loads(decision.to_json())
        payload["inequality_holds"] = 4 * r ** 3 > s ** 3
        _emit(payload)
        return 0 if decision.tileable else NEGATIVE_EXIT
    layout = rectangles.find_similar_guillotine_tiling(args.construct, args.max_pieces)
    if layout is None:
        _emit({"found": False})
        return NEGATIVE_EXIT
    print(layout.to_json())
    return 0


def _cmd_squared(args) -> int:
    with open(args.layout) as fh:
        layout = squared.layout_from_json(fh.read())
    if args.action == "resistance":
        print(squared.total_resistance(squared.to_smith_network(layout)))
        return 0
    try:
        solution = squared.solve_layout(layout)
    except squared.LayoutError as exc:
        _emit({"error": exc.code, "message": str(exc)})
        return NEGATIVE_EXIT
    network = squared.to_smith_network(layout)
    resistance = squared.total_resistance(network)
    payload = json.loads(solution.to_json())
    payload["resistance"] = str(resistance)
    payload["kirchhoff"] = squared.validate_kirchhoff(network, solution.sides)
    payload["perfect"] = squared.is_perfect(solution.sides)
    payload["squared_square"] = squared.is_squared_square(solution)
    _emit(payload)
    if args.svg:
        placed = squared.reconstruct_geometry(layout, solution)
        _write_file(args.svg, render.svg_squared(placed, solution.width, solution.height))
    return 0


def _cmd_render(args) -> int:
    if args.tiling:
        with open(args.tiling) as fh:
            tiling = domino_tiling_from_json(fh.read())
        content = render.svg_tiling(tiling)
    elif args.layout:
        with open(args.layout) as fh:
            layout = squared.layout_from_json(fh.read())
        solution = squared.solve_layout(layout)
        placed = squared.reconstruct_geometry(layout, solution)
        content = render.svg_squared(placed, solution.width, solution.height)
    else:
        content = render.svg_region(_build_region(args))
    _write_file(args.out, content)
    print(args.out)
    return 0


def _cmd_constants(args) -> int:
    from mpmath import mp

    tol = 10.0 ** (-args.digits - 2)
    g = counting.catalan_constant(tol)
    c = counting.square_dof_constant(tol)
    aztec = counting.dof_per_square(4, 2)  # 2^(1/4), any diamond gives the same
    with mp.workdps(args.digits + 8):
        _emit({
            "catalan": mp.nstr(g, args.digits),
            "square_dof": mp.nstr(c, args.digits),
            "aztec_dof": mp.nstr(aztec, args.digits),
        })
    return 0


# ---------------------------------------------------------------------------
# Parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tilings",
        description="Exact tiling algorithms: counting, sampling, certificates, layouts.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count tilings of a region by a tile set")
    _add_region_args(p)
    _add_tile_args(p)
    p.add_argument("--once-each", action="store_true")
    p.add_argument("--canonical", action="store_true",
                   help="count up to the region's grid symmetries")
    p.add_argument("--guard", type=int, default=10 ** 7)
    p.add_argument("--max-frontier", type=int, default=counting.MAX_FRONTIER)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("sample", help="draw one exactly uniform domino tiling")
    _add_region_args(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--svg", metavar="FILE")
    p.add_argument("--max-frontier", type=int, default=counting.MAX_FRONTIER)
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("arctic", help="frozen-fraction report for diamond samples")
    p.add_argument("--order", type=int, required=True, action="append",
                   help="diamond order; repeat for a multi-order report")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--figure", metavar="FILE",
                   help="write a picture of the last sampled tiling (matplotlib)")
    p.add_argument("--trend-figure", metavar="FILE",
                   help="write frozen fraction against order (matplotlib)")
    p.set_defaults(func=_cmd_arctic)

    p = sub.add_parser("certify", help="domino tiling or a Hall-violator certificate")
    _add_region_args(p)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("gomory", help="closed-path tiling of a board minus two holes")
    p.add_argument("rows", type=int)
    p.add_argument("cols", type=int)
    p.add_argument("hole1", nargs=2, type=int, metavar=("R1", "C1"))
    p.add_argument("hole2", nargs=2, type=int, metavar=("R2", "C2"))
    p.add_argument("--svg", metavar="FILE")
    p.set_defaults(func=_cmd_gomory)

    p = sub.add_parser("flips", help="flip-graph structure of domino tilings")
    flips_sub = p.add_subparsers(dest="flips_command", required=True)
    pc = flips_sub.add_parser("components")
    _add_region_args(pc)
    pc.add_argument("--guard", type=int, default=200000)
    pc.set_defaults(func=_cmd_flips_components)
    pd = flips_sub.add_parser("distance")
    _add_region_args(pd)
    pd.add_argument("--t1", required=True, metavar="FILE")
    pd.add_argument("--t2", required=True, metavar="FILE")
    pd.set_defaults(func=_cmd_flips_distance)

    p = sub.add_parser("solve", help="find one tiling by exact cover")
    _add_region_args(p)
    _add_tile_args(p)
    p.add_argument("--once-each", action="store_true")
    p.add_argument("--svg", metavar="FILE")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("decide-rect", help="can a x b bricks tile an m x n box")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(func=_cmd_decide_rect)

    p = sub.add_parser("similar", help="square tilable by rectangles similar to 1 x x")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--poly", metavar="C0,C1,...",
                       help="integer coefficients, constant term first")
    group.add_argument("--cube-family", nargs=2, type=int, metavar=("R", "S"))
    group.add_argument("--construct", type=float, metavar="X",
                       help="search a guillotine layout for ratio X")
    p.add_argument("--max-pieces", type=int, default=5)
    p.set_defaults(func=_cmd_similar)

    p = sub.add_parser("squared", help="solve or analyze a squared-rectangle layout")
    p.add_argument("action", choices=["solve", "resistance"])
    p.add_argument("layout", metavar="LAYOUT_JSON")
    p.add_argument("--svg", metavar="FILE")
    p.set_defaults(func=_cmd_squared)

    p = sub.add_parser("render", help="write an SVG picture")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--tiling", metavar="FILE")
    group.add_argument("--layout", metavar="FILE")
    group.add_argument("--rect", nargs=2, type=int, metavar=("ROWS", "COLS"))
    group.add_argument("--aztec", type=int, metavar="ORDER")
    group.add_argument("--triangle", type=int, metavar="N")
    group.add_argument("--region", metavar="FILE")
    p.add_argument("--lattice", choices=["square", "hex"], default="square")
    p.add_argument("--remove", metavar="CELLS", default=None)
    p.add_argument("--out", required=True, metavar="FILE")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("constants", help="Catalan constant and freedom-per-square values")
    p.add_argument("--digits", type=int, default=12)
    p.set_defaults(func=_cmd_constants)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GuardLimitExceeded as exc:
        _emit({"error": "GUARD_EXCEEDED", "message": str(exc)})
        return GUARD_EXIT
    except PrecisionError as exc:
        _emit({"error": "PRECISION", "message": str(exc)})
        return GUARD_EXIT
    except (ValueError, OSError) as exc:
        code = getattr(exc, "code", "INVALID")
        _emit({"error": code, "message": str(exc)})
        return NEGATIVE_EXIT


if __name__ == "__main__":
    sys.exit(main())
