"""Command line: ``pachner {tn,explore,classify,volume}``.

Exit codes: 0 success, 1 usage or input error, 2 internal inconsistency.
"""

import argparse
import csv
import json
import sys

from . import explorer, seeds
from .shapes import (
    Classification,
    DegenerateShape,
    NonIntegerWinding,
    ShapeAssignment,
    check_edge_consistency,
    classify,
    tn_closed_form,
)
from .volume import volume_series, volume_total

EXIT_OK, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _positive(minimum):
    def parse(text):
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be >= {minimum}, got {value}")
        return value
    return parse


def build_parser():
    parser = _Parser(prog="pachner", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    tn = sub.add_parser("tn", help="generate T_n with exact shapes")
    tn.add_argument("--n", type=_positive(2), required=True)
    tn.add_argument("--json", dest="json_out")
    tn.add_argument("--table", help="write the gluing table of T_n as JSON")

    ex = sub.add_parser("explore", help="breadth-first search of the Pachner graph")
    ex.add_argument("--seed", default="fig8")
    ex.add_argument("--depth", type=_positive(0))
    ex.add_argument("--max-tets", type=_positive(2))
    ex.add_argument("--geometric-only", action="store_true")
    ex.add_argument("--include-32", action="store_true")
    ex.add_argument("--orientation-preserving", action="store_true",
                    help="identify triangulations only by orientation-preserving maps")
    ex.add_argument("--json", dest="json_out")
    ex.add_argument("--dot")
    ex.add_argument("--csv")

    cl = sub.add_parser("classify", help="edge consistency and classification of a seed")
    cl.add_argument("--seed", default="fig8")
    cl.add_argument("--json", dest="json_out")

    vol = sub.add_parser("volume", help="volume of a seed or partial sums of the T_n series")
    group = vol.add_mutually_exclusive_group()
    group.add_argument("--seed")
    group.add_argument("--series", type=_positive(1), metavar="M")
    vol.add_argument("--trace", type=_positive(1), default=None,
                     help="print every k-th partial sum of the series")
    vol.add_argument("--csv")
    return parser


def _check_outputs(args):
    paths = [p for p in (getattr(args, "json_out", None), getattr(args, "dot", None),
                         getattr(args, "csv", None), getattr(args, "table", None)) if p]
    if len(paths) != len(set(paths)):
        raise UsageError("output paths must be distinct")


def _write(path, text):
    with open(path, "w", newline="") as fh:
        fh.write(text)


def cmd_tn(args, out):
    tri, shapes = explorer.generate_tn(args.n)
    cls = classify(shapes)
    vol = volume_total(shapes)
    pair, extra = tn_closed_form(args.n - 2)
    closed_ok = list(shapes) == [pair, pair] + extra
    lemma = explorer.verify_lemma_conditions(tri, shapes)
    for i, z in enumerate(shapes):
        print(f"tet {i}: {z}", file=out)
    print(f"classification: {cls}", file=out)
    print(f"volume: {vol:.12f}", file=out)
    print(f"closed form: {'ok' if closed_ok else 'MISMATCH'}", file=out)
    if args.json_out:
        _write(args.json_out, json.dumps({
            "n": args.n,
            "shapes": [str(z) for z in shapes],
            "classification": str(cls),
            "volume": f"{vol:.12f}",
            "closedForm": closed_ok,
            "lemma": lemma._asdict(),
        }, indent=2) + "\n")
    if args.table:
        _write(args.table, json.dumps(seeds.to_json_table(tri, shapes=shapes), indent=2) + "\n")
    if cls is not Classification.GEOMETRIC or not closed_ok or not lemma.holds:
        return EXIT_INTERNAL
    return EXIT_OK


def cmd_explore(args, out):
    tri, shapes = seeds.load_seed(args.seed)
    policy = explorer.ExplorePolicy(
        max_depth=args.depth,
        max_tets=args.max_tets,
        geometric_only=args.geometric_only,
        include_32=args.include_32,
        orientation_preserving=args.orientation_preserving,
    )
    if not args.geometric_only and args.depth is None and args.max_tets is None:
        raise UsageError("an unrestricted search needs --depth or --max-tets")
    graph = explorer.explore(tri, shapes, policy)
    special = {}
    if args.seed == "fig8":
        largest = max(node.tets for node in graph.nodes.values())
        special = explorer.tn_signatures(largest, args.orientation_preserving)
    explorer.name_nodes(graph, special, prime=args.seed == "fig8-sister")
    rows, dot, js = explorer.report(graph)
    print("tets  class  count", file=out)
    for n, letter, count in rows:
        print(f"{n:>4}  {letter:>5}  {count:>5}", file=out)
    print(f"nodes: {len(graph.nodes)}  moves: {sum(graph.edges.values())}", file=out)
    if args.dot:
        _write(args.dot, dot)
    if args.json_out:
        _write(args.json_out, js)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["tets", "class", "count"])
            writer.writerows(rows)
    if graph.path_conflicts:
        print(f"path-dependent shapes at {len(graph.path_conflicts)} nodes", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


def cmd_classify(args, out):
    tri, shapes = seeds.load_seed(args.seed)
    report = check_edge_consistency(tri, shapes)
    cls = classify(shapes)
    for i, e in enumerate(report.edges):
        print(f"edge {i}: degree {e.edge.degree}, product {e.product}, winding {e.winding}", file=out)
    print(f"classification: {cls}", file=out)
    if args.json_out:
        _write(args.json_out, json.dumps({
            "tets": tri.size,
            "shapes": [str(z) for z in shapes],
            "edges": [{"degree": e.edge.degree, "product": str(e.product), "winding": e.winding}
                      for e in report.edges],
            "consistent": report.consistent,
            "classification": str(cls),
            "volume": f"{volume_total(shapes):.12f}",
        }, indent=2) + "\n")
    return EXIT_OK if report.consistent else EXIT_INTERNAL


def cmd_volume(args, out):
    if args.series is None:
        tri, shapes = seeds.load_seed(args.seed or "fig8")
        print(f"{volume_total(shapes):.12f}", file=out)
        return EXIT_OK
    fig8 = seeds.fig8()
    target = volume_total(seeds.regular_shapes(fig8))
    sums = volume_series(args.series)
    step = args.trace or max(1, args.series // 10)
    rows = []
    for k, s in enumerate(sums, start=1):
        if k % step == 0 or k == len(sums) or k == 1:
            rows.append((k, s, target - s))
    print("     M  partial sum       residual", file=out)
    for k, s, r in rows:
        print(f"{k:>6}  {s:.12f}  {r:.3e}", file=out)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["M", "partial", "residual"])
            writer.writerows((k, f"{s:.12f}", f"{r:.6e}") for k, s, r in rows)
    if any(b <= a for a, b in zip(sums, sums[1:])):
        return EXIT_INTERNAL
    return EXIT_OK


COMMANDS = {"tn": cmd_tn, "explore": cmd_explore, "classify": cmd_classify, "volume": cmd_volume}


def main(argv=None, out=None):
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        _check_outputs(args)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (seeds.SeedError, DegenerateShape, NonIntegerWinding, OSError) as exc:
        print(f"pachner: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
