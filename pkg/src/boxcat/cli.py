"""Command-line surface.

Exit codes: 0 on success, 1 when a property check fails (the witness is
printed), 2 on usage or file-format errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import classify as classify_mod
from .checks import CheckReport, check_adjunction, property_table
from .formats import (
    FormatError,
    dumps_graph,
    emit_classification,
    emit_table,
    graph_to_dot,
    loads_graph,
    loads_seed,
    map_name,
    pair_names,
)
from .graphs import are_isomorphic, enumerate_maps, graph_universe
from .kan import check_finality, lan_class_pairs, lan_colimit
from .products import HomKind, ProductKind, internal_hom, product

__all__ = ["run_command", "main"]


def _load_graph(path: str):
    try:
        return loads_graph(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc


def _load_seed(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    return loads_seed(text, description=Path(path).stem)


def _write_or_print(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _cmd_product(args: argparse.Namespace) -> int:
    kind = ProductKind(args.kind)
    x, xnames = _load_graph(args.left)
    y, ynames = _load_graph(args.right)
    result = product(kind, x, y)
    names = pair_names(xnames, ynames)
    if args.dot:
        _write_or_print(graph_to_dot(result, names), args.dot)
    if args.output or not args.dot:
        _write_or_print(dumps_graph(result, names), args.output)
    return 0


def _cmd_hom(args: argparse.Namespace) -> int:
    kind = HomKind(args.kind)
    x, xnames = _load_graph(args.left)
    y, ynames = _load_graph(args.right)
    hom = internal_hom(kind, x, y)
    names = [map_name(m.mapping, xnames, ynames) for m in hom.maps]
    _write_or_print(dumps_graph(hom.graph, names), args.output)
    return 0


def _cmd_maps(args: argparse.Namespace) -> int:
    x, xnames = _load_graph(args.left)
    y, ynames = _load_graph(args.right)
    maps = enumerate_maps(x, y)
    print(len(maps))
    for m in maps:
        print(map_name(m.mapping, xnames, ynames))
    return 0


def _cmd_iso(args: argparse.Namespace) -> int:
    x, xnames = _load_graph(args.left)
    y, ynames = _load_graph(args.right)
    witness = are_isomorphic(x, y)
    if witness is None:
        print("non-isomorphic")
        return 1
    for v, w in enumerate(witness.forward.mapping):
        print(f"{xnames[v]} -> {ynames[w]}")
    return 0


def _cmd_lan(args: argparse.Namespace) -> int:
    seed, _ = _load_seed(args.seed)
    x, xnames = _load_graph(args.left)
    y, ynames = _load_graph(args.right)
    diagram, colim = lan_colimit(seed, x, y)
    pairs = lan_class_pairs(seed, diagram, colim)
    names = [
        f"({xnames[p[0]]},{ynames[p[1]]})" if p is not None else f"c{k}"
        for k, p in enumerate(pairs)
    ]
    _write_or_print(dumps_graph(colim.quotient, names), args.output)
    return 0


def _cmd_check_table(args: argparse.Namespace) -> int:
    report = property_table(args.max_n)
    sys.stdout.write(emit_table(report, args.format))
    return 0


def _fail_with_witness(report: CheckReport) -> int:
    print("FAIL", file=sys.stderr)
    print(json.dumps(report.to_json(), indent=2, sort_keys=True), file=sys.stderr)
    return 1


def _cmd_check_adjunction(args: argparse.Namespace) -> int:
    kind = HomKind(args.kind)
    universe = graph_universe(args.max_n)
    triples = [(x, y, z) for x in universe for y in universe for z in universe]
    report = check_adjunction(kind, triples)
    if not report.passed:
        return _fail_with_witness(report)
    print(f"adjunction[{kind.value}] holds on all triples up to {args.max_n} vertices")
    return 0


def _cmd_check_finality(args: argparse.Namespace) -> int:
    seed, _ = _load_seed(args.seed)
    universe = graph_universe(args.max_n)
    for x in universe:
        for y in universe:
            if not check_finality(seed, x, y):
                print("FAIL", file=sys.stderr)
                print(
                    json.dumps(
                        {
                            "x": {"n": x.n, "edges": sorted(map(list, x.edges))},
                            "y": {"n": y.n, "edges": sorted(map(list, y.edges))},
                        },
                        sort_keys=True,
                    ),
                    file=sys.stderr,
                )
                return 1
    print(f"finality holds on all pairs up to {args.max_n} vertices")
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    seeds = classify_mod.enumerate_labelled_seeds()
    seeds += classify_mod.enumerate_merged_label_seeds()
    seeds.append(classify_mod.inv_sigma_seed())
    if args.seeds:
        for path in sorted(Path(args.seeds).glob("*.json")):
            seed, _ = loads_seed(path.read_text(encoding="utf-8"), description=path.stem)
            seeds.append(seed)
    if args.tests:
        tests = [
            loads_graph(path.read_text(encoding="utf-8"))[0]
            for path in sorted(Path(args.tests).glob("*.json"))
        ]
    else:
        tests = classify_mod.default_test_graphs()
    report = classify_mod.classify_seeds(seeds, tests)
    sys.stdout.write(emit_classification(report, args.format))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boxcat",
        description="Graph products, internal homs, Kan-extension colimits, "
        "and monoidal-structure checks for finite reflexive graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("product", help="compute a product of two graphs")
    p.add_argument("--kind", required=True, choices=[k.value for k in ProductKind])
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("-o", "--output")
    p.add_argument("--dot")
    p.set_defaults(func=_cmd_product)

    p = sub.add_parser("hom", help="compute an internal hom graph")
    p.add_argument("--kind", required=True, choices=[k.value for k in HomKind])
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_hom)

    p = sub.add_parser("maps", help="list all graph maps between two graphs")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=_cmd_maps)

    p = sub.add_parser("iso", help="search for an isomorphism")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser("lan", help="evaluate a seed's Kan-extension product")
    p.add_argument("--seed", required=True)
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_lan)

    check = sub.add_parser("check", help="run property checks")
    check_sub = check.add_subparsers(dest="check_command", required=True)

    p = check_sub.add_parser("table", help="emit the product property table")
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    p.add_argument("--format", default="md", choices=["md", "csv", "json"])
    p.set_defaults(func=_cmd_check_table)

    p = check_sub.add_parser("adjunction", help="check the currying adjunction")
    p.add_argument("--kind", required=True, choices=[k.value for k in HomKind])
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    p.set_defaults(func=_cmd_check_adjunction)

    p = check_sub.add_parser("finality", help="compare edge and full comma colimits")
    p.add_argument("--seed", required=True)
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    p.set_defaults(func=_cmd_check_finality)

    p = sub.add_parser("classify", help="run the candidate-product classification")
    p.add_argument("--seeds", help="directory of extra seed JSON files")
    p.add_argument("--tests", help="directory of test graph JSON files")
    p.add_argument("--format", default="md", choices=["md", "json"])
    p.set_defaults(func=_cmd_classify)

    return parser


def run_command(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))
