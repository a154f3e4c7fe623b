"""Command-line entry point: ``rainbowlruc <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys

from .errors import EmptyStream, IncompleteColoring, ParseError, RainbowError
from .generators import (
    FAMILY_NAMES,
    Family,
    format_edge_list,
    make_stream,
    parse_edge_lines,
    read_stream,
)
from .graph import Graph
from .harness import THEOREMS, parse_config, run_instance, sweep, to_csv, verify_theorem
from .lruc import LrucState
from .oracle import SearchBudget, first_failing_pair, rc_exact

# desk-scale n ranges exercised by verify-theorems
THEOREM_RANGES = {
    "T1-line": range(2, 11),
    "T1-tree": range(3, 11),
    "T1-star": range(3, 11),
    "T2-cycle": range(4, 10),
    "T3-wheel": range(8, 10),
    "T4-complete": range(4, 8),
}


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _open_in(path):
    return sys.stdin if path in (None, "-") else open(path)


def _write(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _budget(args) -> SearchBudget:
    return SearchBudget(args.budget_edges, args.budget_seconds)


def _read_graph(path) -> Graph:
    with _open_in(path) as fh:
        stream = read_stream(fh)
    if not stream.edges:
        raise EmptyStream("input contains no edges")
    return stream.graph()


def _family(args) -> Family:
    return Family(args.family, args.n or 0, args.p or 0, args.q or 0,
                  seed=args.seed if args.family == "tree" else None)


def cmd_generate(args) -> int:
    stream = make_stream(_family(args), args.order, args.seed)
    _write(args, format_edge_list(stream))
    return 0


def cmd_color(args) -> int:
    state = LrucState()
    out = sys.stdout
    with _open_in(args.input) as fh:
        for lineno, u, v in parse_edge_lines(fh):
            try:
                color, case = state.observe_edge(u, v)
            except RainbowError as exc:
                raise type(exc)(str(exc), line=lineno) from None
            out.write(_dump({"u": u, "v": v, "color": color, "case": case.value}) + "\n")
            out.flush()
    coloring = state.finish()
    out.write(_dump({"colors_used": coloring.colors_used}) + "\n")
    if args.coloring_out:
        with open(args.coloring_out, "w") as fh:
            fh.write(_dump(coloring.to_json()) + "\n")
    return 0


def cmd_rc(args) -> int:
    result = rc_exact(_read_graph(args.input), _budget(args))
    _write(args, _dump(result.to_json()) + "\n")
    return 0


def _load_coloring(g: Graph, path) -> list:
    try:
        with open(path) as fh:
            data = json.load(fh)
        records = data["edges"]
        by_pair = {}
        for rec in records:
            key = frozenset((str(rec["u"]), str(rec["v"])))
            by_pair[key] = int(rec["color"])
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"bad coloring file {path}: {exc}") from None
    colors = []
    for u, v in g.labelled_edges():
        key = frozenset((str(u), str(v)))
        if key not in by_pair:
            raise IncompleteColoring(f"edge ({u}, {v}) has no color")
        colors.append(by_pair[key])
    return colors


def cmd_check(args) -> int:
    g = _read_graph(args.graph)
    pair = first_failing_pair(g, _load_coloring(g, args.coloring))
    result = {"pass": pair is None, "pair": None if pair is None else list(pair)}
    _write(args, _dump(result) + "\n")
    return 0


def cmd_ratio(args) -> int:
    if args.config:
        with open(args.config) as fh:
            config = parse_config(fh.read())
        reports = sweep(config)
        if config.out and not args.out:
            args.out = config.out
    elif args.family:
        stream = make_stream(_family(args), args.order, args.seed)
        reports = [run_instance(stream, args.oracle, _budget(args))]
    else:
        with _open_in(args.input) as fh:
            stream = read_stream(fh)
        if not stream.edges:
            raise EmptyStream("input contains no edges")
        reports = [run_instance(stream, "exact" if args.oracle == "closed_form" else args.oracle,
                                _budget(args))]
    if args.json:
        _write(args, "".join(_dump(r.to_json()) + "\n" for r in reports))
    else:
        _write(args, to_csv(reports))
    return 0


def cmd_verify(args) -> int:
    ids = args.theorem or list(THEOREMS)
    results = []
    all_ok = True
    for tid in ids:
        n_values = range(args.n_min, args.n_max + 1) if args.n_min else THEOREM_RANGES[tid]
        reports, ok = verify_theorem(tid, n_values, _budget(args))
        all_ok &= ok
        results.append({"theorem": tid, "pass": ok, "instances": [r.to_json() for r in reports]})
    if args.json:
        _write(args, _dump(results) + "\n")
    else:
        lines = [f"{r['theorem']}\t{'PASS' if r['pass'] else 'FAIL'}" for r in results]
        _write(args, "\n".join(lines) + "\n")
    return 0 if all_ok else 1


def _add_budget(p, edges=16):
    p.add_argument("--budget-edges", type=int, default=edges)
    p.add_argument("--budget-seconds", type=float, default=300.0)


def _add_family(p, required):
    p.add_argument("--family", choices=FAMILY_NAMES, required=required)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--order", choices=("adversarial", "random", "natural"), default="adversarial")
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rainbowlruc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a family graph as an edge list")
    _add_family(p, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("color", help="run LRUC over an edge stream")
    p.add_argument("input", nargs="?", help="edge-list file (default: stdin)")
    p.add_argument("--coloring-out", help="also write the final coloring JSON here")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("rc", help="exact rainbow connection number")
    p.add_argument("input", nargs="?")
    p.add_argument("--out")
    _add_budget(p)
    p.set_defaults(func=cmd_rc)

    p = sub.add_parser("check", help="check a coloring for rainbow connectivity")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("--out")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("ratio", help="online/offline ratio for one instance or a sweep")
    source = p.add_mutually_exclusive_group()
    source.add_argument("--config", help="sweep config file")
    source.add_argument("--family", choices=FAMILY_NAMES)
    source.add_argument("--input", help="edge-list file (default: stdin)")
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--order", choices=("adversarial", "random", "natural"), default="adversarial")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--oracle", choices=("exact", "closed_form", "skip"), default="exact")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    _add_budget(p)
    p.set_defaults(func=cmd_ratio)

    p = sub.add_parser("verify-theorems", help="check the competitive-ratio bounds")
    p.add_argument("--theorem", action="append", choices=list(THEOREMS))
    p.add_argument("--n-min", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    # K_7 has 21 edges; its diameter bound of 1 succeeds immediately
    _add_budget(p, edges=21)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n_min", None) is not None and args.n_max is None:
        parser.error("argument --n-min: requires --n-max")
    try:
        return args.func(args)
    except RainbowError as exc:
        record = {"error": exc.code, "message": str(exc)}
        if exc.line is not None:
            record["line"] = exc.line
        sys.stderr.write(_dump(record) + "\n")
        return 1
    except OSError as exc:
        sys.stderr.write(_dump({"error": "io_error", "message": str(exc)}) + "\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
