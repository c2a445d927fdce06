"""Command-line front end: tree listings, weight tables, formulas, oracle runs.

Data goes to stdout (or ``--output``); diagnostics go to stderr.  The
``machine`` style emits JSON, with formula terms additionally carrying the
stable parenthesized term grammar.  Output is byte-identical for identical
arguments and seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .enumeration import Regime, enumerate_graphs
from .formulas import render_derivative
from .skeletons import Skeleton, SkeletonSyntaxError, parse_skeleton
from .trees import format_tree
from .verify import verify
from .weights import weigh

DEFAULT_MAX_ORDER = 10


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="derivgraph",
        description="Virtual-graph calculus for higher derivatives of "
        "composed, inverse and ODE-flow functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--regime", required=True, choices=[r.value for r in Regime]
        )
        p.add_argument("--order", "-n", required=True, type=int)
        p.add_argument(
            "--skeleton",
            help="composite-regime skeleton, inline like 'f(g(x))' or @file",
        )
        p.add_argument("--output", help="write data here instead of stdout")
        p.add_argument(
            "--max-order",
            type=int,
            default=DEFAULT_MAX_ORDER,
            help=f"enumeration guard, default {DEFAULT_MAX_ORDER}",
        )

    p_trees = sub.add_parser("trees", help="list canonical trees in natural order")
    common(p_trees)
    p_trees.add_argument("--style", choices=["text", "machine"], default="text")

    p_table = sub.add_parser("table", help="tree, S, tau, sign and weight columns")
    common(p_table)
    p_table.add_argument("--style", choices=["text", "machine"], default="text")

    p_formula = sub.add_parser("formula", help="emit the symbolic derivative")
    common(p_formula)
    p_formula.add_argument("--style", choices=["text", "latex", "machine"], default="text")

    p_verify = sub.add_parser("verify", help="compare graphs against the jet oracle")
    common(p_verify)
    p_verify.add_argument("--style", choices=["text", "machine"], default="text")
    p_verify.add_argument("--trials", type=int, default=20)
    p_verify.add_argument("--seed", type=int, default=0)
    return parser


class _CliError(Exception):
    pass


def _load_skeleton(args: argparse.Namespace, regime: Regime) -> Skeleton | None:
    if regime is not Regime.COMPOSITE:
        return None
    if not args.skeleton:
        raise _CliError("the composite regime requires --skeleton")
    text = args.skeleton
    if text.startswith("@"):
        try:
            text = Path(text[1:]).read_text().strip()
        except OSError as exc:
            raise _CliError(f"cannot read skeleton file: {exc}") from exc
    try:
        return parse_skeleton(text)
    except SkeletonSyntaxError as exc:
        raise _CliError(f"bad skeleton syntax: {exc}") from exc


def _check_order(args: argparse.Namespace) -> None:
    if args.order < 1:
        raise _CliError("order must be >= 1")
    if args.order > args.max_order:
        raise _CliError(
            f"order {args.order} exceeds the supported limit {args.max_order}; "
            "raise it explicitly with --max-order"
        )


def _emit(args: argparse.Namespace, data: str) -> None:
    if args.output:
        Path(args.output).write_text(data)
    else:
        sys.stdout.write(data)


def _cmd_trees(args: argparse.Namespace) -> int:
    regime = Regime(args.regime)
    skeleton = _load_skeleton(args, regime)
    graphs = enumerate_graphs(regime, args.order, skeleton)
    lines = [format_tree(g.tree) for g in graphs]
    if args.style == "machine":
        payload = {"regime": regime.value, "order": args.order, "trees": lines}
        _emit(args, json.dumps(payload, indent=2) + "\n")
    else:
        _emit(args, "".join(line + "\n" for line in lines))
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    regime = Regime(args.regime)
    skeleton = _load_skeleton(args, regime)
    rows = []
    for graph in enumerate_graphs(regime, args.order, skeleton):
        wg = weigh(graph)
        tau = wg.summary.complexity if regime is Regime.ODE else 1
        rows.append(
            {
                "tree": format_tree(graph.tree),
                "S": wg.summary.symmetry,
                "tau": tau,
                "sign": wg.sign,
                "weight": str(wg.weight),
            }
        )
    if args.style == "machine":
        payload = {"regime": regime.value, "order": args.order, "rows": rows}
        _emit(args, json.dumps(payload, indent=2) + "\n")
        return 0
    headers = ["tree", "S", "tau", "sign", "weight"]
    table = [headers] + [
        [row["tree"], str(row["S"]), str(row["tau"]), f"{row['sign']:+d}", row["weight"]]
        for row in rows
    ]
    widths = [max(len(line[i]) for line in table) for i in range(len(headers))]
    rendered = "".join(
        "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(line)).rstrip() + "\n"
        for line in table
    )
    _emit(args, rendered)
    return 0


def _cmd_formula(args: argparse.Namespace) -> int:
    regime = Regime(args.regime)
    skeleton = _load_skeleton(args, regime)
    formula = render_derivative(regime, args.order, args.style, skeleton)
    if args.style == "machine":
        payload = {
            "regime": regime.value,
            "order": args.order,
            "terms": [
                {
                    "sign": term.sign,
                    "weight": str(term.weight),
                    "tree": format_tree(term.graph.graph.tree) if term.graph else None,
                    "machine": term.text,
                }
                for term in formula.terms
            ],
        }
        _emit(args, json.dumps(payload, indent=2) + "\n")
    else:
        _emit(args, str(formula) + "\n")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    regime = Regime(args.regime)
    skeleton = _load_skeleton(args, regime)
    if args.trials < 1:
        raise _CliError("trials must be >= 1")
    report = verify(regime, args.order, args.trials, args.seed, skeleton)
    if args.style == "machine":
        _emit(args, json.dumps(report.to_dict(), indent=2) + "\n")
    else:
        _emit(args, report.to_text() + "\n")
    return 0 if report.passed else 1


_COMMANDS = {
    "trees": _cmd_trees,
    "table": _cmd_table,
    "formula": _cmd_formula,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        _check_order(args)
        return _COMMANDS[args.command](args)
    except (_CliError, ValueError) as exc:
        print(f"derivgraph: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
