"""``forcelab`` command-line front end.

Exit status: 2 on usage errors, 1 when a verified claim fails or a solve
runs out of budget without an answer, 0 otherwise.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import families
from .forcing import is_leaky_forcing_set
from .graph import GraphError, members, parse_edge_list
from .solver import (
    DEFAULT_BUDGET_EVALS,
    DEFAULT_BUDGET_SECS,
    BudgetExceeded,
    containment_question,
    min_leaky_forcing,
    nested_chain,
)
from .verify import FAIL, run_suite, SUITES

log = logging.getLogger("forcelab")


class UsageError(Exception):
    pass


def _graph_options(p: argparse.ArgumentParser) -> None:
    src = p.add_argument_group("graph source")
    src.add_argument("--family", choices=sorted(families.FAMILIES))
    src.add_argument("--graph", metavar="PATH", help="edge-list file ('-' for stdin)")
    for name in ("d", "n", "k", "m"):
        src.add_argument(f"--{name}", type=int)


def _common_options(p: argparse.ArgumentParser, default_output: str = "table") -> None:
    p.add_argument("--leaks", type=int, default=0)
    p.add_argument("--output", choices=("json", "table"), default=default_output)
    p.add_argument("--budget-evals", type=int, default=DEFAULT_BUDGET_EVALS)
    p.add_argument("--budget-secs", type=float, default=DEFAULT_BUDGET_SECS)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="forcelab", description="Exact leaky zero forcing.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="compute Z_(l) and a lexicographically least witness")
    _graph_options(p)
    _common_options(p)

    p = sub.add_parser("check", help="test one set against every leak placement")
    _graph_options(p)
    _common_options(p)
    p.add_argument("--set", dest="vset", required=True, help="comma-separated vertex ids")
    p.add_argument("--method", choices=("branch", "exhaustive"), default="branch")

    p = sub.add_parser("verify-paper", help="reproduce the published claims")
    _common_options(p)
    p.add_argument("--suite", default="all", choices=["all", *SUITES])
    p.add_argument("--with-d7", action="store_true", help="run the Q7 half-cube check")

    p = sub.add_parser("containment", help="does a minimum l-leaky set contain a minimum base set")
    _graph_options(p)
    _common_options(p)
    p.add_argument("--base-leaks", type=int, default=0)
    p.add_argument("--quantifier", choices=("some", "all"), default="some")

    p = sub.add_parser("chain", help="search nested minimum sets B_0 <= ... <= B_l")
    _graph_options(p)
    _common_options(p)

    p = sub.add_parser("families", help="list graph families and their id layouts")
    p.add_argument("--describe", action="store_true")
    p.add_argument("--output", choices=("json", "table"), default="table")
    return parser


def load_graph(args):
    if (args.family is None) == (args.graph is None):
        raise UsageError("give exactly one of --family or --graph")
    if args.graph is not None:
        if args.graph == "-":
            text = sys.stdin.read()
        else:
            try:
                with open(args.graph) as fh:
                    text = fh.read()
            except OSError as exc:
                raise UsageError(f"cannot read {args.graph}: {exc}") from exc
        return parse_edge_list(text, name=args.graph)
    params = {"d": args.d, "n": args.n, "k": args.k, "m": args.m, "seed": args.seed}
    return families.build(args.family, **params)


def parse_ids(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(f"bad vertex list {text!r}") from exc


def _table(rows: list[list], header: list[str]) -> str:
    cells = [header] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _emit(obj, output: str, render) -> None:
    if output == "json":
        print(json.dumps(obj, indent=2, sort_keys=False))
    else:
        print(render(obj))


def _kv_table(obj: dict) -> str:
    return _table([[k, json.dumps(v)] for k, v in obj.items()], ["field", "value"])


def cmd_solve(args) -> int:
    g = load_graph(args)
    rep = min_leaky_forcing(g, args.leaks, args.budget_evals, args.budget_secs, args.workers)
    obj = rep.to_json(timing=False)
    if args.output == "table":
        obj["elapsed"] = round(rep.elapsed, 3)
    _emit(obj, args.output, _kv_table)
    if not rep.exact:
        log.error("budget exhausted: Z_(%d) in [%d, %d]", args.leaks, rep.lower, rep.upper)
        return 1
    return 0


def cmd_check(args) -> int:
    g = load_graph(args)
    b = g.check_set(parse_ids(args.vset))
    res = is_leaky_forcing_set(g, b, args.leaks, method=args.method)
    if args.output == "json":
        obj = res.to_json()
        obj["set"] = members(b)
        obj["leaks"] = args.leaks
        print(json.dumps(obj, indent=2))
    elif res.ok:
        print("ok")
    else:
        print(json.dumps(res.certificate.to_json()))
    return 0


def cmd_verify(args) -> int:
    results = run_suite(args.suite, workers=args.workers, include_d7=args.with_d7)
    if args.output == "json":
        print(json.dumps([r.to_json() for r in results], indent=2))
    else:
        rows = [[r.claim_id, r.status, r.expected, r.computed] for r in results]
        print(_table(rows, ["claim", "status", "expected", "computed"]))
        counts = {}
        for r in results:
            counts[r.status] = counts.get(r.status, 0) + 1
        print("\n" + ", ".join(f"{k}: {v}" for k, v in sorted(counts.items())))
    return 1 if any(r.status == FAIL for r in results) else 0


def cmd_containment(args) -> int:
    g = load_graph(args)
    rep = containment_question(g, args.leaks, args.base_leaks, args.quantifier, args.workers)
    _emit(rep.to_json(), args.output, _kv_table)
    return 0


def cmd_chain(args) -> int:
    g = load_graph(args)
    rep = nested_chain(g, args.leaks, args.workers)
    _emit(rep.to_json(), args.output, _kv_table)
    return 0


def cmd_families(args) -> int:
    rows = {name: {"parameters": list(params), "layout": families.LAYOUTS[name]}
            for name, (_, params) in families.FAMILIES.items()}
    if args.output == "json":
        print(json.dumps(rows, indent=2))
    elif args.describe:
        for name, info in rows.items():
            print(f"{name}\n    {info['layout']}")
    else:
        print("\n".join(rows))
    return 0


COMMANDS = {
    "solve": cmd_solve,
    "check": cmd_check,
    "verify-paper": cmd_verify,
    "containment": cmd_containment,
    "chain": cmd_chain,
    "families": cmd_families,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(name)s: %(levelname)s: %(message)s",
    )
    if getattr(args, "leaks", 0) < 0:
        parser.error("--leaks must be nonnegative")
    if getattr(args, "workers", 1) < 1:
        parser.error("--workers must be at least 1")
    try:
        return COMMANDS[args.command](args)
    except (UsageError, GraphError) as exc:
        parser.print_usage(sys.stderr)
        print(f"forcelab: error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"forcelab: budget exceeded: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
