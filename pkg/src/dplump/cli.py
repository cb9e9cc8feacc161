"""Command-line front end.

Exit codes: 0 on success (boolean answers go to stdout as true/false),
1 when a law check or oracle comparison fails, 2 for usage errors and
malformed expressions, 3 for semantic errors such as unknown shapes or
arity mismatches.
"""

from __future__ import annotations

import argparse
import sys

from dplump import laws
from dplump.container import BaseSignature, PlumpError, load_signature
from dplump.listorder import greedy_descend, list_lt
from dplump.order import covered, covered_naive, le, le_naive
from dplump.syntax import TreeSyntaxError, parse_tree, print_tree
from dplump.wtree import joinN

DEFAULT_SIGNATURE = BaseSignature({"s": 1, "p": 2})

# parse_tree/print_tree are part of this module's surface
__all__ = ["main", "parse_tree", "print_tree", "parse_nat_list"]


class UsageError(Exception):
    pass


def parse_nat_list(text: str) -> list[int]:
    body = text.strip()
    if body[:1] in "<[" and body[-1:] in ">]":
        body = body[1:-1]
    items = [x.strip() for x in body.split(",")] if body.strip() else []
    if not all(x.isascii() and x.isdigit() for x in items):
        raise UsageError(f"expected a comma-separated list of naturals, got {text!r}")
    return [int(x) for x in items]


def _add_sig(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--sig", metavar="PATH", help="signature file (default: shape s 1, shape p 2)"
    )


def _add_gen(p: argparse.ArgumentParser, cases: int, size: int) -> None:
    _add_sig(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=cases)
    p.add_argument("--size", type=int, default=size)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dplump", description="Directed plump ordering on W-types."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("le", "covered"):
        p = sub.add_parser(name, help=f"decide {name}(u, v)")
        _add_sig(p)
        p.add_argument("--naive", action="store_true", help="use the rule-literal oracle")
        p.add_argument("u")
        p.add_argument("v")
    p = sub.add_parser("join", help="print the join of one or more trees")
    _add_sig(p)
    p.add_argument("trees", nargs="+")
    p = sub.add_parser("chain", help="print the greedy descent from a tree")
    _add_sig(p)
    p.add_argument("tree")
    p = sub.add_parser("listlt", help="list ordering over naturals")
    _add_sig(p)
    p.add_argument("xs")
    p.add_argument("ys")
    _add_gen(sub.add_parser("check-laws", help="run the randomized law suite"), 100, 12)
    _add_gen(sub.add_parser("oracle-compare", help="compare against the naive oracle"), 100, 8)
    return parser


def _signature(args) -> BaseSignature:
    if args.sig is None:
        return DEFAULT_SIGNATURE
    try:
        return load_signature(args.sig)
    except OSError as exc:
        raise PlumpError(f"cannot read signature: {exc}") from exc


def _gen_config(args, sig: BaseSignature) -> laws.GenConfig:
    try:
        return laws.GenConfig(sig, seed=args.seed, size_budget=args.size, cases=args.cases)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _run(args, out) -> int:
    cmd = args.command
    if cmd == "listlt":
        print("true" if list_lt(parse_nat_list(args.xs), parse_nat_list(args.ys)) else "false", file=out)
        return 0
    if cmd in ("check-laws", "oracle-compare"):
        cfg = _gen_config(args, _signature(args))
        report = laws.run_suite(cfg) if cmd == "check-laws" else laws.oracle_compare(cfg)
        print(report.to_text(), file=out)
        return 0 if report.ok else 1
    sig = _signature(args)
    if cmd in ("le", "covered"):
        u, v = parse_tree(args.u, sig), parse_tree(args.v, sig)
        if cmd == "le":
            result = le_naive(u, v) if args.naive else le(u, v)
        else:
            result = covered_naive(u, v) if args.naive else covered(u, v)
        print("true" if result else "false", file=out)
    elif cmd == "join":
        print(print_tree(joinN([parse_tree(t, sig) for t in args.trees])), file=out)
    elif cmd == "chain":
        chain = greedy_descend(parse_tree(args.tree, sig))
        for t in chain:
            print(print_tree(t), file=out)
        print(f"steps: {len(chain) - 1}", file=out)
    return 0


def main(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))
    try:
        return _run(args, out)
    except (UsageError, TreeSyntaxError) as exc:
        print(f"dplump: error: {exc}", file=err)
        return 2
    except PlumpError as exc:
        print(f"dplump: error: {exc}", file=err)
        return 3


if __name__ == "__main__":
    sys.exit(main())
