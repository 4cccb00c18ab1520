"""Command-line interface: ``coverreg ideal|regularity|verify``.

Exit codes: 0 success, 1 a claimed statement failed, 2 operational error
(bad input, cap exceeded).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path

from . import graph as gr
from .betti import betti_numbers, regularity
from .caps import CapExceededError, default_caps
from .linalg import parse_field
from .monomial import ExponentOverflowError, cover_ideal, format_ideal, power, symbolic_power
from .verify import CHECKS, DEFAULT_CHECKS, family_items, sweep, to_csv, to_json, to_text


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """``"3"``, ``"1..4"`` or ``"2,5,7"`` to a list of ints."""
    out: list[int] = []
    for part in text.split(","):
        lo, sep, hi = part.partition("..")
        try:
            out.extend(range(int(lo), int(hi) + 1) if sep else [int(lo)])
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad range {text!r}") from None
    return out


def _caps(args):
    caps = default_caps()
    if getattr(args, "generator_cap", None):
        caps = replace(caps, generators=args.generator_cap)
    if getattr(args, "lattice_cap", None):
        caps = replace(caps, lattice=args.lattice_cap)
    return caps


def _graph(args) -> gr.Graph:
    if args.graph:
        return gr.read_graph(args.graph)
    raise UsageError("--graph is required")


def _write(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_ideal(args) -> int:
    g = _graph(args)
    caps = _caps(args)
    j = cover_ideal(g)
    if args.kind == "cover":
        ideal = j
    elif args.kind == "symbolic":
        ideal = symbolic_power(j, args.k, caps)
    else:
        ideal = power(j, args.k, caps)
    _write(format_ideal(ideal), args.output)
    return 0


def cmd_regularity(args) -> int:
    g = _graph(args)
    caps = _caps(args)
    fld = parse_field(args.field)
    j = cover_ideal(g)
    ideal = power(j, args.k, caps) if args.ordinary else symbolic_power(j, args.k, caps)
    text = f"{regularity(ideal, fld, caps)}\n"
    if args.emit_betti and not ideal.is_unit:
        text += betti_numbers(ideal, fld, caps).format()
    _write(text, args.output)
    return 0


def cmd_verify(args) -> int:
    fld = parse_field(args.field)
    caps = _caps(args)
    opts = {"max_n": args.max_n, "connected_only": not args.include_disconnected,
            "n": args.n, "s": args.s, "a": args.a, "b": args.b,
            "p": args.p, "seed": args.seed, "count": args.count}
    if args.family == "cone" and args.graph:
        opts["base"] = gr.read_graph(args.graph)
    elif args.family == "file":
        if not args.graph:
            raise UsageError("--family file needs --graph")
        items = [gr.read_graph(args.graph)]
    needs = {"star": "n", "complete": "n", "path": "n", "cycle": "n", "random": "n",
             "pendant-blowup": "n", "complete-bipartite": "a"}
    if args.family in needs and not opts[needs[args.family]]:
        raise UsageError(f"--family {args.family} needs --{needs[args.family]}")
    if args.family == "pendant-blowup" and not args.s:
        raise UsageError("--family pendant-blowup needs --s")
    if args.family == "complete-bipartite" and not args.b:
        raise UsageError("--family complete-bipartite needs --b")
    if args.family == "cone" and "base" not in opts and not args.n:
        raise UsageError("--family cone needs --n or --graph")
    if args.family != "file":
        items = family_items(args.family, **opts)
    checks = args.check or DEFAULT_CHECKS
    result = sweep(items, args.max_k, fld, checks, caps)
    render = {"json": to_json, "csv": to_csv, "text": to_text}[args.format]
    _write(render(result.reports), args.output)
    if args.summary:
        sys.stderr.write(json.dumps(result.summary(), indent=1) + "\n")
    for r in result.violations:
        sys.stderr.write(f"violation: {r.record()}\n")
    return result.exit_code()


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="coverreg",
        description="Cover ideals, symbolic powers and regularity bounds of graphs.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--graph", help="edge-list file")
        sp.add_argument("--output", "-o", help="write to this file instead of stdout")
        sp.add_argument("--generator-cap", type=int)
        sp.add_argument("--lattice-cap", type=int)

    pi = sub.add_parser("ideal", help="print a cover ideal, symbolic or ordinary power")
    pi.add_argument("kind", choices=("cover", "symbolic", "power"))
    pi.add_argument("-k", type=int, default=1)
    common(pi)
    pi.set_defaults(func=cmd_ideal)

    pr = sub.add_parser("regularity", help="regularity of J(G)^(k)")
    pr.add_argument("-k", type=int, default=1)
    pr.add_argument("--field", default="gf2")
    pr.add_argument("--ordinary", action="store_true", help="use J(G)^k instead of J(G)^(k)")
    pr.add_argument("--emit-betti", action="store_true")
    common(pr)
    pr.set_defaults(func=cmd_regularity)

    pv = sub.add_parser("verify", help="run checks over a graph family")
    pv.add_argument("--family", default="all",
                    choices=("all", "star", "complete", "path", "cycle", "complete-bipartite",
                             "pendant-blowup", "cone", "random", "file"))
    pv.add_argument("--check", action="append", choices=CHECKS,
                    help="restrict to these checks (repeatable)")
    pv.add_argument("--max-n", type=int, default=5)
    pv.add_argument("--max-k", type=int, default=2)
    pv.add_argument("--n", type=parse_range)
    pv.add_argument("--s", type=parse_range)
    pv.add_argument("--a", type=parse_range)
    pv.add_argument("--b", type=parse_range)
    pv.add_argument("--p", default="1/2")
    pv.add_argument("--seed", type=int, default=0)
    pv.add_argument("--count", type=int, default=1)
    pv.add_argument("--include-disconnected", action="store_true")
    pv.add_argument("--field", default="gf2")
    pv.add_argument("--format", choices=("json", "csv", "text"), default="json")
    pv.add_argument("--summary", action="store_true", help="print aggregate counts to stderr")
    common(pv)
    pv.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "k", 0) < 0:
        parser.error("-k must be non-negative")
    try:
        return args.func(args)
    except (gr.GraphFormatError, CapExceededError, ExponentOverflowError,
            UsageError, ValueError, OSError) as exc:
        sys.stderr.write(f"coverreg: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
