"""``swarm-wilson`` command-line front end.

Subcommands: analyze, decide, plan, oracle, verify. Exit codes are 0 on
success, 2 on bad input and 3 when the oracle runs out of budget. Every error
path prints ``error: <CODE>`` as its first line.
"""

from __future__ import annotations

import argparse
import sys

from .config import Configuration, is_saturated
from .errors import BudgetExceeded, GraphMismatch, MissingConfig, SwarmError
from .graph import Graph, block_tree, edge_blocks
from .oracle import explore, label_group_from_space, shortest_plan
from .perm import order, orbits
from .planner import relocate
from .verify import FAMILIES, run_family
from .wgformat import dump_plan, load_instance_file
from .wilson import exchange_analysis, weakness, wilson_group

EXIT_OK, EXIT_INPUT, EXIT_BUDGET = 0, 2, 3


def _fmt_set(vs) -> str:
    return "{" + ",".join(map(str, sorted(vs))) + "}"


def _load_config(path) -> tuple[Graph, Configuration]:
    inst = load_instance_file(path)
    c = inst.config
    if c is None:
        raise MissingConfig(f"{path}: no config section")
    return inst.graph, c


def _load_pair(path, target_path):
    g, f0 = _load_config(path)
    h, ft = _load_config(target_path)
    if g != h:
        raise GraphMismatch(f"{path} and {target_path} describe different graphs")
    return g, f0, ft


def cmd_analyze(args, out) -> int:
    g, c = _load_config(args.file)
    p = edge_blocks(g)
    tree = block_tree(g, p)
    print(f"graph {g.name} vertices {g.vertex_count} edges {len(g.edges)}", file=out)
    print(f"occupied {_fmt_set(c.support)} empty {_fmt_set(c.empties)}", file=out)
    for i, block in enumerate(p.blocks):
        line = f"block {i} {_fmt_set(block)}"
        if len(block) > 1:
            weak, odd = weakness(g, block)
            line += f" weak={'yes' if weak else 'no'} all-odd={'yes' if odd else 'no'}"
        print(line, file=out)
    print("bridges " + (" ".join(f"{u}-{v}" for u, v in sorted(p.bridges)) or "none"), file=out)
    print("block-tree " + (" ".join(f"{a}-{b}" for a, b, _ in tree.edges) or "none"), file=out)
    print(f"saturated {'yes' if is_saturated(c) else 'no'}", file=out)
    analysis = exchange_analysis(g, c)
    if analysis is not None:
        for index, s in analysis.centers:
            print(f"C-set block {index} {_fmt_set(s)}", file=out)
        for index, s in analysis.merged:
            print(f"merged {index} {_fmt_set(s)}", file=out)
    d = wilson_group(g, c)
    print(f"group {d}", file=out)
    print(f"order {order(d)}", file=out)
    print(f"label-group order {d.label_order()}", file=out)
    print("orbits " + " ".join(_fmt_set(o) for o in orbits(d)), file=out)
    return EXIT_OK


def cmd_decide(args, out) -> int:
    from .wilson import decide_reachable

    _, f0, ft = _load_pair(args.file, args.target)
    ok, pi = decide_reachable(f0, ft)
    if ok:
        print("REACHABLE", file=out)
        print(f"witness {pi}", file=out)
    else:
        print("UNREACHABLE", file=out)
    return EXIT_OK


def cmd_plan(args, out) -> int:
    g, f0, ft = _load_pair(args.file, args.target)
    if args.exact:
        plan = shortest_plan(f0, ft)
        if plan is None:
            print("UNREACHABLE", file=out)
            return EXIT_OK
        moves = plan.moves
    else:
        moves = relocate(f0, ft.support).moves
    out.write(dump_plan(g.name, moves))
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    g, f0 = _load_config(args.file)
    space = explore(f0)
    elements = sorted(label_group_from_space(space), key=lambda p: (len(p.support), str(p)))
    print(f"states {len(space)}", file=out)
    print(f"label-group order {len(elements)}", file=out)
    for p in elements:
        print(f"element {p}", file=out)
    if args.target:
        h, ft = _load_config(args.target)
        if g != h:
            raise GraphMismatch(f"{args.file} and {args.target} describe different graphs")
        plan = shortest_plan(f0, ft)
        if plan is None:
            print("UNREACHABLE", file=out)
        else:
            out.write(dump_plan(g.name, plan.moves))
    return EXIT_OK


def cmd_verify(args, out) -> int:
    rows = run_family(args.family, args.max_n, args.seed, args.threads, count=args.count)
    mismatches = 0
    for row in rows:
        print(row.format(), file=out)
        mismatches += row.status == "MISMATCH"
    skipped = sum(row.status == "SKIPPED" for row in rows)
    print(f"summary rows={len(rows)} match={len(rows) - mismatches - skipped} "
          f"mismatch={mismatches} skipped={skipped}", file=out)
    return 1 if mismatches else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="swarm-wilson", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="report the symbolic group of a configuration")
    p.add_argument("file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("decide", help="decide whether a target configuration is reachable")
    p.add_argument("file")
    p.add_argument("target")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("plan", help="emit a plan file from one configuration to another")
    p.add_argument("file")
    p.add_argument("target")
    p.add_argument("--exact", action="store_true", help="shortest labelled plan via the oracle")
    p.set_defaults(func=cmd_plan)

    p = sub.add_parser("oracle", help="brute-force the reachable set and the label group")
    p.add_argument("file")
    p.add_argument("target", nargs="?")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="compare analyzer and oracle over a family of instances")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=12, help="graphs drawn by the random families")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except BudgetExceeded as exc:
        print(f"error: {exc.code}", file=out)
        print(str(exc), file=out)
        return EXIT_BUDGET
    except SwarmError as exc:
        print(f"error: {exc.code}", file=out)
        print(str(exc), file=out)
        return EXIT_INPUT
    except OSError as exc:
        print("error: IOError", file=out)
        print(str(exc), file=out)
        return EXIT_INPUT
    except ValueError as exc:
        print("error: BadArgument", file=out)
        print(str(exc), file=out)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
