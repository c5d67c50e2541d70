"""Command-line entry point.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 enumeration cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .corpus import GroupFileError, UnknownGroup, default_corpus, resolve
from .engel import chain_orders, engel_chain, engel_profile, E_stable
from .perm import DEFAULT_MAX_ORDER, CapExceeded, CycleSyntaxError, Permutation
from .structure import exponent, fitting, fitting_height, is_nilpotent, is_solvable, nilpotent_residual
from .subgroups import quotient
from .verify import SUITES, load_baseline, resolve_suites, run_suites, run_verification, table_csv

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


def _profile_summary(G) -> dict:
    F = fitting(G)
    return {
        "group": G.label or G.name,
        "order": G.order,
        "degree": G.degree,
        "nilpotent": is_nilpotent(G),
        "solvable": is_solvable(G),
        "fitting_order": F.order,
        "fitting_index": G.order // F.order,
        "fitting_height": fitting_height(G),
        "gamma_inf_order": nilpotent_residual(G).order,
        "m": engel_profile(G).m,
        "quotient_exponent": exponent(quotient(G, F).action),
    }


def cmd_list(args) -> int:
    for G in default_corpus(args.max_order):
        print(f"{G.label:<10} order={G.order:<5} solvable={str(is_solvable(G)).lower():<5} "
              f"nilpotent={str(is_nilpotent(G)).lower()}")
    return EXIT_OK


def cmd_analyze(args) -> int:
    G = resolve(args.group, args.max_order)
    info = _profile_summary(G)
    if args.elements:
        info["elements"] = [
            {"g": str(r.g), "E_order": r.E_order, "n_stab": r.n_stab, "engel": r.is_engel}
            for r in engel_profile(G).records]
    for key, value in info.items():
        if key == "elements":
            continue
        print(f"{key}: {_text(value)}")
    if args.elements:
        print("elements:")
        for e in info["elements"]:
            print(f"  {e['g']:<20} |E|={e['E_order']:<4} n_stab={e['n_stab']:<3} "
                  f"engel={_text(e['engel'])}")
    if args.json:
        Path(args.json).write_text(json.dumps(info, indent=2) + "\n", encoding="utf-8")
    return EXIT_OK


def _text(v) -> str:
    if isinstance(v, bool):
        return str(v).lower()
    return "NONE" if v is None else str(v)


def cmd_engel(args) -> int:
    G = resolve(args.group, args.max_order)
    g = Permutation.parse(args.element, G.degree)
    if g not in G:
        print(f"error: {g} is not an element of {G.name}", file=sys.stderr)
        return EXIT_USAGE
    E, n_stab = E_stable(g, G)
    chains = [engel_chain(x, g, G) for x in G.elements]
    engel = all(c.terminates for c in chains)
    if engel:
        worst = max(chains, key=lambda c: c.steps)
    else:
        worst = next(c for c in chains if not c.terminates)
    print(f"group: {G.name}")
    print(f"element: {g}")
    print(f"E_n orders: {','.join(map(str, chain_orders(g, G)))}")
    print(f"|E(g)|: {E.order}")
    print(f"n_stab: {n_stab}")
    print(f"Engel: {_text(engel)}")
    verdict = f"reaches 1 in {worst.steps} steps" if worst.terminates else f"repeats after {worst.steps} steps"
    print(f"worst chain ({verdict}): " + " -> ".join(map(str, worst.trace)))
    return EXIT_OK


def _corpus(args):
    if args.group:
        return [resolve(s, args.max_order) for s in args.group]
    return default_corpus(args.max_order)


def _baseline(args):
    if args.baseline == "none":
        return None
    if args.baseline:
        return load_baseline(Path(args.baseline).read_text(encoding="utf-8"))
    return load_baseline()


def cmd_verify(args, parser) -> int:
    names = [n.strip() for n in args.suite.split(",") if n.strip()]
    try:
        resolve_suites(names)
    except KeyError as e:
        parser.error(f"unknown suite(s): {e.args[0]} (choose from all, {', '.join(SUITES)})")
    corpus = _corpus(args)
    report = run_verification(corpus, names, seed=args.seed, jobs=args.jobs,
                              baseline=_baseline(args), max_order=args.max_order)
    text = json.dumps(report, indent=2) + "\n"
    if args.report:
        Path(args.report).write_text(text, encoding="utf-8")
    failed = 0
    for s in report["suites"]:
        failed += s["failed"]
        print(f"{s['name']:<12} passed={s['passed']:<4} failed={s['failed']:<3} skipped={s['skipped']}")
        for c in s["cases"]:
            if c["status"] == "FAIL":
                print(f"  FAIL {c['group_label']}: {c['detail']}")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_table(args) -> int:
    suites, rows = run_suites(_corpus(args), ["theorem"], seed=args.seed, jobs=args.jobs,
                              baseline=_baseline(args))
    text = table_csv(rows)
    if args.out:
        try:
            Path(args.out).write_text(text, encoding="utf-8")
        except OSError as e:
            print(f"error: cannot write {args.out}: {e}", file=sys.stderr)
            return EXIT_USAGE
    else:
        sys.stdout.write(text)
    failed = [c for c in suites[0].cases if c.status == "FAIL"]
    for c in failed:
        print(f"FAIL {c.group_label}: {c.detail}", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER,
                        help="enumeration cap (default %(default)s)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--jobs", type=int, default=1, help="worker processes")

    parser = argparse.ArgumentParser(prog="engelkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", parents=[common], help="list the built-in corpus")

    p = sub.add_parser("analyze", parents=[common], help="structural and Engel profile of a group")
    p.add_argument("group", help="corpus label (S4), builtin call (frobenius(7,3)) or group file")
    p.add_argument("--json", metavar="PATH")
    p.add_argument("--elements", action="store_true", help="per-element Engel summary")

    p = sub.add_parser("engel", parents=[common], help="E_n chain detail for one element")
    p.add_argument("group")
    p.add_argument("--element", required=True, metavar="CYCLES")

    for name, helptext in (("verify", "run verification suites"), ("table", "write the bound table CSV")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--group", action="append", metavar="SELECTOR",
                       help="use these groups instead of the default corpus (repeatable)")
        p.add_argument("--baseline", metavar="PATH",
                       help="baseline table CSV ('none' to disable; default: shipped baseline)")
        if name == "verify":
            p.add_argument("--suite", default="all", help="comma-separated suite names or 'all'")
            p.add_argument("--report", metavar="PATH", help="write the JSON report here")
        else:
            p.add_argument("--out", metavar="PATH", help="CSV output path (default stdout)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "list":
            return cmd_list(args)
        if args.command == "analyze":
            return cmd_analyze(args)
        if args.command == "engel":
            return cmd_engel(args)
        if args.command == "verify":
            return cmd_verify(args, parser)
        return cmd_table(args)
    except CapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    except (GroupFileError, CycleSyntaxError, UnknownGroup, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
