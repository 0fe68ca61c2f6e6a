"""Command-line interface: ``vbridge <subcommand> ...``.

Exit codes: 0 success, 2 unreadable input, 3 a certificate failed to revalidate.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import GroebnerLimitExceeded, VBridgeError
from .fox import alexander_matrix
from .gauss import bridge_count, connected_sum, mirror, parse_gauss_code, to_code, to_json
from .ideals import elementary_ideal, is_trivial, rank_bound
from .parity import gaussian_parity, project, project_star
from .present import eliminate_conjugation_generators, knot_group, reduced_group
from .report import InconsistentReport, compute_report, revalidate
from .rmoves import VIRTUAL, WELDED
from .search import SearchBudget, explore_escalating, replay

EXIT_OK, EXIT_PARSE, EXIT_INCONSISTENT = 0, 2, 3


def _emit(args, payload: dict, text: str):
    print(json.dumps(payload, indent=2) if args.json else text)


def _budget(args) -> SearchBudget:
    return SearchBudget(args.budget_chords, args.budget_depth, args.budget_states)


def cmd_parse(args):
    d = parse_gauss_code(args.code)
    _emit(args, {"code": to_code(d), "diagram": to_json(d), "bridge_count": bridge_count(d)},
          f"{to_code(d) or '(empty)'}  n={d.n}  bridges={bridge_count(d)}")
    return EXIT_OK


def cmd_invariants(args):
    d = parse_gauss_code(args.code)
    try:
        report = compute_report(d, _budget(args), args.projection_depth)
    except InconsistentReport as exc:
        print(f"inconsistent report: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    problems = revalidate(report)
    _emit(args, report.to_json(), report.summary())
    if problems:
        for p in problems:
            print(f"certificate failed: {p}", file=sys.stderr)
        return EXIT_INCONSISTENT
    return EXIT_OK


def cmd_search(args):
    d = parse_gauss_code(args.code)
    target = None if args.target == "trivial" else args.bridges
    res = explore_escalating(d, args.moves, _budget(args), target_bridges=target)
    end = replay(d, res.witness)
    if (res.trivialized and end.n != 0) or bridge_count(end) != res.min_bridge_found:
        print("search witness does not replay", file=sys.stderr)
        return EXIT_INCONSISTENT
    payload = res.to_json() | {"end": to_code(end)}
    text = (
        f"min bridges {res.min_bridge_found}  trivialized={res.trivialized}  "
        f"exhausted={res.exhausted}  states={res.states_visited}\n"
        + "\n".join(f"  {m}" for m in res.witness)
    )
    _emit(args, payload, text)
    return EXIT_OK


def cmd_mirror(args):
    d = mirror(parse_gauss_code(args.code))
    _emit(args, {"code": to_code(d), "diagram": to_json(d)}, to_code(d))
    return EXIT_OK


def cmd_project(args):
    d = parse_gauss_code(args.code)
    image = project_star(d) if args.iterate else project(d)
    parity = gaussian_parity(d)
    _emit(args, {"parity": {str(c): f for c, f in parity.items()}, "code": to_code(image)},
          to_code(image) or "(empty)")
    return EXIT_OK


def cmd_connect(args):
    d = connected_sum(parse_gauss_code(args.code1), args.gap1, parse_gauss_code(args.code2), args.gap2)
    _emit(args, {"code": to_code(d), "bridge_count": bridge_count(d)}, to_code(d))
    return EXIT_OK


def _presentation(kind: str, code: str):
    d = parse_gauss_code(code)
    return {
        "knot": lambda: knot_group(d),
        "upper": lambda: knot_group(d),
        "lower": lambda: knot_group(mirror(d)),
        "reduced": lambda: reduced_group(d),
    }[kind]()


def cmd_group(args):
    p = _presentation(args.kind, args.code)
    if args.eliminate:
        p = eliminate_conjugation_generators(p)
    _emit(args, p.to_json(), str(p))
    return EXIT_OK


def _triviality(ideal):
    try:
        return is_trivial(ideal)
    except GroebnerLimitExceeded:
        return None


def cmd_ideals(args):
    p = eliminate_conjugation_generators(_presentation(args.kind, args.code))
    mat = alexander_matrix(p)
    ks = [args.k] if args.k is not None else range(mat.meridional_count + 1)
    ideals = [elementary_ideal(mat, k) for k in ks]
    bound = rank_bound(mat)
    trivial = [_triviality(i) for i in ideals]
    payload = {
        "presentation": p.to_json(),
        "ideals": [i.to_json() | {"trivial": flag} for i, flag in zip(ideals, trivial)],
        "rank_lower_bound": bound.value,
    }
    marks = {True: "  trivial", False: "", None: "  undecided"}
    text = "\n".join(f"{i}{marks[flag]}" for i, flag in zip(ideals, trivial))
    _emit(args, payload, text + f"\nrank lower bound {bound.value}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vbridge", description="Bridge-number bounds for virtual and welded knots.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    def budget_flags(p):
        p.add_argument("--budget-depth", type=int, default=8)
        p.add_argument("--budget-chords", type=int, default=None, help="default: chord count + 2")
        p.add_argument("--budget-states", type=int, default=10**6)

    p = add("parse", cmd_parse, "validate and normalize a Gauss code")
    p.add_argument("code")

    p = add("invariants", cmd_invariants, "certified vb/wb intervals")
    p.add_argument("code")
    budget_flags(p)
    p.add_argument("--projection-depth", type=int, default=3)

    p = add("search", cmd_search, "bounded move search")
    p.add_argument("code")
    p.add_argument("--moves", choices=(VIRTUAL, WELDED), default=VIRTUAL)
    p.add_argument("--target", choices=("trivial", "bridges"), default="trivial")
    p.add_argument("--bridges", type=int, default=1, help="bridge count to stop at with --target bridges")
    budget_flags(p)

    p = add("mirror", cmd_mirror, "reverse every arrow and negate every sign")
    p.add_argument("code")

    p = add("project", cmd_project, "erase odd chords (Gaussian parity)")
    p.add_argument("code")
    p.add_argument("--iterate", action="store_true", help="repeat until every chord is even")

    p = add("connect", cmd_connect, "connected sum at explicit cut gaps")
    p.add_argument("code1")
    p.add_argument("gap1", type=int)
    p.add_argument("code2")
    p.add_argument("gap2", type=int)

    p = add("group", cmd_group, "group presentations")
    p.add_argument("code")
    p.add_argument("--kind", choices=("knot", "reduced", "upper", "lower"), default="knot")
    p.add_argument("--eliminate", action="store_true", help="remove conjugation generators")

    p = add("ideals", cmd_ideals, "elementary ideals of a presentation")
    p.add_argument("code")
    p.add_argument("--kind", choices=("knot", "reduced"), default="knot")
    p.add_argument("--k", type=int, default=None)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except VBridgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
