"""Command-line interface.

Subcommands: ``list``, ``show``, ``epsilon``, ``classify``,
``restricted``, ``weights``, ``verdict``, ``selftest``.  Data goes to
stdout, diagnostics to stderr.  Exit codes: 0 success, 1 unknown real
form name, 2 usage or parse errors, 3 selftest failure.
"""

from __future__ import annotations

import argparse
import os
import signal
import sys
from fractions import Fraction

from . import __version__
from .catalog import catalog, classification_to_json, classify, lookup
from .diagram import SatakeDiagram, format_diagram, parse_diagram, render_diagram, validate
from .errors import DiagramDataError, DiagramParseError, UnknownRealFormError
from .involution import (
    act_on_weight,
    base_coordinates,
    black_corrections,
    dual_cartan_involution,
    permutation_cycles,
    restricted_roots,
    restricted_to_json,
    satake_automorphism,
)
from .rootsys import (
    connected_node_sets,
    identify_cartan,
    identity_matrix,
    longest_element,
    longest_negation_nontrivial,
    mat_mul,
    subdiagram_cartan,
    word_matrix,
)
from .verdict import SubgroupHypotheses, real_structure_verdict, verdict_to_json


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="satake",
        description="Exact Satake-diagram computations for real forms of simple Lie algebras.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--rank-bound",
        type=int,
        default=8,
        metavar="N",
        help="catalog rank bound per component (default 8)",
    )
    parser.add_argument("--no-color", action="store_true", help="disable ANSI styling")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="list the catalogued real forms")

    p = sub.add_parser("show", help="details of one real form")
    p.add_argument("name")

    p = sub.add_parser(
        "epsilon", help="induced node involution of a named form or a diagram literal"
    )
    p.add_argument(
        "diagram",
        help="real form name, or a literal like 'A3 black=1,3 arrows='",
    )

    p = sub.add_parser("classify", help="which forms induce the identity involution")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("restricted", help="restricted roots with multiplicities")
    p.add_argument("name")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("weights", help="act on fundamental-weight coordinates")
    p.add_argument("name")
    p.add_argument("coords", help="comma-separated integers, e.g. 1,0")

    p = sub.add_parser("verdict", help="real-structure existence/uniqueness verdict")
    p.add_argument("name")
    p.add_argument("--spherical", action="store_true")
    p.add_argument("--self-normalizing", action="store_true")
    p.add_argument("--json", action="store_true")

    sub.add_parser("selftest", help="run internal consistency checks")
    return parser


def _use_color(args: argparse.Namespace) -> bool:
    if args.no_color or os.environ.get("NO_COLOR"):
        return False
    return sys.stdout.isatty()


def _bold(text: str, on: bool) -> str:
    return f"\x1b[1m{text}\x1b[0m" if on else text


def _resolve(args: argparse.Namespace, name: str) -> SatakeDiagram:
    return lookup(name, args.rank_bound).diagram


def _cmd_list(args: argparse.Namespace) -> int:
    for rec in catalog(args.rank_bound):
        line = f"{rec.name:<16} {rec.text}"
        if len(rec.names) > 1:
            line += "   (also: " + ", ".join(rec.names[1:]) + ")"
        print(line)
    return 0


def _cmd_show(args: argparse.Namespace) -> int:
    on = _use_color(args)
    rec = lookup(args.name, args.rank_bound)
    d = rec.diagram
    perm = satake_automorphism(d)
    rr = restricted_roots(d)
    print(f"{_bold('name:', on)} {rec.name}")
    if len(rec.names) > 1:
        print(f"{_bold('also known as:', on)} " + ", ".join(rec.names[1:]))
    print(f"{_bold('diagram:', on)} {rec.text}")
    print(render_diagram(d))
    print(f"{_bold('node involution:', on)} {permutation_cycles(perm)}")
    print(f"{_bold('identity involution:', on)} {'yes' if perm == tuple(range(d.n)) else 'no'}")
    print(f"{_bold('restricted type:', on)} {rr.label if rr.label else 'none (compact)'}")
    return 0


def _cmd_epsilon(args: argparse.Namespace) -> int:
    if " black=" in args.diagram:
        d = parse_diagram(args.diagram)
        report = validate(d)
        if not report.ok:
            raise DiagramDataError(list(report.failures))
    else:
        d = _resolve(args, args.diagram)
    print(permutation_cycles(satake_automorphism(d)))
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    table = classify(args.rank_bound)
    if args.json:
        print(classification_to_json(table))
        return 0
    on = _use_color(args)
    print(_bold(f"{'real form':<16} {'involution':<12} diagram", on))
    for row in table.rows:
        print(f"{row.name:<16} {row.automorphism:<12} {row.diagram}")
    total = sum(1 for row in table.rows if row.is_identity)
    print(f"identity involution: {total} of {len(table.rows)}")
    return 0


def _fraction_text(c: int) -> str:
    return str(c // 2) if c % 2 == 0 else f"{c}/2"


def _cmd_restricted(args: argparse.Namespace) -> int:
    rr = restricted_roots(_resolve(args, args.name))
    if args.json:
        print(restricted_to_json(rr))
        return 0
    on = _use_color(args)
    print(f"{_bold('restricted type:', on)} {rr.label if rr.label else 'none (compact)'}")
    if rr.base:
        print(_bold("base:", on))
        for v in rr.base:
            print("  " + " ".join(_fraction_text(c) for c in v))
    if rr.positive:
        print(_bold("positive restricted roots (multiplicity):", on))
        for v in rr.positive:
            coords = " ".join(_fraction_text(c) for c in v)
            print(f"  {coords}   x{rr.multiplicity[v]}")
    return 0


def _cmd_weights(args: argparse.Namespace) -> int:
    d = _resolve(args, args.name)
    try:
        coords = tuple(int(c) for c in args.coords.split(","))
    except ValueError:
        raise ValueError(f"coordinates must be comma-separated integers, got {args.coords!r}")
    out = act_on_weight(satake_automorphism(d), coords)
    print(",".join(str(c) for c in out))
    return 0


def _cmd_verdict(args: argparse.Namespace) -> int:
    d = _resolve(args, args.name)
    hyp = SubgroupHypotheses(
        spherical=args.spherical, self_normalizing=args.self_normalizing
    )
    v = real_structure_verdict(d, hyp)
    if args.json:
        print(verdict_to_json(v))
        return 0
    on = _use_color(args)
    print(f"{_bold('subgroup conjugacy:', on)} {v.subgroup_conjugacy}")
    print(f"{_bold('equivariant map exists:', on)} {'yes' if v.equivariant_map_exists else 'no'}")
    print(f"{_bold('real structure on homogeneous space:', on)} {v.real_structure_on_homogeneous_space}")
    print(f"{_bold('real structure on completion:', on)} {v.real_structure_on_completion}")
    print(f"{_bold('citations:', on)} " + ", ".join(v.citations))
    print(_bold("caveats:", on))
    for c in v.caveats:
        print(f"  - {c}")
    return 0


def _selftest_checks(d: SatakeDiagram, failures: list[str], tag: str) -> None:
    rs = d.rs
    n = d.n
    report = validate(d)
    if not report.ok:
        failures.append(f"{tag}: validation failed: {report}")
        return
    perm = satake_automorphism(d)
    theta = dual_cartan_involution(d)
    ident = identity_matrix(n)
    if mat_mul(theta, theta) != ident:
        failures.append(f"{tag}: involution does not square to the identity")
    if any(perm[perm[i]] != i for i in range(n)):
        failures.append(f"{tag}: node map is not an involution")
    w = word_matrix(rs, longest_element(rs, d.black))
    m_eps = tuple(tuple(1 if i == perm[j] else 0 for j in range(n)) for i in range(n))
    neg = tuple(tuple(-x for x in row) for row in theta)
    if mat_mul(w, neg) != m_eps or mat_mul(neg, w) != m_eps:
        failures.append(f"{tag}: involution disagrees with the longest-element factorisation")
    paired = {i for arrow in d.arrows for i in arrow}
    for i in d.whites:
        expect = d.omega_map[i]
        if perm[i] != expect or (i not in paired and perm[i] != i):
            failures.append(f"{tag}: white node {i + 1} moves against its arrows")
    for comp in connected_node_sets(rs, d.black):
        if sorted(perm[i] for i in comp) != list(comp):
            failures.append(f"{tag}: black component {comp} is not preserved")
            continue
        t = identify_cartan(subdiagram_cartan(rs, comp))
        flipped = any(perm[i] != i for i in comp)
        if flipped != longest_negation_nontrivial(t):
            failures.append(f"{tag}: black component {comp} of type {t} flips incorrectly")
    if d.is_doubled:
        r = d.types[0].rank
        if any(perm[i] < r for i in range(r)):
            failures.append(f"{tag}: doubled diagram does not swap its components")
        if perm == tuple(range(n)):
            failures.append(f"{tag}: doubled diagram reports the identity involution")
    if parse_diagram(format_diagram(d)) != d:
        failures.append(f"{tag}: text format does not round-trip")
    corr = black_corrections(d, theta)
    for i, inner in corr.items():
        if sorted(inner) != sorted(d.black):
            failures.append(f"{tag}: corrections for node {i + 1} skip black nodes")
        if any(c < 0 for c in inner.values()):
            failures.append(f"{tag}: negative correction at node {i + 1}")
    rr = restricted_roots(d)
    black_supported = sum(
        1 for root in rs.positive_roots if all(root[k] == 0 for k in d.whites)
    )
    if sum(rr.multiplicity.values()) != len(rs.positive_roots) - black_supported:
        failures.append(f"{tag}: restricted multiplicities do not add up")
    for v in rr.positive:
        try:
            coords = base_coordinates(rr.base, v)
        except ValueError:
            failures.append(f"{tag}: restricted root {v} is outside the base span")
            continue
        if any(c.denominator != 1 or c < 0 for c in coords):
            failures.append(f"{tag}: restricted root {v} has coordinates {coords}")
    if rr.positive and rr.label is None:
        failures.append(f"{tag}: restricted system has roots but no type label")


def _cmd_selftest(args: argparse.Namespace) -> int:
    failures: list[str] = []
    records = catalog(args.rank_bound)
    for rec in records:
        _selftest_checks(rec.diagram, failures, rec.name)
    if failures:
        for f in failures:
            print(f"selftest failure: {f}", file=sys.stderr)
        return 3
    print(f"selftest: {len(records)} catalog diagrams passed all consistency checks")
    return 0


_COMMANDS = {
    "list": _cmd_list,
    "show": _cmd_show,
    "epsilon": _cmd_epsilon,
    "classify": _cmd_classify,
    "restricted": _cmd_restricted,
    "weights": _cmd_weights,
    "verdict": _cmd_verdict,
    "selftest": _cmd_selftest,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2
    try:
        return _COMMANDS[args.command](args)
    except UnknownRealFormError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except DiagramParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except DiagramDataError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    # Die silently when a downstream pipe reader exits early, as
    # filter-style tools do (``satake classify --json | head``).
    if hasattr(signal, "SIGPIPE"):
        signal.signal(signal.SIGPIPE, signal.SIG_DFL)
    sys.exit(run())


if __name__ == "__main__":
    main()
