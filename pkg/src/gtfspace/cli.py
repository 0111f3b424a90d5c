"""``gtf`` command line.

Exit status: 0 on success, 1 when ``laws`` reports a failing law, 2 on
malformed input (missing file, bad JSON, unknown label, invalid space).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import sets
from .eops import e_closure, e_interior, e_neighbourhoods, e_open_family
from .errors import GtfError
from .fops import DEFAULT_CAP, classify_closedness, classify_openness, enumerate_f_open, f_closure, f_interior
from .gnets import (
    converges,
    e_converges,
    e_limit_points,
    e_limits,
    is_et1,
    is_ft1,
    limit_points,
    limits,
    witness_gnet,
)
from .io import dump_space, gnet_to_dict, load_gnet, load_space
from .laws import (
    ANTI_LAWS,
    DEFAULT_GNETS,
    DEFAULT_SEED,
    DEFAULT_SPACES,
    LAWS,
    acceptance_spaces,
    format_table,
    run_laws,
)
from .space import EXAMPLE_VARIANTS, closure, example_space, interior, validate_gtf


class Output:
    def __init__(self, fmt: str, universe=None):
        self.fmt = fmt
        self.universe = universe

    def emit(self, text: str, data) -> None:
        if self.fmt == "json":
            print(json.dumps(data, ensure_ascii=False, indent=2))
        else:
            print(text)

    def set(self, mask: int) -> None:
        self.emit(self.universe.format(mask), self.universe.labels_of(mask))

    def family(self, family) -> None:
        ordered = sets.canonical(family)
        self.emit(self.universe.format_family(ordered), [self.universe.labels_of(x) for x in ordered])

    def flag(self, value: bool) -> None:
        self.emit("yes" if value else "no", value)


def _add_format(p):
    p.add_argument("--format", choices=("text", "json"), default="text")


def _space_cmd(sub, name, help_, *, set_=False, point=False, gnet=False, cap=False, e_flag=False):
    p = sub.add_parser(name, help=help_)
    p.add_argument("space", help="space JSON file")
    if gnet:
        p.add_argument("gnet", help="gnet JSON file")
    if set_:
        p.add_argument("--set", required=True, dest="set_", metavar="LABELS",
                       help='comma separated labels; "" for the empty set')
    if point:
        p.add_argument("--point", required=True, metavar="LABEL")
    if cap:
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration cap on |W|")
    if e_flag:
        p.add_argument("--e", action="store_true", help="use E-neighbourhoods instead of F")
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration cap on |W|")
    _add_format(p)
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gtf", description="Finite gtf-structure toolkit")
    sub = parser.add_subparsers(dest="command", required=True)
    _space_cmd(sub, "validate", "check the gtf-structure axioms")
    _space_cmd(sub, "int", "classical interior", set_=True)
    _space_cmd(sub, "cl", "classical closure", set_=True)
    _space_cmd(sub, "fint", "F-interior", set_=True)
    _space_cmd(sub, "fcl", "F-closure", set_=True)
    _space_cmd(sub, "eint", "E-interior", set_=True, cap=True)
    _space_cmd(sub, "ecl", "E-closure", set_=True, cap=True)
    _space_cmd(sub, "classify", "F-open/closed classification of a set", set_=True)
    _space_cmd(sub, "fopen", "enumerate F-open sets", cap=True)
    _space_cmd(sub, "eopen", "enumerate E-open sets", cap=True)
    _space_cmd(sub, "eneigh", "E-neighbourhoods of a point", point=True, cap=True)
    _space_cmd(sub, "ft1", "is the space FT1")
    _space_cmd(sub, "et1", "is the space ET1", cap=True)
    _space_cmd(sub, "converge", "does the gnet converge to the point", gnet=True, point=True)
    _space_cmd(sub, "econverge", "does the gnet E-converge to the point", gnet=True, point=True, cap=True)
    _space_cmd(sub, "limits", "limits of a gnet", gnet=True, e_flag=True)
    _space_cmd(sub, "limit-points", "limit points of a gnet", gnet=True, e_flag=True)
    _space_cmd(sub, "witness", "gnet in A converging to the point, if any", set_=True, point=True)

    p = sub.add_parser("example", help="emit a truncated odd-integer example space")
    p.add_argument("--name", choices=EXAMPLE_VARIANTS, default="base")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--output", "-o", help="write to this file instead of stdout")

    p = sub.add_parser("laws", help="run the law suite")
    p.add_argument("--size", type=int, default=7, help="largest random universe")
    p.add_argument("--samples", type=int, default=DEFAULT_SPACES, help="random spaces")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--gnets", type=int, default=DEFAULT_GNETS, help="random gnets per space")
    p.add_argument("--exhaustive", type=int, default=2, help="also enumerate every space up to this size (<= 3)")
    p.add_argument("--laws", default=None, help="comma separated law ids (default: all)")
    p.add_argument("--witnesses", type=int, default=1, help="witnesses kept per law")
    _add_format(p)
    return parser


def _run(args) -> int:
    cmd = args.command
    if cmd == "example":
        text = dump_space(example_space(args.name, args.k), args.output)
        if args.output is None:
            print(text)
        return 0
    if cmd == "laws":
        return _run_laws(args)

    space = load_space(args.space, check=False)
    u = space.universe
    out = Output(args.format, u)
    if cmd == "validate":
        report = validate_gtf(space)
        out.emit("valid" if report.ok else "\n".join(report.messages()),
                 {"valid": report.ok, "violations": report.violations})
        return 0 if report.ok else 2
    space.require_valid()

    a = u.parse_literal(args.set_) if getattr(args, "set_", None) is not None else None
    w = u.index(args.point) if getattr(args, "point", None) is not None else None
    g = load_gnet(args.gnet, u) if getattr(args, "gnet", None) is not None else None
    cap = getattr(args, "cap", DEFAULT_CAP)

    if cmd in ("int", "cl", "fint", "fcl"):
        fn = {"int": interior, "cl": closure, "fint": f_interior, "fcl": f_closure}[cmd]
        out.set(fn(space, a))
    elif cmd == "eint":
        out.set(e_interior(space, a, cap))
    elif cmd == "ecl":
        out.set(e_closure(space, a, cap))
    elif cmd == "classify":
        o, c = classify_openness(space, a), classify_closedness(space, a)
        flags = {**vars(o), **vars(c)}
        out.emit("\n".join(f"{k}: {'yes' if v else 'no'}" for k, v in flags.items()), flags)
    elif cmd == "fopen":
        out.family(enumerate_f_open(space, cap))
    elif cmd == "eopen":
        out.family(e_open_family(space, cap).opens)
    elif cmd == "eneigh":
        out.family(e_neighbourhoods(space, w, cap).family)
    elif cmd == "ft1":
        out.flag(is_ft1(space))
    elif cmd == "et1":
        out.flag(is_et1(space, cap))
    elif cmd == "converge":
        out.flag(converges(space, g, w))
    elif cmd == "econverge":
        out.flag(e_converges(space, g, w, cap))
    elif cmd == "limits":
        out.set(e_limits(space, g, cap) if args.e else limits(space, g))
    elif cmd == "limit-points":
        out.set(e_limit_points(space, g, cap) if args.e else limit_points(space, g))
    elif cmd == "witness":
        found = witness_gnet(space, w, a)
        if found is None:
            out.emit("none", None)
        else:
            data = gnet_to_dict(found, u)
            out.emit(json.dumps(data, ensure_ascii=False, indent=2), data)
    return 0


def _run_laws(args) -> int:
    ids = [x.strip() for x in args.laws.split(",")] if args.laws else list(LAWS)
    unknown = [i for i in ids if i not in LAWS]
    if unknown:
        print(f"gtf: unknown law ids {unknown}", file=sys.stderr)
        return 2
    positive = [i for i in ids if i not in ANTI_LAWS]
    anti = [i for i in ids if i in ANTI_LAWS]

    def source(exhaustive):
        return acceptance_spaces(args.samples, args.seed, args.size, exhaustive)

    reports = []
    if positive:
        reports += run_laws(source(args.exhaustive), positive, args.seed, args.gnets,
                            max_witnesses=args.witnesses)
    if anti:
        reports += run_laws(source(max(args.exhaustive, 3)), anti, args.seed, args.gnets,
                            max_witnesses=args.witnesses)
    order = {i: k for k, i in enumerate(ids)}
    reports.sort(key=lambda r: order[r.law_id])
    ok = all(r.ok for r in reports)
    data = {"ok": ok, "seed": args.seed, "reports": [r.to_dict() for r in reports]}
    Output(args.format).emit(format_table(reports), data)
    return 0 if ok else 1


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except FileNotFoundError as exc:
        print(f"gtf: {exc.filename}: no such file", file=sys.stderr)
    except GtfError as exc:
        print(f"gtf: {exc}", file=sys.stderr)
    except KeyError as exc:
        print(f"gtf: {exc}", file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())
