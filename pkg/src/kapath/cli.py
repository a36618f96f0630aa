"""Command line entry point: ``kapath {enumerate,count,map,unmap,verify,table}``.

Exit codes: 0 success, 1 a verified claim failed, 2 bad arguments or input,
3 enumeration budget exceeded, 4 ``unmap`` input has no up step.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Optional, Sequence

from . import bijection, enumeration, identities
from .enumeration import ColoredHumpPath, Restriction
from .paths import INFINITY, LatticePath, PathError, PathParams

EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_NO_UP = 4

FAMILIES = ("paths", "super", "s_prime", "s_dprime")
COUNT_FAMILIES = FAMILIES + ("humps_total", "peaks_total")


def parse_int_range(text: str) -> list[int]:
    """``"3"``, ``"0..10"`` or ``"1,4,7"`` (items may themselves be ranges)."""
    out: list[int] = []
    for item in text.split(","):
        item = item.strip()
        if ".." in item:
            lo, hi = item.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        elif item:
            out.append(int(item))
    if not out:
        raise ValueError(f"empty range {text!r}")
    return out


def parse_a(text: str):
    t = text.strip().lower()
    if t in ("inf", "infinity"):
        return INFINITY
    a = int(t)
    if a < 1:
        raise ValueError("a must be >= 1 or inf")
    return a


def parse_a_list(text: str) -> list:
    out = []
    for item in text.split(","):
        if ".." in item:
            out.extend(parse_int_range(item))
        else:
            out.append(parse_a(item))
    return out


def _arg(parser_fn):
    def convert(text):
        try:
            return parser_fn(text)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None

    convert.__name__ = parser_fn.__name__
    return convert


def _positive(text):
    v = int(text)
    if v < 1:
        raise ValueError("must be >= 1")
    return v


def _nonnegative(text):
    v = int(text)
    if v < 0:
        raise ValueError("must be >= 0")
    return v


def _add_params(p, n_required=True):
    p.add_argument("--k", type=_arg(_positive), default=1, help="up-step rise (default 1)")
    p.add_argument("--a", type=_arg(parse_a), default=1, help="horizontal width or 'inf'")
    if n_required:
        p.add_argument("--n", type=_arg(_nonnegative), required=True, help="path order")


def _add_format(p, choices=("text", "json", "csv")):
    p.add_argument("--format", choices=choices, default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kapath", description="(k,a)-lattice paths, humps, peaks and the hump bijection."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list the words of a path family")
    p.add_argument("--family", choices=FAMILIES, default="paths")
    _add_params(p)
    _add_format(p, ("text", "json"))
    p.add_argument("--budget", type=_arg(_positive), default=None)

    p = sub.add_parser("count", help="count table of path families")
    p.add_argument("--k", type=_arg(parse_int_range), default=[1])
    p.add_argument("--a", type=_arg(parse_a_list), default=[1])
    p.add_argument("--n", type=_arg(parse_int_range), required=True)
    p.add_argument(
        "--families", default=",".join(COUNT_FAMILIES), help="comma list of families"
    )
    _add_format(p, ("csv", "json", "text"))
    p.add_argument("--budget", type=_arg(_positive), default=None)

    p = sub.add_parser("map", help="apply phi to a hump-colored path")
    _add_params(p, n_required=False)
    p.add_argument("word")
    p.add_argument("--hump", type=int, required=True, help="index of the hump's up step")
    p.add_argument("--color", type=int, required=True)

    p = sub.add_parser("unmap", help="apply psi to a super path")
    _add_params(p, n_required=False)
    p.add_argument("word")

    p = sub.add_parser("verify", help="check identities over a grid")
    p.add_argument("--claims", default="eq4,eq5", help="comma list of claim ids")
    p.add_argument("--k", type=_arg(parse_int_range), default=[1, 2, 3])
    p.add_argument("--a", type=_arg(parse_a_list), default=[1, 2, 3, INFINITY])
    p.add_argument("--n", type=_arg(parse_int_range), default=list(range(13)))
    _add_format(p, ("text", "json"))
    p.add_argument("--budget", type=_arg(_positive), default=None)

    p = sub.add_parser("table", help="closed-form peak counts over a range of m")
    p.add_argument("--formula", choices=("narayana", "peaks", "suu", "sud"), required=True)
    p.add_argument("--k", type=_arg(_positive), default=1)
    p.add_argument("--n", type=_arg(_positive), required=True, help="number of up steps")
    p.add_argument("--m", type=_arg(parse_int_range), default=None)
    _add_format(p)
    return parser


def _budget(args) -> int:
    return args.budget if args.budget is not None else identities.default_budget()


def _params(args) -> PathParams:
    return PathParams(args.k, args.a)


def cmd_enumerate(args, out) -> int:
    params = _params(args)
    if enumeration.count_super(args.n, params) > _budget(args):
        print(f"error: order {args.n} exceeds the enumeration budget", file=sys.stderr)
        return EXIT_BUDGET
    if args.family == "paths":
        stream = enumeration.enumerate_paths(args.n, params)
    elif args.family == "super":
        stream = enumeration.enumerate_super(args.n, params)
    else:
        stream = enumeration.enumerate_restricted(args.n, params, Restriction(args.family))
    words = (p.word for p in stream)
    if args.format == "json":
        out.write(json.dumps(list(words)) + "\n")
    else:
        for w in words:
            out.write(w + "\n")
    return 0


def _family_value(family: str, n: int, params: PathParams) -> int:
    if family == "paths":
        return enumeration.count_paths(n, params)
    if family == "super":
        return enumeration.count_super(n, params)
    if family == "s_prime":
        return enumeration.count_super(n, params) - enumeration.delta_divides(n, params)
    if family == "s_dprime":
        rest = enumeration.count_super(n - params.a, params) if params.a_is_finite else 0
        return enumeration.count_super(n, params) - rest - int(n == 0)
    mode = enumeration.Mode.HUMP if family == "humps_total" else enumeration.Mode.PEAK
    return enumeration.total_statistic(n, params, mode)


def cmd_count(args, out) -> int:
    families = [f.strip() for f in args.families.split(",") if f.strip()]
    bad = [f for f in families if f not in COUNT_FAMILIES]
    if bad:
        print(f"error: unknown families {bad}", file=sys.stderr)
        return EXIT_USAGE
    rows = []
    for k in args.k:
        for a in args.a:
            params = PathParams(k, a)
            for n in args.n:
                for fam in families:
                    if fam.endswith("_total") and enumeration.count_super(n, params) > _budget(args):
                        print(f"error: order {n} exceeds the enumeration budget", file=sys.stderr)
                        return EXIT_BUDGET
                    rows.append((n, k, params.format_a(), fam, _family_value(fam, n, params)))
    _emit_rows(out, ("n", "k", "a", "family", "value"), rows, args.format)
    return 0


def _emit_rows(out, header, rows, fmt):
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    elif fmt == "json":
        objs = [
            {h: (str(v) if h == "value" else v) for h, v in zip(header, row)} for row in rows
        ]
        out.write(json.dumps(objs) + "\n")
    else:
        for row in rows:
            out.write(" ".join(str(v) for v in row) + "\n")


def _mapping_json(colored: ColoredHumpPath, super_path: LatticePath, forward: bool) -> dict:
    case = bijection.case_of_color(colored.color, colored.path.params.k)
    src, dst = (colored.path, super_path) if forward else (super_path, colored.path)
    return {
        "input": src.to_json(),
        "hump_up_index": colored.hump.up_index,
        "color": colored.color,
        "output": dst.to_json(),
        "case": case.value,
    }


def cmd_map(args, out) -> int:
    try:
        path = LatticePath(_params(args), args.word)
        cp = ColoredHumpPath.at(path, args.hump, args.color)
    except (PathError, enumeration.MalformedColoredPath) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    image = bijection.phi(cp)
    out.write(json.dumps(_mapping_json(cp, image, forward=True)) + "\n")
    return 0


def cmd_unmap(args, out) -> int:
    try:
        path = LatticePath(_params(args), args.word)
        cp = bijection.psi(path)
    except bijection.NoUpStep as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_UP
    except PathError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out.write(json.dumps(_mapping_json(cp, path, forward=False)) + "\n")
    return 0


def cmd_verify(args, out) -> int:
    try:
        claims = [identities.Claim(c.strip().upper()) for c in args.claims.split(",") if c.strip()]
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    positive_ns = [n for n in args.n if n >= 1]
    config = identities.SweepConfig(
        ks=args.k, as_=args.a, ns=args.n, budget=_budget(args), lemma_ns=positive_ns
    )
    result = identities.run_sweep(claims, config)
    for r in result.reports:
        out.write((r.dumps() if args.format == "json" else r.describe()) + "\n")
    for claim, cell in result.skipped:
        if args.format == "json":
            out.write(json.dumps({"claim": claim, **cell, "skipped": True}) + "\n")
        else:
            out.write(f"skip {claim} {cell}\n")
    return 0 if result.ok else EXIT_FAILED


def cmd_table(args, out) -> int:
    n, k = args.n, args.k
    ms = args.m if args.m is not None else list(range(1, n + 1))
    if any(m < 1 for m in ms):
        print("error: m must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    fn = {
        "narayana": lambda m: enumeration.narayana(n, m),
        "peaks": lambda m: enumeration.count_kary_peak_paths(n, k, m),
        "suu": lambda m: enumeration.count_suu(n, k, m),
        "sud": lambda m: enumeration.count_sud(n, k, m),
    }[args.formula]
    values = [fn(m) for m in ms]
    if args.format == "text":
        out.write(",".join(str(v) for v in values) + "\n")
    else:
        rows = [(n, k, m, args.formula, v) for m, v in zip(ms, values)]
        _emit_rows(out, ("n", "k", "m", "formula", "value"), rows, args.format)
    return 0


COMMANDS = {
    "enumerate": cmd_enumerate,
    "count": cmd_count,
    "map": cmd_map,
    "unmap": cmd_unmap,
    "verify": cmd_verify,
    "table": cmd_table,
}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return COMMANDS[args.command](args, out)


if __name__ == "__main__":
    raise SystemExit(main())
