"""
``laz-kit`` command line.

Stages communicate through files: ``construct`` writes a family JSON,
which ``af``, ``zone``, ``certify`` and ``validate`` read back.

Exit codes: 0 success, 1 validation or reproduction failure, 2 usage
error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import bounds as B
from .af import aperiodic_grid, f_pi, family_grid, periodic_grid, theta_stats
from .constructions import (comb_scs_family, cubic_family, dft_orthogonal_family, generic_cubic,
                            quadratic_family, quadratic_sequence, scs_from_difference_set,
                            verify_difference_set)
from .oracles import selftest
from .reproduce import EXAMPLES
from .seqcore import SequenceFamily, Zone, validate_family
from .zones import is_zone, max_zone, zone_report

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


def dumps(obj, indent: int = 2) -> str:
    """JSON with floats written to 17 significant digits, so output is byte-stable."""

    def enc(o, level):
        pad = " " * (indent * (level + 1))
        end = " " * (indent * level)
        if isinstance(o, bool) or o is None:
            return json.dumps(o)
        if isinstance(o, (int, np.integer)):
            return str(int(o))
        if isinstance(o, (float, np.floating)):
            o = float(o)
            if not math.isfinite(o):
                raise ValueError("non-finite float in output")
            return format(o, ".17g")
        if isinstance(o, str):
            return json.dumps(o)
        if isinstance(o, dict):
            if not o:
                return "{}"
            items = [f"{pad}{json.dumps(str(k))}: {enc(v, level + 1)}" for k, v in o.items()]
            return "{\n" + ",\n".join(items) + "\n" + end + "}"
        if isinstance(o, (list, tuple, np.ndarray)):
            if len(o) == 0:
                return "[]"
            # numeric rows stay on one line
            if all(isinstance(v, (int, float, np.number)) and not isinstance(v, bool) for v in o):
                return "[" + ", ".join(enc(v, level + 1) for v in o) + "]"
            items = [pad + enc(v, level + 1) for v in o]
            return "[\n" + ",\n".join(items) + "\n" + end + "]"
        raise TypeError(f"cannot serialise {type(o).__name__}")

    return enc(obj, 0) + "\n"


def _write(text: str, path):
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    with open(path, "w") as fh:
        fh.write(text)


def _load_family(path: str) -> SequenceFamily:
    with open(path) as fh:
        obj = json.load(fh)
    try:
        return SequenceFamily.from_json(obj)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"bad family file {path}: {exc}") from exc


def _int_list(text: str) -> list:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.kind} needs --{', --'.join(missing)}")


def cmd_construct(args) -> int:
    kind = args.kind
    if kind == "cubic":
        _need(args, "n")
        fam = cubic_family(args.n)
    elif kind == "generic-cubic":
        _need(args, "n", "a")
        seq = generic_cubic(args.n, args.a, args.b or 0, args.c or 0)
        fam = SequenceFamily([seq], provenance={"construction": kind, "n": args.n, "a": args.a,
                                                "b": args.b or 0, "c": args.c or 0})
    elif kind == "quadratic":
        _need(args, "n", "a")
        if args.m is not None:
            fam = quadratic_family(args.n, args.a, args.m)
        else:
            seq = quadratic_sequence(args.n, args.a, args.b or 0)
            fam = SequenceFamily([seq], provenance={"construction": kind, "n": args.n, "a": args.a,
                                                    "b": args.b or 0})
    elif kind == "diffset-scs":
        _need(args, "n", "set")
        fam = scs_from_difference_set(verify_difference_set(args.n, args.set)).family
    elif kind == "comb-scs":
        _need(args, "n0", "k")
        rows = dft_orthogonal_family(args.n0)
        if args.rows is not None:
            rows = rows[args.rows]
        fam = comb_scs_family(rows, args.k)
        fam = SequenceFamily(fam.members, fam.mask, dict(fam.provenance, rows=args.rows))
    else:  # argparse restricts choices
        raise UsageError(kind)
    _write(dumps(fam.to_json()), args.output)
    return EXIT_OK


def cmd_af(args) -> int:
    fam = _load_family(args.family)
    if args.pair is not None:
        i, j = args.pair
        if not (0 <= i < fam.m and 0 <= j < fam.m):
            raise UsageError(f"pair indices must lie in 0..{fam.m - 1}")
        fn = periodic_grid if args.kind == "periodic" else aperiodic_grid
        grid = fn(fam[i], fam[j])
    else:
        grid = family_grid(fam, args.kind)
    text = grid.to_csv() if args.format == "csv" else dumps(grid.to_json())
    _write(text, args.output)
    return EXIT_OK


def _zone_arg(args):
    if (args.zx is None) != (args.zy is None):
        raise UsageError("--zx and --zy go together")
    return None if args.zx is None else Zone(args.zx, args.zy)


def cmd_zone(args) -> int:
    fam = _load_family(args.family)
    zone = _zone_arg(args)
    grid = family_grid(fam, args.kind)
    if zone is None:
        res = max_zone(fam, args.theta, args.kind, grid=grid)
        out = {"format": 1, "mode": "search", "kind": args.kind, **res.to_json(),
               "report": zone_report(fam, res.zone, args.kind, grid=grid)}
        _write(dumps(out), args.output)
        return EXIT_OK
    chk = is_zone(fam, zone, args.theta, args.kind, grid=grid)
    out = {"format": 1, "mode": "check", "kind": args.kind, "zone": zone.to_json(), "theta": args.theta,
           "ok": chk.ok, "in_zone_max": chk.in_zone_max,
           "witness": None if chk.witness is None else dict(zip(("tau", "nu", "mag"), chk.witness)),
           "report": zone_report(fam, zone, args.kind, grid=grid)}
    _write(dumps(out), args.output)
    return EXIT_OK if chk.ok else EXIT_FAIL


def cmd_bound(args) -> int:
    name = args.name
    p = {k: getattr(args, k) for k in ("n", "m", "zx", "zy", "l") if getattr(args, k) is not None}
    try:
        if name == "zaz-capacity":
            prod, area = B.zaz_capacity(p["n"], p.get("m", 1))
            out = {"format": 1, "bound": name, "inputs": {"n": p["n"], "m": p.get("m", 1)},
                   "max_product": prod, "max_area": area}
        elif name == "scs-global":
            auto, cross = B.scs_global_bounds(p["n"], p["l"])
            out = {"format": 1, "bound": name, "inputs": auto.inputs, "theta_a": auto.value, "theta_c": cross.value}
        else:
            fn = {
                "welch": lambda: B.welch_bound(p["n"], p.get("m", 1)),
                "scs-correlation": lambda: B.scs_correlation_bound(p["n"], p.get("m", 1), p["l"]),
                "ding": lambda: B.ding_af_bound(p["n"], p.get("m", 1)),
                "laz": lambda: B.laz_bound_unimodular(p["n"], p.get("m", 1), p["zx"], p["zy"]),
                "global": lambda: B.global_af_bound(p["n"]),
                "scs-laz": lambda: B.scs_laz_bound(p["n"], p.get("m", 1), p["zx"], p["zy"]),
                "scs-lcz": lambda: B.scs_lcz_bound(p["n"], p.get("m", 1), p["l"], p["zx"]),
                "aperiodic-laz": lambda: B.aperiodic_laz_bound(p["n"], p.get("m", 1), p["zx"], p["zy"]),
            }[name]
            out = {"format": 1, **fn().to_json()}
    except KeyError as exc:
        raise UsageError(f"bound {name} needs --{exc.args[0]}") from exc
    _write(dumps(out), args.output)
    return EXIT_OK


def cmd_certify(args) -> int:
    fam = _load_family(args.family)
    zone = None if args.use_global else _zone_arg(args)
    if zone is None:
        measured = theta_stats(fam, args.kind)
        if args.kind == "aperiodic":
            zone = Zone(fam.n, fam.n)
            measured = measured.theta_max
    else:
        measured = f_pi(fam, zone, args.kind)
    cert = B.certify(fam, measured, zone=zone, kind=args.kind, bound=args.bound)
    _write(dumps({"format": 1, **cert.to_json()}), args.output)
    return EXIT_OK


def cmd_validate(args) -> int:
    rep = validate_family(_load_family(args.family))
    _write(dumps({"format": 1, **rep.to_json()}), args.output)
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_example(args) -> int:
    checks = EXAMPLES[args.id]()
    ok = all(c.passed for c in checks)
    out = {"format": 1, "example": args.id, "pass": ok, "checks": [c.to_json() for c in checks]}
    _write(dumps(out), args.output)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_selftest(args) -> int:
    rows = selftest(args.seed)
    width = max(len(name) for name, _ in rows)
    lines = [f"{name.ljust(width)}  {'PASS' if ok else 'FAIL'}" for name, ok in rows]
    _write("\n".join(lines) + "\n", args.output)
    return EXIT_OK if all(ok for _, ok in rows) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="laz-kit", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def out(p):
        p.add_argument("-o", "--output", default=None, help="output file (default stdout)")

    p = sub.add_parser("construct", help="build a sequence family")
    p.add_argument("kind", choices=["cubic", "generic-cubic", "quadratic", "diffset-scs", "comb-scs"])
    for name in ("n", "a", "b", "c", "m", "n0", "k"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--set", type=_int_list, help="difference set, e.g. 4,5,8,10")
    p.add_argument("--rows", type=_int_list, help="rows of the DFT family to upsample")
    out(p)
    p.set_defaults(func=cmd_construct)

    kinds = ["periodic", "aperiodic"]

    p = sub.add_parser("af", help="ambiguity grid of a family or one pair")
    p.add_argument("family")
    p.add_argument("--kind", choices=kinds, default="periodic")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--pair", type=int, nargs=2, metavar=("I", "J"))
    out(p)
    p.set_defaults(func=cmd_af)

    p = sub.add_parser("zone", help="search for (or check) a low ambiguity zone")
    p.add_argument("family")
    p.add_argument("--theta", type=float, default=0.0)
    p.add_argument("--kind", choices=kinds, default="periodic")
    p.add_argument("--zx", type=int)
    p.add_argument("--zy", type=int)
    out(p)
    p.set_defaults(func=cmd_zone)

    p = sub.add_parser("bound", help="evaluate a lower bound")
    p.add_argument("name", choices=sorted(list(B.BOUNDS) + ["zaz-capacity", "scs-global"]))
    for name in ("n", "m", "zx", "zy", "l"):
        p.add_argument(f"--{name}", type=int)
    out(p)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("certify", help="compare a family with its lower bound")
    p.add_argument("family")
    p.add_argument("--global", dest="use_global", action="store_true")
    p.add_argument("--kind", choices=kinds, default="periodic")
    p.add_argument("--zx", type=int)
    p.add_argument("--zy", type=int)
    p.add_argument("--bound", choices=sorted(list(B.BOUNDS) + ["scs-global"]))
    out(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("validate", help="check periods, distinctness and spectral mask")
    p.add_argument("family")
    out(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("example", help="reproduce one of the worked examples")
    p.add_argument("id", type=int, choices=sorted(EXAMPLES))
    out(p)
    p.set_defaults(func=cmd_example)

    p = sub.add_parser("selftest", help="run the brute-force oracles")
    p.add_argument("--seed", type=int, default=0)
    out(p)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"laz-kit: {exc}", file=sys.stderr)
        return EXIT_IO
    except json.JSONDecodeError as exc:
        print(f"laz-kit: malformed JSON: {exc}", file=sys.stderr)
        return EXIT_IO
    except (UsageError, ValueError, TypeError) as exc:
        print(f"laz-kit: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
