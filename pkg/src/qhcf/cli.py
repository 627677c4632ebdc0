"""Command-line front end: ``qhcf <subcommand> [flags]``.

Output is compact JSON unless ``--format text`` is given.  Exit status is 0
on success, 2 for bad arguments and 1 when a computation fails.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction
from typing import Sequence, TextIO

from .golden import SUITES, run_suite
from .hcf import cf_vector_q1, hcf_q_matrix, mgo_qrational
from .matrixcalc import product_X
from .poly import RatFunc
from .posit import (
    NoSwappablePosition,
    OrderViolation,
    PositivityViolation,
    complement_pairs,
    positivity_difference,
)
from .shape import CFrac, IndexOutOfRange, InvalidRational, build_strip, omega_gf
from .stabilize import IrrationalCF, stable_series

__all__ = ["main", "run", "build_parser"]

DEFAULT_MAX_ORDER = 256


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _cf(text: str) -> CFrac:
    try:
        return CFrac.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _icf(text: str) -> IrrationalCF:
    try:
        return IrrationalCF.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def max_order() -> int:
    raw = os.environ.get("QHCF_MAX_ORDER", "")
    try:
        return int(raw) if raw else DEFAULT_MAX_ORDER
    except ValueError:
        raise UsageError(f"QHCF_MAX_ORDER must be an integer, got {raw!r}")


def _add_source(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--rational", type=_rational, help="a rational >= 1, e.g. 17/3")
    g.add_argument("--cf", type=_cf, help="continued fraction terms, e.g. 5,1,2")


def _source(args) -> CFrac:
    if args.cf is not None:
        return args.cf
    return CFrac.from_rational(args.rational)


def _check_m(m: int) -> None:
    if m < 1:
        raise UsageError("--m must be at least 1")


def _check_im(i: int, m: int) -> None:
    _check_m(m)
    if not 0 <= i <= m:
        raise UsageError(f"--i must lie in 0..{m}")


# each handler returns (json payload, text rendering)

def cmd_cf(args):
    cf = _source(args)
    v = cf.value
    return {"cf": list(cf.terms), "value": str(v)}, f"{v} = {cf}"


def cmd_strip(args):
    cf = _source(args)
    strip = build_strip(cf)
    return strip.to_json(), strip.render()


def cmd_omega(args):
    cf = _source(args)
    _check_m(args.m)
    p = omega_gf(build_strip(cf), args.m, args.i, args.j, args.variant)
    return p.to_json(), str(p)


def cmd_matrix(args):
    cf = _source(args)
    _check_m(args.m)
    X = product_X(cf, args.m)
    if args.q1:
        vals = X.eval_q1()
        return {"cf": list(cf.terms), "m": args.m, "matrix": [[str(x) for x in r] for r in vals]}, "\n".join(
            " ".join(str(x) for x in r) for r in vals
        )
    text = "\n".join(" | ".join(str(x) for x in r) for r in X.rows)
    return {"cf": list(cf.terms), "m": args.m, "matrix": X.to_json()}, text


def _ratfunc_text(f: RatFunc) -> str:
    return f"({f.numerator}) / ({f.denominator})"


def cmd_hcf(args):
    cf = _source(args)
    m = args.m
    if args.i is not None:
        _check_im(args.i, m)
    else:
        _check_m(m)
    indices = [args.i] if args.i is not None else list(range(m, -1, -1))
    if args.q1:
        vec = cf_vector_q1(cf, m)
        vals = [str(vec[i]) for i in indices]
        if args.i is not None:
            return {"cf": list(cf.terms), "i": args.i, "m": m, "value": vals[0]}, vals[0]
        return {"cf": list(cf.terms), "values": vals}, " ".join(vals)
    fs = [hcf_q_matrix(cf, i, m) for i in indices]
    if args.i is not None:
        f = fs[0]
        payload = {"cf": list(cf.terms), "i": args.i, "m": m, **f.to_json()}
        return payload, _ratfunc_text(f)
    payload = {"cf": list(cf.terms), "m": m, "values": [f.to_json() for f in fs]}
    return payload, "\n".join(f"r_{i}: {_ratfunc_text(f)}" for i, f in zip(indices, fs))


def cmd_mgo(args):
    cf = _source(args)
    f = mgo_qrational(cf)
    return {"cf": list(cf.terms), **f.to_json()}, _ratfunc_text(f)


def cmd_stabilize(args):
    _check_im(args.i, args.m)
    if args.order < 0:
        raise UsageError("--order must be nonnegative")
    cap = max_order()
    if args.order > cap:
        raise UsageError(f"--order {args.order} exceeds QHCF_MAX_ORDER={cap}")
    s = stable_series(args.cf, args.i, args.m, args.order)
    coeffs = [str(c) for c in s.coeffs]
    return {"order": s.order, "coeffs": coeffs}, s.as_poly().pretty() + f" + O(q^{s.order + 1})"


def cmd_positivity(args):
    _check_im(args.i, args.m)
    diff = positivity_difference(args.a, args.b, args.i, args.m)
    payload = {"a": str(args.a), "b": str(args.b), "i": args.i, "m": args.m, "difference": diff.to_json()}
    lines = [str(diff)]
    if args.pairs:
        pairs = complement_pairs(args.a, args.b, args.i, args.m)
        payload["pairs"] = [{"left": list(p.left), "right": list(p.right), "weight": p.weight} for p in pairs]
        lines += [f"{list(p.left)} {list(p.right)} q^{p.weight}" for p in pairs]
    return payload, "\n".join(lines)


def cmd_verify(args):
    results = run_suite(args.suite)
    ok = all(r for _, r in results)
    payload = {"suite": args.suite, "passed": ok, "results": [{"name": n, "ok": r} for n, r in results]}
    text = "\n".join(f"{'PASS' if r else 'FAIL'} {n}" for n, r in results)
    return payload, text, (0 if ok else 1)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")

    parser = argparse.ArgumentParser(prog="qhcf", description="q-deformed higher continued fractions")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cf", parents=[common], help="continued fraction of a rational")
    _add_source(p)
    p.set_defaults(func=cmd_cf)

    p = sub.add_parser("strip", parents=[common], help="border strip cells")
    _add_source(p)
    p.set_defaults(func=cmd_strip)

    p = sub.add_parser("omega", parents=[common], help="P-partition generating function")
    _add_source(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--variant", choices=("plain", "bar"), default="plain")
    p.set_defaults(func=cmd_omega)

    p = sub.add_parser("matrix", parents=[common], help="the product matrix X_G(q)")
    _add_source(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--q1", action="store_true", help="specialise to q=1")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("hcf", parents=[common], help="higher (q-)continued fraction r_{i,m}")
    _add_source(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--i", type=int, help="omit for the whole vector r_m..r_0")
    p.add_argument("--q1", action="store_true", help="specialise to q=1")
    p.set_defaults(func=cmd_hcf)

    p = sub.add_parser("mgo", parents=[common], help="the m=1 nested q-rational")
    _add_source(p)
    p.set_defaults(func=cmd_mgo)

    p = sub.add_parser("stabilize", parents=[common], help="limit series at an irrational")
    p.add_argument("--cf", type=_icf, required=True, help='e.g. "1,3,15:periodic=1,3,3"')
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(func=cmd_stabilize)

    p = sub.add_parser("positivity", parents=[common], help="B R - A S for r/s > a/b")
    p.add_argument("--a", type=_rational, required=True, help="the larger rational r/s")
    p.add_argument("--b", type=_rational, required=True, help="the smaller rational a/b >= 1")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--pairs", action="store_true", help="also list the complement pairs")
    p.set_defaults(func=cmd_positivity)

    p = sub.add_parser("verify", parents=[common], help="run a suite of worked examples")
    p.add_argument("--suite", choices=sorted(SUITES), default="paper-examples")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with redirect_stdout(out), redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        res = args.func(args)
    except (UsageError, InvalidRational, IndexOutOfRange, OrderViolation, ValueError) as e:
        print(parser.format_usage().rstrip(), file=err)
        print(f"qhcf {args.command}: error: {e}", file=err)
        return 2
    except (ArithmeticError, PositivityViolation, NoSwappablePosition) as e:
        print(f"qhcf {args.command}: computation failed: {e}", file=err)
        return 1
    payload, text, *code = res
    if args.format == "json":
        print(json.dumps(payload, separators=(",", ":")), file=out)
    else:
        print(text, file=out)
    return code[0] if code else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
