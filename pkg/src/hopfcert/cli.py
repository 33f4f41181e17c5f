"""hopfcert command line.

    hopfcert check {sweedler,uqsl2,double-group,vect-g,properties} [options]
    hopfcert predicate NAME --hopf FILE --r NAME [--j NAME] [--algebra FILE]
    hopfcert export {sweedler,double-group,vect-g} --out DIR

Exit codes: 0 ok, 1 verdict mismatch, 2 parse/validation error,
3 certificate re-verification failure.
"""
from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import catalog as cat
from . import io
from .decide import (InvalidTwist, RouteDisagreement, fully_exact, op_fully_exact, perfect,
                     relatively_projective, separable, vect_predicates)
from .suites import SUITES

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_REVERIFY = 0, 1, 2, 3


def _rational(s):
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {s!r}")


def _positive(s):
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser():
    p = argparse.ArgumentParser(prog="hopfcert", description="Exact certificates for module-category predicates.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="run a reproduction suite")
    c.add_argument("suite", choices=sorted(SUITES))
    c.add_argument("--t", dest="t", action="append", type=_rational, help="Sweedler R_t sample (repeatable)")
    c.add_argument("--lambda", dest="lam", action="append", type=_rational, help="Sweedler twist R_lambda (repeatable)")
    c.add_argument("--p", type=int, default=3, help="odd order of q for u_q(sl2)")
    c.add_argument("--n", type=_positive, default=2, help="order of the cyclic group")
    c.add_argument("--char", dest="charP", type=int, default=2, help="characteristic (0 for Q)")
    c.add_argument("--out", help="write the JSON report here")
    c.add_argument("--format", choices=["json", "text"], default="text")

    q = sub.add_parser("predicate", help="evaluate one predicate on structure-constant files")
    q.add_argument("name", choices=sorted(PREDICATES))
    q.add_argument("--hopf", required=True)
    q.add_argument("--r", dest="rname", required=True)
    q.add_argument("--j", dest="jname")
    q.add_argument("--algebra")
    q.add_argument("--out")

    e = sub.add_parser("export", help="write catalog entries as JSON documents")
    e.add_argument("entry", choices=["sweedler", "double-group", "vect-g"])
    e.add_argument("--n", type=_positive, default=2)
    e.add_argument("--char", dest="charP", type=int, default=2)
    e.add_argument("--out", required=True, help="output directory")
    return p


def _vect(key):
    def run(h, r, j, a):
        rep = vect_predicates(h, r, j)
        rep.predicate = f"vect-{key}"
        rep.verdict = rep.details[{"fully-exact": "fullyExact", "op-fully-exact": "opFullyExact",
                                   "invertible": "invertible"}[key]]
        return rep
    return run


PREDICATES = {
    "separable": lambda h, r, j, a: separable(a),
    "relatively-projective": lambda h, r, j, a: relatively_projective(a),
    "fully-exact": lambda h, r, j, a: fully_exact(a, r),
    "op-fully-exact": lambda h, r, j, a: op_fully_exact(a, r),
    "perfect": lambda h, r, j, a: perfect(a, r),
    "vect-fully-exact": _vect("fully-exact"),
    "vect-op-fully-exact": _vect("op-fully-exact"),
    "vect-invertible": _vect("invertible"),
}


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_check(args) -> int:
    if args.suite == "sweedler":
        res = SUITES["sweedler"](ts=args.t or (0, 1), lambdas=args.lam or (1, -1, 5))
    elif args.suite == "uqsl2":
        if args.p < 3 or args.p % 2 == 0:
            raise cat.InvalidOrder("--p must be odd and at least 3")
        res = SUITES["uqsl2"](p=args.p)
    elif args.suite == "double-group":
        res = SUITES["double-group"](n=args.n, charP=args.charP)
    elif args.suite == "vect-g":
        res = SUITES["vect-g"](n=args.n, charP=args.charP)
    else:
        res = SUITES["properties"]()
    if args.out:
        _emit(io.dumps(res.to_json()), args.out)
    if args.format == "json" and not args.out:
        sys.stdout.write(io.dumps(res.to_json()))
    else:
        sys.stdout.write(res.text())
    return EXIT_OK if res.ok else EXIT_MISMATCH


def cmd_predicate(args) -> int:
    h, rms, ccs = io.hopf_from_dict(io.load_json(args.hopf))
    if args.rname not in rms:
        raise io.ValidationError(f"--r: no R-matrix named {args.rname!r} (have {sorted(rms)})")
    r = rms[args.rname]
    j = None
    if args.jname:
        if args.jname not in ccs:
            raise io.ValidationError(f"--j: no cocycle named {args.jname!r} (have {sorted(ccs)})")
        j = ccs[args.jname]
    a = None
    if not args.name.startswith("vect"):
        if not args.algebra:
            raise io.ValidationError(f"{args.name} needs --algebra")
        a = io.module_algebra_from_dict(io.load_json(args.algebra), h)
    rep = PREDICATES[args.name](h, r, j, a)
    _emit(io.dumps(rep.to_json()), args.out)
    return EXIT_OK


def cmd_export(args) -> int:
    os.makedirs(args.out, exist_ok=True)
    if args.entry == "sweedler":
        e = cat.sweedler()
        stem = "sweedler"
    elif args.entry == "double-group":
        e = cat.drinfeld_double_group(args.n, args.charP)
        stem = f"double_c{args.n}_f{args.charP}"
    else:
        e = cat.group_family(args.n, args.charP or None)["k^G"]
        stem = f"funcs_c{args.n}_f{args.charP}"
    docs = {f"{stem}.json": io.hopf_to_dict(e.hopf, e.rmatrices, e.cocycles)}
    for name, a in e.module_algebras.items():
        safe = name.replace("*", "star")
        docs[f"{stem}_{safe}.json"] = io.module_algebra_to_dict(a)
    for fn, doc in docs.items():
        with open(os.path.join(args.out, fn), "w") as fh:
            fh.write(io.dumps(doc))
        print(os.path.join(args.out, fn))
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "check":
            return cmd_check(args)
        if args.command == "predicate":
            return cmd_predicate(args)
        return cmd_export(args)
    except (io.ParseError, io.ValidationError, InvalidTwist, cat.CatalogInvalid, cat.InvalidOrder) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except (RouteDisagreement, AssertionError) as e:
        print(f"re-verification failure: {e}", file=sys.stderr)
        return EXIT_REVERIFY


if __name__ == "__main__":
    sys.exit(main())
