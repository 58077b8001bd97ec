"""Command-line entry point.

Exit status: 0 when every check passes, 1 when a check fails, 2 for bad
input (configuration, polynomial syntax, preconditions).
"""

from __future__ import annotations

import argparse
import json
import sys

from .cyclo import SeedKind, SeedPair, cyclotomic_int, eval_symmetric
from .errors import PrimdivError
from .factor_fp import factor_fp
from .mpoly import RingSpec
from .polytext import format_poly, parse_poly
from .resultant import LEMMAS as RESULTANT_LEMMAS
from .resultant import resultant_lemma_check
from .sequences import Kind, SequenceSpec, primitive_part, seq_term, strong_div_check, strong_div_witness
from .suites import SUITES, SuiteConfig, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

SEED_FOR_KIND = {"F": SeedKind.FG, "S": SeedKind.FG, "L": SeedKind.LUCAS, "U": SeedKind.LEHMER}


def _ring(args) -> RingSpec:
    return RingSpec(args.char, args.vars)


def _spec(args) -> SequenceSpec:
    ring = _ring(args)
    if args.seed_a is None or args.seed_b is None:
        raise PrimdivError("--seed-a and --seed-b are required")
    a, b = parse_poly(args.seed_a, ring), parse_poly(args.seed_b, ring)
    return SequenceSpec(Kind(args.kind), SeedPair(SEED_FOR_KIND[args.kind], a, b))


def _emit(args, text: str):
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_seq(args) -> int:
    spec = _spec(args)
    indices = [args.n] if args.n else range(1, args.max_n + 1)
    lines = [f"{args.kind}_{n} = {format_poly(seq_term(spec, n))}" for n in indices]
    _emit(args, "\n".join(lines))
    return EXIT_OK


def cmd_primitive_part(args) -> int:
    spec = _spec(args)
    rep = primitive_part(spec, args.n)
    has = rep.degree >= 1 and all(ok for _, ok in rep.coprime_witness)
    out = {
        "n": rep.n.n,
        "term": format_poly(rep.term),
        "primitive_part": format_poly(rep.primitive_part),
        "degree": rep.degree,
        "coprime_witness": [{"index": d, "coprime": ok} for d, ok in rep.coprime_witness],
        "has_primitive_divisor": has,
    }
    _emit(args, json.dumps(out, indent=2))
    return EXIT_OK if has else EXIT_FAIL


def cmd_strongdiv(args) -> int:
    spec = _spec(args)
    if args.m and args.n:
        g = strong_div_witness(spec, args.m, args.n)
        ok = strong_div_check(spec, args.m, args.n)
        out = {"m": args.m, "n": args.n, "pass": ok, "gcd": None if g is None else format_poly(g)}
        _emit(args, json.dumps(out, indent=2))
        return EXIT_OK if ok else EXIT_FAIL
    failures = [(m, n) for n in range(2, args.max_n + 1) for m in range(1, n)
                if not strong_div_check(spec, m, n)]
    out = {"max_n": args.max_n, "failures": [{"m": m, "n": n} for m, n in failures]}
    _emit(args, json.dumps(out, indent=2))
    return EXIT_FAIL if failures else EXIT_OK


def cmd_resultant(args) -> int:
    res = resultant_lemma_check(args.lemma, args.m or 0, args.n)
    _emit(args, json.dumps({"lemma": res.lemma, "m": res.m, "n": res.n,
                            "resultant": res.value, "pass": res.passed}, indent=2))
    return EXIT_OK if res.passed else EXIT_FAIL


def cmd_cyclotomic(args) -> int:
    phi = cyclotomic_int(args.n)
    if args.seed_a is not None:
        spec = _spec(args)
        value = eval_symmetric(phi, spec.seed)
        _emit(args, format_poly(value))
    else:
        _emit(args, str(phi))
    return EXIT_OK


def cmd_factor(args) -> int:
    h = parse_poly(args.poly, _ring(args))
    fz = factor_fp(h, args.rand_seed)
    parts = [f"({format_poly(f)})" + (f"^{k}" if k > 1 else "") for f, k in fz.factors]
    _emit(args, " * ".join([str(fz.unit.residue)] + parts))
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = SuiteConfig(char=args.char, vars=args.vars, max_n=args.max_n,
                      trials=args.trials, seed=args.rand_seed)
    report = run_suite(args.suite, cfg)
    _emit(args, report.to_json())
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--char", type=int, default=0, help="field characteristic, 0 for the rationals")
    common.add_argument("--vars", type=int, default=1, help="number of variables")
    common.add_argument("--out", help="write output to this file instead of stdout")

    seq = argparse.ArgumentParser(add_help=False)
    seq.add_argument("--kind", choices=list(SEED_FOR_KIND), default="F")
    seq.add_argument("--seed-a", help="f, s or E depending on the kind")
    seq.add_argument("--seed-b", help="g or q depending on the kind")

    parser = argparse.ArgumentParser(prog="primdiv", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", parents=[common, seq], help="print sequence terms")
    p.add_argument("--n", type=int)
    p.add_argument("--max-n", type=int, default=10)
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("primitive-part", parents=[common, seq], help="primitive part of one term")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_primitive_part)

    p = sub.add_parser("strongdiv", parents=[common, seq], help="check gcd(a_m, a_n) = a_gcd(m,n)")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--max-n", type=int, default=20)
    p.set_defaults(func=cmd_strongdiv)

    p = sub.add_parser("resultant", parents=[common], help="resultant behind a coprimality lemma")
    p.add_argument("--lemma", choices=list(RESULTANT_LEMMAS), required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_resultant)

    p = sub.add_parser("cyclotomic", parents=[common, seq], help="homogeneous cyclotomic form or its value")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_cyclotomic)

    p = sub.add_parser("factor", parents=[common], help="factor a univariate polynomial over F_p")
    p.add_argument("poly")
    p.add_argument("--rand-seed", type=int, default=None)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite, JSON report")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--max-n", type=int, default=24)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--rand-seed", type=int, default=42)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except PrimdivError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
