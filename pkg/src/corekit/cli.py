"""Command-line front end.

Exit codes: 0 success (including a "not t-core" verdict), 1 failed
comparison or verification, 2 unparsable input, 3 violated precondition,
4 argument outside a function's domain.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .bijections import sc_to_distinct_odd
from .classnumbers import hurwitz, sc2_count, sc3_count
from .enumeration import sc_t_counts_bruteforce
from .errors import CorekitError, NonNegativeArgument, NotSelfConjugate
from .hooks import hook_table, is_t_core_naive, is_t_core_sc
from .partitions import format_partition, is_self_conjugate, parse_partition
from .supernorm import supernorm, supernorm_inverse, t_core_supernorm_set
from .verification import SUITES, run_suite, sc7_table

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_PRECONDITION, EXIT_DOMAIN = 0, 1, 2, 3, 4


class UsageError(Exception):
    def __init__(self, message, code=EXIT_PARSE):
        super().__init__(message)
        self.code = code


def _partition_arg(text):
    try:
        return parse_partition(text)
    except (CorekitError, ValueError) as exc:
        raise UsageError(f"invalid partition {text!r}: {exc}")


def _emit(args, plain, payload):
    print(json.dumps(payload) if args.json else plain)


def cmd_hooks(args):
    table = hook_table(_partition_arg(args.partition))
    _emit(args, table.render(), table.to_json())
    return EXIT_OK


def cmd_iscore(args):
    p = _partition_arg(args.partition)
    if args.t < 1:
        raise UsageError(f"--t must be >= 1, got {args.t}")
    if args.method == "sc":
        try:
            result = is_t_core_sc(sc_to_distinct_odd(p), args.t)
        except NotSelfConjugate as exc:
            raise UsageError(str(exc), EXIT_PRECONDITION)
    else:
        result = is_t_core_naive(p, args.t)
    payload = {"partition": format_partition(p), "t": args.t, "method": args.method, "t_core": result is True}
    if result is True:
        plain = "t-core"
    else:
        i, j = result.box
        # report below-diagonal boxes when the mirror image is the same box
        if i < j and is_self_conjugate(p):
            i, j = j, i
        plain = f"not t-core ({i},{j}) hook={result.hook}"
        payload["witness"] = {"box": [i, j], "hook": result.hook}
    _emit(args, plain, payload)
    return EXIT_OK


def cmd_count(args):
    if args.t < 1 or args.n_max < 1:
        raise UsageError("--t and --n-max must be >= 1")
    if args.t == 7:
        rows = sc7_table(args.n_max)
        header = ["n", "sc7_bruteforce", "sc7_bkm", "sc7_ono_raji"]
        mismatch = any(b != f or (na is not None and na != b) for _, b, f, na in rows)
    else:
        brute = sc_t_counts_bruteforce(args.n_max, args.t)
        formula = {2: sc2_count, 3: sc3_count}.get(args.t)
        if formula is None:
            header = ["n", "bruteforce"]
            rows = [(n, brute[n]) for n in range(1, args.n_max + 1)]
        else:
            header = ["n", "bruteforce", "formula"]
            rows = [(n, brute[n], formula(n)) for n in range(1, args.n_max + 1)]
        mismatch = formula is not None and any(r[1] != r[2] for r in rows)
    if args.json:
        print(json.dumps([dict(zip(header, row)) for row in rows]))
    else:
        print("\t".join(header))
        for row in rows:
            print("\t".join("NA" if v is None else str(v) for v in row))
    return EXIT_FAIL if args.compare and mismatch else EXIT_OK


def cmd_hurwitz(args):
    try:
        arg = Fraction(args.arg)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"invalid rational {args.arg!r}")
    try:
        value = hurwitz(arg)
    except NonNegativeArgument as exc:
        raise UsageError(str(exc), EXIT_DOMAIN)
    _emit(args, str(value), {"arg": str(arg), "value": str(value)})
    return EXIT_OK


def cmd_supernorm(args):
    if args.tcore_set is not None:
        if args.tcore_set < 1 or args.t < 2:
            raise UsageError("--tcore-set needs n >= 1 and --t >= 2", EXIT_DOMAIN)
        values = t_core_supernorm_set(args.tcore_set, args.t)
        _emit(args, "\n".join(str(v) for v in values), [str(v) for v in values])
    elif args.invert is not None:
        try:
            n = int(args.invert)
        except ValueError:
            raise UsageError(f"invalid integer {args.invert!r}")
        if n < 1:
            raise UsageError(f"supernorm values are positive, got {n}", EXIT_DOMAIN)
        p = supernorm_inverse(n)
        _emit(args, format_partition(p), {"value": str(n), "partition": list(p.parts)})
    elif args.partition is not None:
        p = _partition_arg(args.partition)
        image = supernorm(p)
        _emit(args, str(image.value), {
            "partition": list(p.parts),
            "value": str(image.value),
            "factor_indices": {str(i): m for i, m in image.factor_indices.items()},
        })
    else:
        raise UsageError("supernorm needs a partition, --invert N or --tcore-set N")
    return EXIT_OK


def cmd_verify(args):
    checks = run_suite(args.suite, args.n_max)
    for check in checks:
        print(check.line())
    return EXIT_OK if all(c.passed for c in checks) else EXIT_FAIL


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser():
    parser = _Parser(prog="corekit", description="Self-conjugate t-core partitions: hooks, counts, class numbers, supernorms.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("hooks", help="print the hook table of a partition")
    p.add_argument("partition")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_hooks)

    p = sub.add_parser("iscore", help="decide whether a partition is t-core")
    p.add_argument("partition")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--method", choices=("naive", "sc"), default="naive")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_iscore)

    p = sub.add_parser("count", help="tabulate sc_t(n), brute force against closed forms")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--compare", action="store_true", help="exit 1 on any mismatch")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("hurwitz", help="Hurwitz class number H(x) for negative rational x")
    p.add_argument("arg")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_hurwitz)

    p = sub.add_parser("supernorm", help="supernorm of a partition, or its inverse")
    p.add_argument("partition", nargs="?")
    p.add_argument("--invert", metavar="N")
    p.add_argument("--tcore-set", type=int, metavar="N", help="supernorms of distinct-odd partners of self-conjugate t-cores of N")
    p.add_argument("--t", type=int, default=7)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_supernorm)

    p = sub.add_parser("verify", help="run exhaustive cross-check suites")
    p.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    p.add_argument("--n-max", type=int, default=10)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    # let negative rationals such as -36/7 through as positionals
    if argv[:1] == ["hurwitz"]:
        negative = [a for a in argv[1:] if a[:1] == "-" and a[1:2].isdigit()]
        if negative:
            argv = [a for a in argv if a not in negative] + ["--", *negative]
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
