"""Command-line front end.

Subcommands: construct, verify, triples, table, conjecture, lucas.
Exit codes: 0 success/pass, 1 verification failure, 2 not constructible,
3 argument errors.  Pass/fail is signalled only through the exit code;
--json emits machine-readable output.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import constructor as C
from . import covering, lucas, verifier
from .recurrence import RecurrenceParams, SeedPair

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_NOT_CONSTRUCTIBLE = 2
EXIT_USAGE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _emit(payload: dict, args) -> None:
    text = json.dumps(payload, indent=2) if args.json else _render(payload)
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _render(payload: dict, indent: int = 0) -> str:
    lines = []
    pad = "  " * indent
    for key, value in payload.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(_render(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}: [{len(value)} entries]")
        else:
            lines.append(f"{pad}{key}: {value}")
    return "\n".join(lines)


def _int_digits(n: int) -> dict:
    return {"value": str(n), "digits": len(str(abs(n)))}


def cmd_construct(args) -> int:
    try:
        result = C.construct(args.a, args.b)
    except C.NotConstructible as exc:
        _emit({"verdict": "not_constructible", "reason": exc.reason}, args)
        return EXIT_NOT_CONSTRUCTIBLE
    report = verifier.verify_construction(result, n_terms=args.terms)
    payload = {
        "strategy": result.strategy,
        "x0": _int_digits(result.seed.x0),
        "x1": _int_digits(result.seed.x1),
        "report": report.to_dict(),
    }
    _emit(payload, args)
    return EXIT_PASS if report.verdict else EXIT_FAIL


def cmd_verify(args) -> int:
    params = RecurrenceParams(args.a, args.b)
    seed = SeedPair(args.x0, args.x1)
    report = verifier.verify(params, seed, args.terms)
    _emit(report.to_dict(), args)
    return EXIT_PASS if report.verdict else EXIT_FAIL


def cmd_triples(args) -> int:
    params = RecurrenceParams(args.a, args.b)
    try:
        tset = covering.search_triples(params)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if tset is None:
        _emit({"found": False}, args)
        return EXIT_FAIL
    payload = {
        "found": True,
        "triples": [{"p": t.p, "m": t.m, "r": t.r} for t in tset.triples],
    }
    _emit(payload, args)
    return EXIT_PASS


def cmd_table(args) -> int:
    rows = verifier.audit_table1(n_terms=args.terms)
    payload = {"rows": [r.to_dict() for r in rows]}
    _emit(payload, args)
    ok = all(r.triples_valid and r.paper_report.verdict for r in rows)
    anomalous = [r for r in rows if r.anomalies]
    if anomalous and not args.json:
        for r in anomalous:
            print(f"note: ({r.a}, {r.b}): {'; '.join(r.anomalies)}", file=sys.stderr)
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_conjecture(args) -> int:
    a_values = [a for a in range(-args.a_max, args.a_max + 1) if abs(a) >= 3]
    violations = lucas.conjecture_scan(a_values, args.p_max)
    payload = {
        "a_max": args.a_max,
        "p_max": args.p_max,
        "violations": [
            {"a": v.a, "p": v.p, "q": v.q, "gcd": v.gcd} for v in violations
        ],
    }
    _emit(payload, args)
    return EXIT_PASS


def cmd_lucas(args) -> int:
    ctx = lucas.LucasContext(RecurrenceParams(args.a, args.b))
    value = ctx.u(args.n)
    _emit({"n": args.n, "u": _int_digits(value)}, args)
    return EXIT_PASS


def build_parser() -> _Parser:
    parser = _Parser(prog="compseq", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, seeds=False):
        p.add_argument("-a", type=int, required=True)
        p.add_argument("-b", type=int, required=True)
        if seeds:
            p.add_argument("--x0", type=int, required=True)
            p.add_argument("--x1", type=int, required=True)
        p.add_argument("--terms", type=int, default=200)
        p.add_argument("--json", action="store_true")
        p.add_argument("--seed", type=int, default=0, help="RNG seed for MR rounds")
        p.add_argument("-o", "--output", default=None)

    p = sub.add_parser("construct", help="construct and verify a composite-only seed pair")
    common(p)
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("verify", help="verify user-supplied seeds")
    common(p, seeds=True)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("triples", help="search covering triples for (a, b)")
    common(p)
    p.set_defaults(fn=cmd_triples)

    p = sub.add_parser("table", help="audit the embedded small-coefficient table")
    p.add_argument("--terms", type=int, default=100)
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(fn=cmd_table)

    p = sub.add_parser("conjecture", help="scan gcd(u_p, u_q) at prime indices, b = -1")
    p.add_argument("--a-max", type=int, default=10)
    p.add_argument("--p-max", type=int, default=31)
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(fn=cmd_conjecture)

    p = sub.add_parser("lucas", help="print a Lucas-sequence term")
    p.add_argument("-a", type=int, required=True)
    p.add_argument("-b", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(fn=cmd_lucas)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
