"""Command-line frontend: compute graded characters and run verification.

    qchar char   --rank 2 --level 1 --n 1,1 [--format json|csv|text] [--out F]
    qchar verify --suite all [--rank R] [--bound B] [--order N] [--out F]

The occupation flag is level-major: ``--n 1,0;0,1`` means level 1 = (1, 0)
and level 2 = (0, 1).  Output is a pure function of the flags (repeated runs
are byte-identical).  Exit codes: 0 success, 1 verification failure, 2 usage
error, 3 internal identity violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from .characters import NVector, graded_character
from .rings import (
    ExponentNotDivisible,
    NcNotDivisible,
    NonzeroRemainder,
    NotDivisible,
    NotSymmetric,
)
from .verify import SUITE_NAMES, run_suite

INTERNAL_ERRORS = (
    NotDivisible,
    NcNotDivisible,
    ExponentNotDivisible,
    NonzeroRemainder,
    NotSymmetric,
    ArithmeticError,
)


def _parse_weight_form(text: str, rank: int) -> list:
    """Fundamental-weight shorthand for level 1: 'w1+w2', '2*w2', 'ω1+ω2'."""
    ell = [0] * rank
    for term in text.replace("ω", "w").split("+"):
        term = term.strip()
        if not term:
            continue
        mult = 1
        if "*" in term:
            head, term = term.split("*", 1)
            mult = int(head.strip())
        if not term.startswith("w"):
            raise argparse.ArgumentTypeError("bad weight term %r" % term)
        idx = int(term[1:])
        if not 1 <= idx <= rank:
            raise argparse.ArgumentTypeError("weight index %d out of range" % idx)
        ell[idx - 1] += mult
    return [ell]


def parse_n_flag(text: str, rank: int, level: int) -> NVector:
    if "w" in text or "ω" in text:
        if level != 1:
            raise argparse.ArgumentTypeError("weight form is level-1 shorthand")
        levels = _parse_weight_form(text, rank)
    else:
        levels = []
        for chunk in text.split(";"):
            entries = [s.strip() for s in chunk.split(",")]
            try:
                levels.append([int(s) for s in entries])
            except ValueError:
                raise argparse.ArgumentTypeError("occupation entries must be integers")
    try:
        return NVector.from_levels(rank, level, levels)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _partition_key(lam, rank):
    full = tuple(lam) + (0,) * (rank + 1 - len(lam))
    return "(%s)" % ",".join(str(x) for x in full)


def character_payload(n: NVector) -> dict:
    """JSON-ready data: Schur coefficients as [q-exponent, integer] pairs."""
    gc = graded_character(n)
    char = {}
    for lam in sorted(gc.expansion, reverse=True):
        coeff = gc.expansion[lam]
        pairs = [[e, c] for e, c in sorted(coeff.data.items(), reverse=True)]
        char[_partition_key(lam, n.rank)] = pairs
    return {
        "schema": 1,
        "rank": n.rank,
        "level": n.level,
        "n": [list(row) for row in n.rows],
        "character": char,
    }


def render_character(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, separators=(",", ":")) + "\n"
    if fmt == "csv":
        lines = ["partition,q_exponent,coefficient"]
        for key, pairs in payload["character"].items():
            for e, c in pairs:
                lines.append('"%s",%d,%d' % (key, e, c))
        return "\n".join(lines) + "\n"
    if fmt == "text":
        lines = [
            "rank %d level %d n=%s"
            % (
                payload["rank"],
                payload["level"],
                ";".join(",".join(str(x) for x in row) for row in payload["n"]),
            )
        ]
        for key, pairs in payload["character"].items():
            coeff = " + ".join(
                ("q^%d" % e if c == 1 and e else str(c) if not e else "%d*q^%d" % (c, e))
                for e, c in pairs
            )
            lines.append("  %s : %s" % (key, coeff or "0"))
        return "\n".join(lines) + "\n"
    raise ValueError("unknown format %r" % fmt)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qchar",
        description="Exact graded characters of KR fusion products and the "
        "identity verification suite.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("char", help="compute one graded character")
    pc.add_argument("--rank", type=int, required=True)
    pc.add_argument("--level", type=int, default=1)
    pc.add_argument("--n", required=True, help="level-major occupations, e.g. 1,0;0,1")
    pc.add_argument("--format", choices=("json", "csv", "text"), default="json")
    pc.add_argument("--out", default=None, help="output file (default stdout)")

    pv = sub.add_parser("verify", help="run a verification suite")
    pv.add_argument("--suite", choices=SUITE_NAMES, default="all")
    pv.add_argument("--rank", type=int, default=None)
    pv.add_argument("--bound", type=int, default=None)
    pv.add_argument("--order", type=int, default=None)
    pv.add_argument("--out", default=None, help="output file (default stdout)")
    return parser


def _emit(text: str, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "char":
        try:
            n = parse_n_flag(args.n, args.rank, args.level)
        except argparse.ArgumentTypeError as exc:
            parser.error(str(exc))  # exits with code 2
        try:
            payload = character_payload(n)
        except INTERNAL_ERRORS as exc:
            sys.stderr.write("internal identity violation: %s\n" % exc)
            return 3
        _emit(render_character(payload, args.format), args.out)
        return 0

    try:
        reports = run_suite(args.suite, rank=args.rank, bound=args.bound, order=args.order)
    except INTERNAL_ERRORS as exc:
        sys.stderr.write("internal identity violation: %s\n" % exc)
        return 3
    payload = {
        "schema": 1,
        "suite": args.suite,
        "passed": all(r.passed for r in reports),
        "reports": [r.to_json() for r in reports],
    }
    _emit(json.dumps(payload, separators=(",", ":")) + "\n", args.out)
    return 0 if payload["passed"] else 1


if __name__ == "__main__":
    sys.exit(main())
