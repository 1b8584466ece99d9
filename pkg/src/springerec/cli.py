"""Command-line front end.

Subcommands: ec, mult, restrict, betti, tworow, exc, verify.  Text output
is terse; --format json wraps results as {"command", "input", "result"}.
Exit codes: 0 success, 1 usage error, 2 graded recursion out of scope,
3 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import betti, exctables, restrict, tworow, verification
from .errors import (
    InvalidElement,
    InvalidLabel,
    NonIntegralMultiplicity,
    OutOfScope,
    RankTooSmall,
    SpringerError,
    UnknownOrbit,
)
from .euler import euler_char, multiplicities, trace_expansion
from .partitions import OrbitLabel, format_partition, parse_partition

USAGE_ERROR, OUT_OF_SCOPE, INTERNAL_ERROR = 1, 2, 3


def _label_args(sub):
    sub.add_argument("--type", required=True, choices=("A", "B", "C", "D"), dest="group")
    sub.add_argument("--partition", required=True)
    sub.add_argument("--sign", choices=("+", "-"), default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="springerec",
        description="Euler characteristics and graded character tables of Springer fibers",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    subs = parser.add_subparsers(dest="command", required=True, parser_class=lambda **kw: argparse.ArgumentParser(parents=[fmt], **kw))

    ec = subs.add_parser("ec", help="Euler characteristic of one orbit")
    _label_args(ec)
    ec.add_argument("--trace", action="store_true", help="print the expansion level by level")

    mult = subs.add_parser("mult", help="component-group character multiplicities")
    _label_args(mult)
    mult.add_argument("--over", choices=("A", "Atilde"), default="A")

    res = subs.add_parser("restrict", help="symbolic one-step restriction")
    _label_args(res)

    bet = subs.add_parser("betti", help="graded character table")
    _label_args(bet)

    two = subs.add_parser("tworow", help="closed-form two-row table")
    two.add_argument("--type", required=True, choices=("A", "B", "C", "D"), dest="group")
    two.add_argument("--i", required=True, type=int)
    two.add_argument("--j", required=True, type=int)

    exc = subs.add_parser("exc", help="exceptional-type multiplicities")
    exc.add_argument("--group", required=True, choices=exctables.EXC_GROUPS)
    exc.add_argument("--orbit", required=True)

    ver = subs.add_parser("verify", help="run a verification suite")
    ver.add_argument(
        "--suite", required=True, choices=("recursion", "graded", "tworow", "symfunc", "exc")
    )
    ver.add_argument("--max-n", type=int, default=None)
    return parser


def _parse_label(args) -> OrbitLabel:
    return OrbitLabel(args.group, parse_partition(args.partition), args.sign)


def _input_dict(args) -> dict:
    out = {"type": args.group, "partition": list(parse_partition(args.partition))}
    if getattr(args, "sign", None):
        out["sign"] = args.sign
    return out


def _trace_lines(group, levels) -> list:
    lines = []
    for level in levels[1:]:
        terms = []
        for parts in sorted(level, reverse=True):
            c = level[parts]
            coeff = "" if c == 1 else "%d*" % c
            terms.append("%sEC(%s)" % (coeff, format_partition(parts)))
        lines.append(" + ".join(terms))
    return lines


def _cmd_ec(args, emit):
    label = _parse_label(args)
    value = euler_char(label)
    if args.trace:
        levels = trace_expansion(label)
        emit(
            text="\n".join(
                ["EC(%s)" % format_partition(label.parts)]
                + [" = " + line for line in _trace_lines(label.group, levels)]
                + [" = %d" % value]
            ),
            result={
                "euler_characteristic": value,
                "trace": [
                    {format_partition(p): c for p, c in sorted(level.items(), reverse=True)}
                    for level in levels
                ],
            },
            inp=_input_dict(args),
        )
    else:
        emit(text=str(value), result={"euler_characteristic": value}, inp=_input_dict(args))
    return 0


def _cmd_mult(args, emit):
    label = _parse_label(args)
    table = multiplicities(label.group, label.parts, over=args.over)
    text = "\n".join("%s\t%d" % (name, m) for name, m in table.items())
    emit(
        text=text,
        result={"over": args.over, "multiplicities": table},
        inp={**_input_dict(args), "over": args.over},
    )
    return 0


def _cmd_restrict(args, emit):
    label = _parse_label(args)
    fsum = restrict.expand(label)
    emit(text=restrict.render_text(fsum), result=restrict.to_json(fsum), inp=_input_dict(args))
    return 0


def _cmd_betti(args, emit):
    label = _parse_label(args)
    table = betti.graded_table(label)
    lines = [
        "%d\t%s" % (deg, ", ".join("%s=%d" % (n, m) for n, m in sorted(row.items())))
        for deg, row in sorted(table.entries.items())
    ]
    emit(text="\n".join(lines), result=table.to_json(), inp=_input_dict(args))
    return 0


def _cmd_tworow(args, emit):
    table = tworow.closed_table(args.group, args.i, args.j)
    slots = tworow.character_slots(args.group, args.i, args.j)
    header = "degree\t" + "\t".join(slot for slot, _ in slots)
    lines = [header]
    for deg in sorted(table):
        lines.append("%d\t%s" % (deg, "\t".join(str(table[deg].get(slot, 0)) for slot, _ in slots)))
    emit(
        text="\n".join(lines),
        result={
            "slots": [{"slot": s, "character": c} for s, c in slots],
            "degrees": {str(d): row for d, row in sorted(table.items())},
        },
        inp={"type": args.group, "i": args.i, "j": args.j},
    )
    return 0


def _cmd_exc(args, emit):
    rows = exctables.query(args.group, args.orbit)
    a_group = exctables.a_group_of(args.group, args.orbit)
    euler = exctables.orbit_euler(args.group, args.orbit)
    if a_group == ".":
        text = str(euler)
    else:
        text = "\n".join("%s\t%d" % (phi, m) for phi, m in rows) + "\nEC = %d" % euler
    emit(
        text=text,
        result={"a_group": a_group, "rows": [{"phi": p, "mult": m} for p, m in rows], "euler": euler},
        inp={"group": args.group, "orbit": args.orbit},
    )
    return 0


def _cmd_verify(args, emit):
    report = verification.run_suite(args.suite, args.max_n)
    ok = not report["failures"]
    lines = ["suite %s: checked %d" % (report["suite"], report["checked"])]
    lines += ["FAIL %s" % f for f in report["failures"][:25]]
    lines.append("PASS" if ok else "FAIL (%d failures)" % len(report["failures"]))
    emit(
        text="\n".join(lines),
        result=report,
        inp={"suite": args.suite, "max_n": args.max_n},
    )
    return 0 if ok else 1


_COMMANDS = {
    "ec": _cmd_ec,
    "mult": _cmd_mult,
    "restrict": _cmd_restrict,
    "betti": _cmd_betti,
    "tworow": _cmd_tworow,
    "exc": _cmd_exc,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else USAGE_ERROR

    payload = {}

    def emit(text, result, inp):
        payload["command"] = args.command
        payload["input"] = inp
        payload["result"] = result
        payload["text"] = text

    try:
        code = _COMMANDS[args.command](args, emit)
    except OutOfScope as exc:
        print("out of scope: %s" % exc, file=sys.stderr)
        return OUT_OF_SCOPE
    except NonIntegralMultiplicity as exc:
        print("internal consistency failure: %s" % exc, file=sys.stderr)
        return INTERNAL_ERROR
    except (InvalidLabel, InvalidElement, UnknownOrbit, RankTooSmall) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return USAGE_ERROR
    except SpringerError as exc:
        print("internal error: %s" % exc, file=sys.stderr)
        return INTERNAL_ERROR

    if args.format == "json":
        out = {"command": payload["command"], "input": payload["input"], "result": payload["result"]}
        print(json.dumps(out, indent=2, sort_keys=True))
    else:
        print(payload["text"])
    return code


if __name__ == "__main__":
    raise SystemExit(main())
