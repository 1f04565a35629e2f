"""Command line front end.

    jinotation inv "E6[5]"
    jinotation mul C4 G4
    jinotation --shorthand5 transpose --by "F#2[23]" melody.txt
    jinotation table mul --order pitch
    jinotation --json comma 29

Errors in notations, fractions or files exit with status 2.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction

from .commas import analyze_three_candidates, comma_value, default_table
from .melody import factor_common_comma, intervals, read_melody, transpose_down, transpose_up
from .monzo import DomainError, Monzo, cents
from .notation import FIFTHS, LABELS, Notation, divide, evaluate, inv_table, invert, mul_table, multiply, notate
from .text import CANONICAL, NotationStyle, ParseError, format_comma, parse_notation, print_notation

__all__ = ["main", "round_cents", "output_record"]


def round_cents(x: float) -> Decimal:
    """Cents to two decimals, halves rounded away from zero."""
    d = Decimal(x).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP)
    return d if d else Decimal("0.00")


def output_record(notation: str, value: Monzo) -> dict:
    f = value.fraction
    return {
        "notation": notation,
        "fraction": f"{f.numerator}/{f.denominator}",
        "monzo": [list(pe) for pe in value.items()],
        "cents": float(round_cents(cents(value))),
    }


def _note_record(n, style) -> dict:
    return output_record(print_notation(n, style), evaluate(n))


def _render(records: list[dict], args) -> str:
    if args.cents_only:
        return "".join(f"{round_cents(cents(_monzo(r)))}\n" for r in records)
    cols = [(r["notation"], r["fraction"], f"{round_cents(cents(_monzo(r)))}¢") for r in records]
    w0 = max(len(c[0]) for c in cols)
    w1 = max(len(c[1]) for c in cols)
    w2 = max(len(c[2]) for c in cols)
    return "".join(f"{a.ljust(w0)}  {b.ljust(w1)}  {c.rjust(w2)}\n" for a, b, c in cols)


def _monzo(record: dict) -> Monzo:
    return Monzo([tuple(pe) for pe in record["monzo"]])


def _csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def _fraction_arg(text: str) -> Fraction:
    try:
        f = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"bad fraction {text!r}") from None
    if f <= 0:
        raise DomainError(f"fraction {text!r} must be positive")
    return f


def _dump(doc) -> str:
    # arrays get one element per line; everything else on a single line
    if isinstance(doc, list):
        if not doc:
            return "[]\n"
        return "[\n" + ",\n".join("  " + json.dumps(d) for d in doc) + "\n]\n"
    return json.dumps(doc) + "\n"


def _emit_records(records, args) -> str:
    if args.json:
        return _dump(records[0] if len(records) == 1 and not args.many else records)
    return _render(records, args)


def _run(args) -> str:
    style = NotationStyle(use_shorthand_5=args.shorthand5) if args.shorthand5 else CANONICAL
    cmd = args.command
    args.many = False

    if cmd == "eval":
        return _emit_records([_note_record(parse_notation(args.notation), style)], args)
    if cmd == "notate":
        v = Monzo.from_fraction(_fraction_arg(args.fraction))
        return _emit_records([output_record(print_notation(notate(v), style), v)], args)
    if cmd in ("mul", "div"):
        a, b = parse_notation(args.a), parse_notation(args.b)
        n = multiply(a, b) if cmd == "mul" else divide(a, b)
        return _emit_records([_note_record(n, style)], args)
    if cmd == "inv":
        return _emit_records([_note_record(invert(parse_notation(args.notation)), style)], args)

    if cmd == "transpose":
        m = read_melody(args.file)
        by = parse_notation(args.by)
        out = (transpose_down if args.down else transpose_up)(m, by).expand()
        args.many = True
        return _emit_records([_note_record(n, style) for n in out.notes], args)
    if cmd == "intervals":
        args.many = True
        recs = [output_record(print_notation(notate(v), style), v) for v in intervals(read_melody(args.file))]
        if not recs:
            return "[]\n" if args.json else ""
        return _emit_records(recs, args)
    if cmd == "factor":
        f = factor_common_comma(read_melody(args.file))
        args.many = True
        recs = [_note_record(n, style) for n in f.notes]
        if args.json:
            c = f.common_comma
            return _dump({"common_comma": f"{c.numerator}/{c.denominator}", "notes": recs})
        text = _render(recs, args) if recs else ""
        if args.cents_only:
            return text
        return text + f"common comma {format_comma(f.common_comma) or '[1/1]'}\n"

    if cmd == "table":
        if args.which == "mul":
            labels = FIFTHS if args.order == "fifths" else LABELS
            rows = [{
                "row": print_notation(Notation(labels[r]), style),
                "column": print_notation(Notation(labels[c]), style),
                "product": print_notation(n, style),
                "fraction": f"{frac.numerator}/{frac.denominator}",
            } for r, row in enumerate(mul_table(args.order)) for c, (n, frac) in enumerate(row)]
        else:
            rows = [{
                "note": print_notation(n, style),
                "inverse": print_notation(i, style),
                "fraction": f"{f.numerator}/{f.denominator}",
            } for n, i, f in inv_table()]
        return _dump(rows) if args.json else _csv(rows)

    if cmd == "comma":
        table = default_table()
        recs = [output_record(f"[{p}]", table.prime_comma(p)) for p in args.primes]
        args.many = len(recs) > 1
        return _emit_records(recs, args)
    if cmd == "comma-label":
        c = _fraction_arg(args.label.strip("[]"))
        return _emit_records([output_record(format_comma(c) or "[1/1]", comma_value(c))], args)

    if cmd == "analyze3":
        rows = [{
            "fraction": f"{r.fraction.numerator}/{r.fraction.denominator}",
            "decimal": r.decimal,
            "CY": r.cy,
            "LCY": round(r.lcy, 3),
            "AO": round(r.ao, 3),
            "CM": round(r.cm, 3),
            "minimal": r.minimal,
        } for r in analyze_three_candidates(args.min, args.max)]
        return _dump(rows) if args.json else _csv(rows)

    raise AssertionError(cmd)  # pragma: no cover


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit one JSON document")
    common.add_argument("--shorthand5", action="store_true", default=argparse.SUPPRESS,
                        help="write the power of 5 in commas as ' or . marks")
    common.add_argument("--cents-only", action="store_true", default=argparse.SUPPRESS,
                        help="print only cents values")

    p = argparse.ArgumentParser(prog="jinotation", parents=[common],
                                description="Exact arithmetic on L[x/y]_z just intonation notations.")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, help):
        return sub.add_parser(name, parents=[common], help=help)

    add("eval", "value of a notation").add_argument("notation")
    add("notate", "notation of a fraction x/y").add_argument("fraction")
    for name, help in (("mul", "multiply two notations"), ("div", "divide A by B")):
        sp = add(name, help)
        sp.add_argument("a")
        sp.add_argument("b")
    add("inv", "invert a notation").add_argument("notation")

    sp = add("transpose", "transpose every note of a melody file")
    sp.add_argument("--by", required=True, metavar="NOTATION")
    sp.add_argument("--down", action="store_true")
    sp.add_argument("file")
    add("intervals", "ratios between consecutive notes").add_argument("file")
    add("factor", "factor a common comma out of a melody").add_argument("file")

    sp = add("table", "scale-note multiplication or inversion table (CSV)")
    sp.add_argument("which", choices=["mul", "inv"])
    sp.add_argument("--order", choices=["fifths", "pitch"], default="fifths")

    add("comma", "prime comma of one or more primes").add_argument("primes", type=int, nargs="+", metavar="P")
    add("comma-label", "value of a rational comma x/y").add_argument("label")

    sp = add("analyze3", "comma measures of the candidates 2^b*3 (CSV)")
    sp.add_argument("--min", type=int, default=-4)
    sp.add_argument("--max", type=int, default=3)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = _parser()
    args = parser.parse_args(argv)
    for flag in ("json", "shorthand5", "cents_only"):
        if not hasattr(args, flag):
            setattr(args, flag, False)
    try:
        out = _run(args)
    except (ParseError, DomainError) as e:
        print(f"{parser.prog}: error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"{parser.prog}: error: {e}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
