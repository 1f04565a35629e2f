"""ASCII notation syntax.

Frequency notations::

    Bb.3[13]          B flat, one [1/5] mark, octave 3, comma [13]
    A###(-5)[77/13]   negative octaves may be parenthesised
    Fbb3[7][1/25]     adjacent comma groups multiply
    E[5]6             comma before octave is accepted too

After the label come sharps ``#`` or flats ``b`` (never both), then ``'``
marks (comma [5] each) or ``.`` marks (comma [1/5] each), never both.  The
syntax is case sensitive and whitespace is not allowed inside a notation.

Pitch classes drop the octave and additionally accept ``~p`` for ``[p]`` and
``_p`` for ``[1/p]``, e.g. ``Bb~7`` or ``E_5``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .commas import is_five_rough
from .notation import LABELS, Notation, PitchClass

__all__ = [
    "ParseError",
    "NotationStyle",
    "parse_notation",
    "parse_pitch_class",
    "parse_comma_groups",
    "print_notation",
    "print_pitch_class",
    "format_comma",
]


class ParseError(ValueError):
    def __init__(self, reason: str, text: str, position: int):
        self.reason = reason
        self.text = text
        self.position = position
        super().__init__(f"{reason} at position {position} in {text!r}")


@dataclass(frozen=True)
class NotationStyle:
    """How :func:`print_notation` lays out a notation.

    ``form`` is ``"octave-comma"`` (``Gb1[161/65]``, the default) or
    ``"comma-octave"`` (``Gb[161/65]1``).  With ``use_shorthand_5`` the power
    of 5 in the comma is written as ``'`` or ``.`` marks.
    """

    form: str = "octave-comma"
    use_shorthand_5: bool = False

    def __post_init__(self):
        if self.form not in ("octave-comma", "comma-octave"):
            raise ValueError(f"unknown notation form {self.form!r}")


CANONICAL = NotationStyle()


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def fail(self, reason: str, pos: int | None = None):
        raise ParseError(reason, self.text, self.pos if pos is None else pos)

    def run(self, ch: str) -> int:
        n = 0
        while self.peek() == ch:
            self.pos += 1
            n += 1
        return n

    def integer(self, what: str) -> int:
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail(f"expected {what}")
        return int(self.text[start:self.pos])

    def head(self) -> tuple[str, int, Fraction]:
        """Label, accidentals and shorthand marks."""
        label = self.peek()
        if not label or label not in LABELS:
            self.fail("expected note label A-G")
        self.pos += 1
        sharps = self.run("#")
        flats = self.run("b")
        if sharps and flats:
            self.fail("sharps and flats mixed", self.pos - flats)
        if flats and self.peek() == "#":
            self.fail("sharps and flats mixed")
        up = self.run("'")
        down = self.run(".")
        if up and down:
            self.fail("' and . marks mixed", self.pos - down)
        if down and self.peek() == "'":
            self.fail("' and . marks mixed")
        return label, sharps - flats, Fraction(5) ** (up - down)

    def group(self) -> Fraction:
        start = self.pos
        self.pos += 1  # '['
        num = self.integer("comma numerator")
        den = 1
        if self.peek() == "/":
            self.pos += 1
            den = self.integer("comma denominator")
        if self.peek() != "]":
            self.fail("expected ']'")
        self.pos += 1
        if num == 0 or den == 0:
            self.fail("comma must be nonzero", start)
        if not (is_five_rough(num) and is_five_rough(den)):
            self.fail(f"comma [{num}/{den}] is not 5-rough", start)
        return Fraction(num, den)

    def octave(self) -> int:
        if self.peek() == "(":
            self.pos += 1
            z = self.signed()
            if self.peek() != ")":
                self.fail("expected ')'")
            self.pos += 1
            return z
        return self.signed()

    def signed(self) -> int:
        sign = 1
        if self.peek() and self.peek() in "+-":
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        return sign * self.integer("octave number")


def parse_comma_groups(text: str) -> Fraction:
    """Parse one or more adjacent ``[x/y]`` groups into a reduced comma label."""
    sc = _Scanner(text)
    if sc.peek() != "[":
        sc.fail("expected '['")
    comma = Fraction(1)
    while sc.peek() == "[":
        comma *= sc.group()
    if sc.peek():
        sc.fail("unexpected character")
    return comma


def parse_notation(text: str) -> Notation:
    sc = _Scanner(text)
    label, sharps, comma = sc.head()
    octave = None
    while sc.peek():
        ch = sc.peek()
        if ch == "[":
            comma *= sc.group()
        elif ch.isdigit() or ch in "+-(":
            if octave is not None:
                sc.fail("second octave number")
            octave = sc.octave()
        else:
            sc.fail("unexpected character")
    if octave is None:
        sc.fail("missing octave number")
    return Notation(label, sharps, octave, comma)


def parse_pitch_class(text: str) -> PitchClass:
    sc = _Scanner(text)
    label, sharps, comma = sc.head()
    while sc.peek():
        ch = sc.peek()
        if ch == "[":
            comma *= sc.group()
        elif ch in "~_":
            start = sc.pos
            sc.pos += 1
            p = sc.integer("comma after " + ch)
            if p == 0 or not is_five_rough(p):
                sc.fail(f"comma {p} is not 5-rough", start)
            comma *= p if ch == "~" else Fraction(1, p)
        elif ch.isdigit() or ch in "+-(":
            sc.fail("pitch class has no octave")
        else:
            sc.fail("unexpected character")
    return PitchClass(label, sharps, comma)


def format_comma(comma: Fraction) -> str:
    if comma == 1:
        return ""
    if comma.denominator == 1:
        return f"[{comma.numerator}]"
    return f"[{comma.numerator}/{comma.denominator}]"


def _five_exponent(comma: Fraction) -> int:
    e = 0
    n, d = comma.numerator, comma.denominator
    while n % 5 == 0:
        n //= 5
        e += 1
    while d % 5 == 0:
        d //= 5
        e -= 1
    return e


def _head(label: str, sharps: int, comma: Fraction, style: NotationStyle) -> tuple[str, Fraction]:
    acc = "#" * sharps if sharps > 0 else "b" * -sharps
    marks = ""
    if style.use_shorthand_5:
        e5 = _five_exponent(comma)
        marks = "'" * e5 if e5 > 0 else "." * -e5
        comma = comma / Fraction(5) ** e5
    return label + acc + marks, comma


def print_notation(n: Notation, style: NotationStyle = CANONICAL) -> str:
    head, comma = _head(n.label, n.sharps, n.comma, style)
    octave = str(n.octave) if n.octave >= 0 else f"({n.octave})"
    if style.form == "octave-comma":
        return head + octave + format_comma(comma)
    return head + format_comma(comma) + octave


def print_pitch_class(pc: PitchClass, style: NotationStyle = CANONICAL) -> str:
    head, comma = _head(pc.label, pc.sharps, pc.comma, style)
    return head + format_comma(comma)
