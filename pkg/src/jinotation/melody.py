"""Melodies: ordered notations, optionally with a comma factored out of all of them.

Melody files are plain UTF-8 text.  Notations are separated by whitespace;
lines starting with ``;`` are comments (``#`` is the sharp sign).  A final
token made only of comma groups, e.g. ``[23]``, is the common comma::

    ; Ex. 2 residue
    E4 F#4[17] Ab.4[19]
    [23]
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable

from .commas import CommaTable
from .monzo import Monzo, factorize
from .notation import Notation, divide, evaluate, multiply
from .text import CANONICAL, NotationStyle, format_comma, parse_comma_groups, parse_notation, print_notation

__all__ = [
    "Melody",
    "transpose_up",
    "transpose_down",
    "intervals",
    "factor_common_comma",
    "parse_melody",
    "read_melody",
    "format_melody",
]


@dataclass(frozen=True)
class Melody:
    notes: tuple[Notation, ...]
    common_comma: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "notes", tuple(self.notes))
        # reuse Notation's 5-rough check on the shared comma
        object.__setattr__(self, "common_comma", Notation("C", 0, 4, self.common_comma).comma)

    @classmethod
    def of(cls, notes: Iterable[Notation | str], common_comma=1) -> Melody:
        return cls(tuple(parse_notation(n) if isinstance(n, str) else n for n in notes),
                   Fraction(common_comma))

    def expand(self) -> Melody:
        """The same melody with the common comma pushed into every note."""
        if self.common_comma == 1:
            return self
        c = self.common_comma
        return Melody(tuple(Notation(n.label, n.sharps, n.octave, n.comma * c) for n in self.notes))

    def __len__(self) -> int:
        return len(self.notes)

    def __iter__(self):
        return iter(self.notes)


def transpose_up(m: Melody, by: Notation) -> Melody:
    return Melody(tuple(multiply(n, by) for n in m.notes), m.common_comma)


def transpose_down(m: Melody, by: Notation) -> Melody:
    return Melody(tuple(divide(n, by) for n in m.notes), m.common_comma)


def intervals(m: Melody, table: CommaTable | None = None) -> list[Monzo]:
    """Ratios between consecutive notes; empty for fewer than two notes."""
    vals = [evaluate(n, table) for n in m.notes]
    return [b / a for a, b in zip(vals, vals[1:])]


def _comma_exponents(c: Fraction) -> dict[int, int]:
    out = factorize(c.numerator)
    for p, e in factorize(c.denominator).items():
        out[p] = -e
    return out


def factor_common_comma(m: Melody) -> Melody:
    """Pull the largest shared comma out of every note.

    For each prime, the shared exponent is the one nearest zero when all notes
    carry that prime with the same sign, otherwise nothing is shared.
    """
    m = m.expand()
    if not m.notes:
        return m
    exps = [_comma_exponents(n.comma) for n in m.notes]
    common = Fraction(1)
    for p in set().union(*exps):
        es = [e.get(p, 0) for e in exps]
        if all(e > 0 for e in es):
            common *= Fraction(p) ** min(es)
        elif all(e < 0 for e in es):
            common *= Fraction(p) ** max(es)
    if common == 1:
        return m
    return Melody(tuple(Notation(n.label, n.sharps, n.octave, n.comma / common) for n in m.notes),
                  common)


def parse_melody(text: str) -> Melody:
    tokens = []
    for line in text.splitlines():
        if line.lstrip().startswith(";"):
            continue
        tokens.extend(line.split())
    common = Fraction(1)
    if tokens and tokens[-1].startswith("["):
        common = parse_comma_groups(tokens.pop())
    return Melody(tuple(parse_notation(t) for t in tokens), common)


def read_melody(path: str | Path) -> Melody:
    return parse_melody(Path(path).read_text(encoding="utf-8"))


def format_melody(m: Melody, style: NotationStyle = CANONICAL) -> str:
    text = " ".join(print_notation(n, style) for n in m.notes)
    if m.common_comma != 1:
        text += "\n" + format_comma(m.common_comma)
    return text + "\n"
