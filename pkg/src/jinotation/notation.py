"""Frequency notations ``L[x/y]_z`` and their group operations.

A notation factors into four multiplicative parts::

    2**(z - 4)  *  N4(L)  *  (2187/2048)**k  *  [x/y]
    octave         scale    sharps/flats        rational comma
                   note

so ``C4`` is 1/1.  Multiplication and inversion work on those parts: octaves
and sharp counts add, comma labels multiply as fractions, and the product of
two scale notes is decomposed back into a note plus a sharp/octave carry.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .commas import CommaTable, comma_value, is_five_rough
from .monzo import DomainError, Monzo, cents, pythagorean, split_rough

__all__ = [
    "LABELS",
    "FIFTHS",
    "Notation",
    "PitchClass",
    "IDENTITY",
    "scale_note",
    "evaluate",
    "pythagorean_decompose",
    "notate",
    "multiply",
    "invert",
    "divide",
    "mul_table",
    "inv_table",
]

LABELS = "CDEFGAB"
# labels along the chain of fifths; F sits at index -1
FIFTHS = "FCGDAEB"

# power of 2 in the octave-4 scale note with 3-exponent m
_TWO_EXP = {-1: 2, 0: 0, 1: -1, 2: -3, 3: -4, 4: -6, 5: -7}
_LABEL_SET = frozenset(LABELS)


def _fifth(label: str) -> int:
    return FIFTHS.index(label) - 1


def _check_comma(comma) -> Fraction:
    comma = Fraction(comma)
    if comma <= 0:
        raise DomainError(f"comma {comma} must be positive")
    if not (is_five_rough(comma.numerator) and is_five_rough(comma.denominator)):
        raise DomainError(f"comma [{comma}] is not 5-rough")
    return comma


@dataclass(frozen=True)
class PitchClass:
    label: str
    sharps: int = 0
    comma: Fraction = Fraction(1)

    def __post_init__(self):
        if self.label not in _LABEL_SET:
            raise DomainError(f"bad note label {self.label!r}")
        object.__setattr__(self, "comma", _check_comma(self.comma))

    def at(self, octave: int) -> Notation:
        return Notation(self.label, self.sharps, octave, self.comma)

    def __str__(self) -> str:
        from .text import print_pitch_class
        return print_pitch_class(self)


@dataclass(frozen=True)
class Notation:
    """A frequency notation: note label, sharp count, octave, comma label.

    ``sharps`` is negative for flats.  ``comma`` is the reduced 5-rough label
    fraction ``x/y`` (not its value).

    >>> Notation("E", 0, 4, Fraction(5)).fraction
    Fraction(5, 4)
    """

    label: str
    sharps: int = 0
    octave: int = 4
    comma: Fraction = Fraction(1)

    def __post_init__(self):
        if self.label not in _LABEL_SET:
            raise DomainError(f"bad note label {self.label!r}")
        if not (isinstance(self.sharps, int) and isinstance(self.octave, int)):
            raise TypeError("sharps and octave must be integers")
        object.__setattr__(self, "comma", _check_comma(self.comma))

    @property
    def pitch_class(self) -> PitchClass:
        return PitchClass(self.label, self.sharps, self.comma)

    def value(self, table: CommaTable | None = None) -> Monzo:
        return evaluate(self, table)

    @property
    def fraction(self) -> Fraction:
        return evaluate(self).fraction

    @property
    def cents(self) -> float:
        return cents(evaluate(self))

    def __mul__(self, other: Notation) -> Notation:
        if not isinstance(other, Notation):
            return NotImplemented
        return multiply(self, other)

    def __truediv__(self, other: Notation) -> Notation:
        if not isinstance(other, Notation):
            return NotImplemented
        return divide(self, other)

    def inverse(self) -> Notation:
        return invert(self)

    def __str__(self) -> str:
        from .text import print_notation
        return print_notation(self)


IDENTITY = Notation("C")


def scale_note(label: str) -> Monzo:
    """Pythagorean scale note of ``label`` in octave 4 (C4 = 1/1)."""
    m = _fifth(label)
    return pythagorean(_TWO_EXP[m], m)


def evaluate(n: Notation, table: CommaTable | None = None) -> Monzo:
    """Exact value of a notation."""
    m = _fifth(n.label)
    b = m + 7 * n.sharps
    a = (n.octave - 4) + _TWO_EXP[m] - 11 * n.sharps
    return pythagorean(a, b) * comma_value(n.comma, table=table)


def pythagorean_decompose(m3: Monzo) -> tuple[str, int, int]:
    """Spell a 3-limit ratio as ``(label, sharps, octave)``.

    The sharp count is fixed by the power of 3 (label must fall in F..B on
    the chain of fifths); the octave then absorbs the remaining power of 2.
    """
    if any(p > 3 for p in m3):
        raise DomainError(f"{m3} is not 3-limit")
    b, a = m3[3], m3[2]
    k = (b + 1) // 7
    m = b - 7 * k
    z = 4 + a - _TWO_EXP[m] + 11 * k
    return FIFTHS[m + 1], k, z


def notate(v: Monzo, table: CommaTable | None = None) -> Notation:
    """Canonical notation of an exact ratio."""
    _, rough = split_rough(v)
    comma = rough.fraction
    label, k, z = pythagorean_decompose(v / comma_value(comma, table=table))
    return Notation(label, k, z, comma)


def multiply(a: Notation, b: Notation) -> Notation:
    """Product of two notations, computed part by part.

    Only the scale-note product needs work: it is re-spelt as a note in
    octave 4 plus a carry into the sharp count and octave.
    """
    label, k, z = pythagorean_decompose(scale_note(a.label) * scale_note(b.label))
    return Notation(
        label,
        a.sharps + b.sharps + k,
        (a.octave + b.octave - 4) + (z - 4),
        a.comma * b.comma,
    )


def invert(a: Notation) -> Notation:
    label, k, z = pythagorean_decompose(scale_note(a.label).inverse())
    return Notation(label, k - a.sharps, (8 - a.octave) + (z - 4), 1 / a.comma)


def divide(a: Notation, b: Notation) -> Notation:
    return multiply(a, invert(b))


_ORDERS = {"fifths": FIFTHS, "pitch": LABELS}


def mul_table(order: str = "fifths",
              table: CommaTable | None = None) -> list[list[tuple[Notation, Fraction]]]:
    """7x7 products of the octave-4 scale notes, rows and columns in ``order``.

    ``order`` is ``"fifths"`` (F C G D A E B) or ``"pitch"`` (C D E ... B).
    """
    try:
        labels = _ORDERS[order]
    except KeyError:
        raise ValueError(f"order must be 'fifths' or 'pitch', not {order!r}") from None
    grid = []
    for r in labels:
        row = []
        for c in labels:
            n = multiply(Notation(r), Notation(c))
            row.append((n, evaluate(n, table).fraction))
        grid.append(row)
    return grid


def inv_table(table: CommaTable | None = None) -> list[tuple[Notation, Notation, Fraction]]:
    """``(note, inverse, inverse value)`` for C4 .. B4."""
    out = []
    for label in LABELS:
        n = Notation(label)
        i = invert(n)
        out.append((n, i, evaluate(i, table).fraction))
    return out
