from fractions import Fraction

import pytest
from hypothesis import given

from jinotation.monzo import DomainError, Monzo, cents
from jinotation.notation import (
    IDENTITY,
    Notation,
    divide,
    evaluate,
    inv_table,
    invert,
    mul_table,
    multiply,
    notate,
    pythagorean_decompose,
)
from jinotation.text import parse_notation as P

from oracle import notation_fraction
from strategies import monzos, notations

# products transcribed from the printed tables, rows and columns in fifths order
FIFTHS_PRODUCTS = """
Bb4 16/9 | F4 4/3 | C5 2/1 | G4 3/2 | D5 9/4 | A4 27/16 | E5 81/32
F4 4/3 | C4 1/1 | G4 3/2 | D4 9/8 | A4 27/16 | E4 81/64 | B4 243/128
C5 2/1 | G4 3/2 | D5 9/4 | A4 27/16 | E5 81/32 | B4 243/128 | F#5 729/256
G4 3/2 | D4 9/8 | A4 27/16 | E4 81/64 | B4 243/128 | F#4 729/512 | C#5 2187/1024
D5 9/4 | A4 27/16 | E5 81/32 | B4 243/128 | F#5 729/256 | C#5 2187/1024 | G#5 6561/2048
A4 27/16 | E4 81/64 | B4 243/128 | F#4 729/512 | C#5 2187/1024 | G#4 6561/4096 | D#5 19683/8192
E5 81/32 | B4 243/128 | F#5 729/256 | C#5 2187/1024 | G#5 6561/2048 | D#5 19683/8192 | A#5 59049/16384
"""

PITCH_PRODUCTS = """
C4 1/1 | D4 9/8 | E4 81/64 | F4 4/3 | G4 3/2 | A4 27/16 | B4 243/128
D4 9/8 | E4 81/64 | F#4 729/512 | G4 3/2 | A4 27/16 | B4 243/128 | C#5 2187/1024
E4 81/64 | F#4 729/512 | G#4 6561/4096 | A4 27/16 | B4 243/128 | C#5 2187/1024 | D#5 19683/8192
F4 4/3 | G4 3/2 | A4 27/16 | Bb4 16/9 | C5 2/1 | D5 9/4 | E5 81/32
G4 3/2 | A4 27/16 | B4 243/128 | C5 2/1 | D5 9/4 | E5 81/32 | F#5 729/256
A4 27/16 | B4 243/128 | C#5 2187/1024 | D5 9/4 | E5 81/32 | F#5 729/256 | G#5 6561/2048
B4 243/128 | C#5 2187/1024 | D#5 19683/8192 | E5 81/32 | F#5 729/256 | G#5 6561/2048 | A#5 59049/16384
"""

INVERSES = [
    ("C4", "C4", "1/1"), ("D4", "Bb3", "8/9"), ("E4", "Ab3", "64/81"), ("F4", "G3", "3/4"),
    ("G4", "F3", "2/3"), ("A4", "Eb3", "16/27"), ("B4", "Db3", "128/243"),
]


def _grid(text):
    return [[tuple(cell.split()) for cell in line.split("|")] for line in text.strip().splitlines()]


@pytest.mark.parametrize("order, text", [("fifths", FIFTHS_PRODUCTS), ("pitch", PITCH_PRODUCTS)])
def test_mul_tables(order, text):
    got = [[(str(n), f"{f.numerator}/{f.denominator}") for n, f in row] for row in mul_table(order)]
    assert got == _grid(text)


def test_inv_table():
    got = [(str(n), str(i), f"{f.numerator}/{f.denominator}") for n, i, f in inv_table()]
    assert got == INVERSES


def test_mul_table_bad_order():
    with pytest.raises(ValueError):
        mul_table("alphabetical")


@pytest.mark.parametrize("text, f", [
    ("E4[5]", Fraction(5, 4)),
    ("C4", Fraction(1)),
    ("Fbb3[7/25]", Fraction(3584, 6075)),
    ("Ab1[1/5]", Fraction(1, 5)),
    ("E6[5]", Fraction(5)),
    ("F#5[5]", Fraction(45, 16)),
    ("Eb6[1/5]", Fraction(24, 5)),
    ("A7", Fraction(27, 2)),
    ("Ab.3", Fraction(4, 5)),
    ("A3[13]", Fraction(13, 16)),
    ("F.3[13]", Fraction(13, 20)),
    ("Ebb.6[19]", Fraction(608, 135)),
    ("F#2[23]", Fraction(23, 64)),
    ("Ab.4[437]", Fraction(437, 270)),
    ("Gb1[161/65]", Fraction(322, 1755)),
])
def test_evaluate_worked_values(text, f):
    n = P(text)
    assert evaluate(n).fraction == f
    assert notation_fraction(n.label, n.sharps, n.octave, n.comma) == f


def test_motivating_scale():
    melody = ["C4", "D4", "E4[5]", "F4", "G4", "A4[5]", "Bb4[7]"]
    assert [P(s).fraction for s in melody] == [
        Fraction(1), Fraction(9, 8), Fraction(5, 4), Fraction(4, 3),
        Fraction(3, 2), Fraction(5, 3), Fraction(7, 4)]


@pytest.mark.parametrize("f, expected", [
    (Fraction(8, 9), ("B", -1, 3)),
    (Fraction(1), ("C", 0, 4)),
    (Fraction(6561, 2048), ("G", 1, 5)),
    (Fraction(2187, 2048), ("C", 1, 4)),
    (Fraction(4, 3), ("F", 0, 4)),
])
def test_pythagorean_decompose(f, expected):
    assert pythagorean_decompose(Monzo.from_fraction(f)) == expected


def test_pythagorean_decompose_rejects_higher_primes():
    with pytest.raises(DomainError):
        pythagorean_decompose(Monzo.from_fraction(5, 4))


@pytest.mark.parametrize("f, text", [
    (Fraction(27, 2), "A7"),
    (Fraction(5), "E6[5]"),
    (Fraction(13, 20), "F3[13/5]"),
    (Fraction(1), "C4"),
])
def test_notate(f, text):
    assert str(notate(Monzo.from_fraction(f))) == text


@pytest.mark.parametrize("a, b, product", [
    ("F#5[5]", "Eb6[1/5]", "A7"),
    ("A###(-5)[77/13]", "Bbbbbb9[23/55]", "Gb1[161/65]"),
    ("C4", "G4", "G4"),
    ("D4", "G4", "A4"),
    ("E4[5]", "G4", "B4[5]"),
    ("F4", "G4", "C5"),
    ("G4", "G4", "D5"),
    ("A4[5]", "G4", "E5[5]"),
    ("Bb4[7]", "G4", "F5[7]"),
    ("F4", "F4", "Bb4"),
    ("D4", "E4", "F#4"),
    ("G4", "A4", "E5"),
    ("Db.4", "A3[13]", "Bb3[13/5]"),
])
def test_multiply(a, b, product):
    assert str(multiply(P(a), P(b))) == product
    assert str(multiply(P(b), P(a))) == product


def test_compound_multiplication_monzos():
    a, b = P("A###(-5)[77/13]"), P("Bbbbbb9[23/55]")
    assert evaluate(a).as_dict() == {2: -58, 3: 30, 7: 1, 11: 1, 13: -1}
    assert evaluate(b).as_dict() == {2: 59, 3: -33, 5: -1, 11: -1, 23: 1}
    assert evaluate(a * b).as_dict() == {2: 1, 3: -3, 5: -1, 7: 1, 13: -1, 23: 1}


@pytest.mark.parametrize("a, inverse", [
    ("E6[5]", "Ab1[1/5]"),
    ("Fbb3[7/25]", "G##4[25/7]"),
    ("C4", "C4"),
    ("F4", "G3"),
    ("G4", "F3"),
    ("D4", "Bb3"),
    ("F#4", "Gb3"),
    ("G5", "F2"),
])
def test_invert(a, inverse):
    assert str(invert(P(a))) == inverse


def test_inversion_cents():
    a = P("Fbb3[7/25]")
    assert round(cents(evaluate(a)), 2) == -913.58
    assert round(cents(evaluate(invert(a))), 2) == 913.58
    assert evaluate(invert(a)).fraction == Fraction(6075, 3584)


def test_divide():
    assert divide(P("G4"), P("G4")) == IDENTITY
    assert P("A4") / P("G4") == P("D4")


def test_shortcut_identities():
    assert P("D4") * P("E4") == P("F#4")
    assert P("Db4") * P("E4") == P("F4")
    assert P("D4") * P("Eb4") == P("F4")
    # 16/9 * 81/64 = 9/4, so the chain lands an octave above the printed one
    assert P("Bb4") * P("E4") == P("D5")
    assert P("Bb.4") * P("E4") == P("D.5")
    assert P("Bb.4") * P("E5") == P("D.6")
    assert P("Bb.4") * P("E5[7]") == P("D6[7/5]")


@pytest.mark.xfail(strict=True, reason="Bb4 x E4 is D5 (9/4), not D4")
def test_shortcut_chain_as_printed():
    assert P("Bb.4") * P("E5[7]") == P("D5[7/5]")


def test_notation_validation():
    with pytest.raises(DomainError):
        Notation("H")
    with pytest.raises(DomainError):
        Notation("C", 0, 4, Fraction(3))
    assert Notation("C", 0, 4, 35).comma == Fraction(35)


def test_pitch_class():
    n = P("Bb.3[13]")
    assert n.pitch_class.at(3) == n
    assert str(n.pitch_class) == "Bb[13/5]"


@given(notations, notations)
def test_componentwise_matches_monzo_path(a, b):
    prod = multiply(a, b)
    assert evaluate(prod) == evaluate(a) * evaluate(b)
    assert prod == notate(evaluate(a) * evaluate(b))
    assert prod.comma == a.comma * b.comma


@given(notations)
def test_inverse_and_identity(a):
    assert evaluate(invert(a)) == evaluate(a).inverse()
    assert multiply(a, invert(a)) == IDENTITY
    assert multiply(a, IDENTITY) == a
    assert invert(invert(a)) == a


@given(notations, notations, notations)
def test_group_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert divide(a, b) == multiply(a, invert(b))


@given(notations)
def test_notate_evaluate_round_trip(n):
    assert notate(evaluate(n)) == n
    assert evaluate(n).fraction == notation_fraction(n.label, n.sharps, n.octave, n.comma)


@given(monzos)
def test_evaluate_notate_round_trip(v):
    assert evaluate(notate(v)) == v
