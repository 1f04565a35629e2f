"""Exact arithmetic for free just intonation notations ``L[x/y]_z``.

Notations such as ``Bb.3[13]`` are parsed into :class:`Notation` values that
can be evaluated to exact ratios (:class:`Monzo`), multiplied, divided and
inverted, and applied to whole melodies.
"""
from .commas import (
    CommaTable,
    analyze_three_candidates,
    comma_value,
    default_table,
    prime_comma,
    select_prime_comma,
)
from .melody import (
    Melody,
    factor_common_comma,
    format_melody,
    intervals,
    parse_melody,
    read_melody,
    transpose_down,
    transpose_up,
)
from .monzo import DomainError, Measures, Monzo, cents, measures, split_rough
from .notation import (
    IDENTITY,
    Notation,
    PitchClass,
    divide,
    evaluate,
    inv_table,
    invert,
    mul_table,
    multiply,
    notate,
    pythagorean_decompose,
)
from .text import NotationStyle, ParseError, parse_notation, parse_pitch_class, print_notation, print_pitch_class

__version__ = "0.1.0"
