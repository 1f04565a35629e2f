"""
Transposing a melody
====================

A melody is transposed by multiplying every note by one interval.  Pulling
out the prime factors that all notes share turns the result back into
something that reads like the original.
"""
from jinotation import (NotationStyle, factor_common_comma, format_melody, intervals,
                        parse_melody, parse_notation, transpose_down, transpose_up)

short = NotationStyle(use_shorthand_5=True)


def show(m):
    # the common comma, if any, is printed on its own line
    return " | ".join(format_melody(m, short).split())


tune = parse_melody("Bb5 C.6[17] Ebb.6[19]")
by = parse_notation("F#2[23]")
up = transpose_up(tune, by)
print("original   ", show(tune))
print("transposed ", show(up))

# every note now carries a 23; factor it out
print("factored   ", show(factor_common_comma(up)))

# transposition leaves the steps between notes alone
print([str(s) for s in intervals(tune)])
print([str(s) for s in intervals(up)])

assert transpose_down(up, by).expand() == tune.expand()
