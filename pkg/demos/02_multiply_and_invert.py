"""
Arithmetic on notations
=======================

Multiplying two notations never needs the ratios themselves.  Octaves and
sharp counts add, comma labels multiply, and only the two letters need a
lookup in the 7x7 table of scale-note products.
"""
from jinotation import evaluate, inv_table, invert, mul_table, parse_notation as P

a, b = P("F#5[5]"), P("Eb6[1/5]")
print(a, "x", b, "=", a * b, "=", (a * b).fraction)

# the commas cancel, as do the sharp and the flat
a, b = P("A###(-5)[77/13]"), P("Bbbbbb9[23/55]")
print(a * b, evaluate(a * b))

# inversion reflects the letter about D and the octave about 4
for text in ["E6[5]", "Fbb3[7/25]", "G5"]:
    n = P(text)
    print(f"1 / {text} = {invert(n)}   ({invert(n).fraction})")

# the two lookup tables that drive the arithmetic
for row in mul_table("fifths"):
    print("  ".join(f"{str(n):4}" for n, _ in row))
print()
for n, i, f in inv_table():
    print(n, i, f)
