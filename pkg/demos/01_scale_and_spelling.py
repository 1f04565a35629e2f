"""
A just scale, spelled and evaluated
===================================

Each note name carries its own exact ratio.  The letter and accidentals give
a Pythagorean pitch, the bracket adds a comma for every prime above 3.
"""
from jinotation import cents, evaluate, notate, parse_notation, Monzo

# a seven-limit major scale with a harmonic seventh on top
scale = ["C4", "D4", "E4[5]", "F4", "G4", "A4[5]", "Bb4[7]", "C5"]
for text in scale:
    v = evaluate(parse_notation(text))
    print(f"{text:8} {str(v.fraction):6} {cents(v):8.2f}")

# going the other way: any ratio gets exactly one canonical spelling
for f in [(7, 4), (11, 8), (13, 8), (27, 2), (1, 5)]:
    print(f"{f[0]}/{f[1]:<4}", notate(Monzo.from_fraction(*f)))
