"""
Where the prime commas come from
================================

Every prime p >= 5 gets one comma 2^a 3^b p.  Among the candidates within a
few fifths of C, the one with the smallest product of size and complexity
wins.  Printing the candidates for p = 3 shows how that measure behaves.
"""
from jinotation import CommaTable, analyze_three_candidates, cents, select_prime_comma

for row in analyze_three_candidates():
    mark = "<- smallest" if row.minimal else ""
    print(f"{str(row.fraction):>5}  CY={row.cy:<4} LCY={row.lcy:.3f} AO={row.ao:.3f} CM={row.cm:.3f} {mark}")

# the seeded table and the search agree on every seeded prime
table = CommaTable()
table.self_check()
print(table.to_csv())

# primes beyond the seed are found on demand
for p in [29, 31, 37, 41, 43, 47]:
    m = select_prime_comma(p)
    print(p, m, f"{cents(m):.2f}")
