"""Prime commas, rational commas and the comma-measure search.

Every prime ``p >= 5`` owns a *prime comma*: a ratio ``2**a * 3**b * p`` close
to 1/1.  A rational comma label ``[x/y]`` (x, y 5-rough) is worth the product
of the prime commas of ``x`` divided by those of ``y``.

The well-known commas are seeded; any other prime is found by minimising the
comma measure ``CM = AO * LCY`` over a window of powers of 3 and memoised.
"""
from __future__ import annotations

import csv
import io
import json
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .monzo import UNISON, DomainError, Monzo, _is_prime, cents, factorize, measures

__all__ = [
    "SEED_COMMAS",
    "CommaTable",
    "ThreeCandidateRow",
    "default_table",
    "prime_comma",
    "select_prime_comma",
    "comma_value",
    "is_five_rough",
    "analyze_three_candidates",
]

# window of powers of 3: the comma's Pythagorean part stays within one sharp or
# flat of C (3**7 is one sharp step)
DEFAULT_SEARCH_BOUND = 7

# p -> comma fraction
SEED_COMMAS: dict[int, Fraction] = {
    5: Fraction(80, 81),
    7: Fraction(63, 64),
    11: Fraction(33, 32),
    13: Fraction(26, 27),
    17: Fraction(2176, 2187),
    19: Fraction(513, 512),
    23: Fraction(736, 729),
}


def is_five_rough(n: int) -> bool:
    return n >= 1 and n % 2 != 0 and n % 3 != 0


def _centred_octave_shift(m: Monzo) -> int:
    """The power of two that brings ``m`` within half an octave of 1/1."""
    a = -round(m.log2())
    # floats can misjudge near the edge; settle it exactly on c**2 in [1/2, 2]
    for _ in range(4):
        c = m * Monzo({2: a})
        sq_num, sq_den = c.numerator**2, c.denominator**2
        if 2 * sq_num < sq_den:
            a += 1
        elif sq_num > 2 * sq_den:
            a -= 1
        else:
            return a
    raise AssertionError("octave centring did not converge")  # pragma: no cover


def select_prime_comma(p: int, bound: int = DEFAULT_SEARCH_BOUND) -> Monzo:
    """Choose the prime comma for ``p`` by comma-measure minimisation.

    Candidates are ``2**a * 3**b * p`` for ``-bound <= b <= bound`` with ``a``
    chosen so the candidate lies within half an octave of unison.  The
    candidate with the smallest CM wins; ties go to the smaller Benedetti
    height, then to the smaller ``|b|``.
    """
    if not _is_prime(p) or p < 5:
        raise DomainError(f"prime comma needs a prime >= 5, got {p}")
    if bound < 1:
        raise DomainError(f"search bound must be >= 1, got {bound}")
    best = None
    for b in range(-bound, bound + 1):
        base = Monzo({3: b, p: 1})
        cand = base * Monzo({2: _centred_octave_shift(base)})
        ms = measures(cand)
        key = (ms.cm, ms.cy, abs(b))
        if best is None or key < best[0]:
            best = (key, cand)
    return best[1]


def _check_entry(p: int, m: Monzo) -> None:
    if m[p] != 1 or any(q not in (2, 3, p) for q in m):
        raise DomainError(f"comma {m} for prime {p} must be 2^a 3^b {p}")
    if abs(cents(m)) >= 100.0:
        raise DomainError(f"comma {m} for prime {p} is not smaller than a semitone")


class CommaTable:
    """Mapping prime -> prime comma, extended on demand.

    Lookups of primes not yet present run :func:`select_prime_comma` and store
    the result.  Writes are serialised by a lock, so one table can be shared
    between threads.
    """

    def __init__(self, entries: dict[int, Monzo | Fraction] | None = None,
                 search_bound: int = DEFAULT_SEARCH_BOUND):
        if search_bound < 1:
            raise DomainError("search_bound must be positive")
        self.search_bound = search_bound
        self._lock = threading.Lock()
        self._entries: dict[int, Monzo] = {}
        # reduced label (x, y) -> value, filled by comma_value()
        self._labels: dict[tuple[int, int], Monzo] = {}
        seed = SEED_COMMAS if entries is None else entries
        for p, v in seed.items():
            m = v if isinstance(v, Monzo) else Monzo.from_fraction(v)
            _check_entry(p, m)
            self._entries[p] = m

    def __contains__(self, p: int) -> bool:
        return p in self._entries

    def __getitem__(self, p: int) -> Monzo:
        return self.prime_comma(p)

    def primes(self) -> list[int]:
        return sorted(self._entries)

    def prime_comma(self, p: int) -> Monzo:
        try:
            return self._entries[p]
        except KeyError:
            pass
        if not _is_prime(p) or p < 5:
            raise DomainError(f"prime comma needs a prime >= 5, got {p}")
        m = select_prime_comma(p, self.search_bound)
        with self._lock:
            return self._entries.setdefault(p, m)

    def self_check(self) -> None:
        """Raise if the search disagrees with any stored entry."""
        for p, m in sorted(self._entries.items()):
            found = select_prime_comma(p, self.search_bound)
            if found != m:
                raise AssertionError(f"comma search gives {found} for {p}, table holds {m}")

    def rows(self, primes: Iterable[int] | None = None) -> list[dict]:
        out = []
        for p in (self.primes() if primes is None else primes):
            m = self.prime_comma(p)
            out.append({"prime": p, "fraction": str(m), "cents": round(cents(m), 2)})
        return out

    def to_csv(self, primes: Iterable[int] | None = None) -> str:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=["prime", "fraction", "cents"], lineterminator="\n")
        w.writeheader()
        w.writerows(self.rows(primes))
        return buf.getvalue()

    def to_json(self, primes: Iterable[int] | None = None) -> str:
        return json.dumps(self.rows(primes), indent=2)


_DEFAULT: CommaTable | None = None
_DEFAULT_LOCK = threading.Lock()


def default_table() -> CommaTable:
    """The shared, self-checked seeded table."""
    global _DEFAULT
    if _DEFAULT is None:
        with _DEFAULT_LOCK:
            if _DEFAULT is None:
                t = CommaTable()
                t.self_check()
                _DEFAULT = t
    return _DEFAULT


def prime_comma(p: int, table: CommaTable | None = None) -> Monzo:
    return (table or default_table()).prime_comma(p)


def comma_value(x: int | Fraction, y: int = 1, table: CommaTable | None = None) -> Monzo:
    """Exact value of the rational comma ``[x/y]``."""
    if isinstance(x, Fraction):
        if y != 1:
            raise TypeError("y must be omitted when passing a Fraction")
        x, y = x.numerator, x.denominator
    if x < 1 or y < 1:
        raise DomainError(f"comma [{x}/{y}] must be positive")
    if not (is_five_rough(x) and is_five_rough(y)):
        raise DomainError(f"comma [{x}/{y}] is not 5-rough")
    table = table or default_table()
    g = math.gcd(x, y)
    key = (x // g, y // g)
    hit = table._labels.get(key)
    if hit is not None:
        return hit
    out = UNISON
    for p, e in factorize(key[0]).items():
        out = out * table.prime_comma(p) ** e
    for p, e in factorize(key[1]).items():
        out = out * table.prime_comma(p) ** -e
    with table._lock:
        if len(table._labels) < 65536:
            table._labels[key] = out
    return out


@dataclass(frozen=True)
class ThreeCandidateRow:
    fraction: Fraction
    decimal: float
    cy: int
    lcy: float
    ao: float
    cm: float
    minimal: bool = False


def analyze_three_candidates(b_min: int = -4, b_max: int = 3) -> list[ThreeCandidateRow]:
    """Measure the candidates ``2**b * 3`` for ``b_min <= b <= b_max``.

    Rows come back in ascending order of value; the row with the smallest CM
    has ``minimal=True``.
    """
    if b_min > b_max:
        raise DomainError(f"empty candidate range {b_min}..{b_max}")
    rows = []
    for b in range(b_min, b_max + 1):
        m = Monzo({2: b, 3: 1})
        ms = measures(m)
        rows.append(ThreeCandidateRow(m.fraction, float(m.fraction), ms.cy, ms.lcy, ms.ao, ms.cm))
    best = min(range(len(rows)), key=lambda i: (rows[i].cm, rows[i].cy))
    rows[best] = ThreeCandidateRow(**{**rows[best].__dict__, "minimal": True})
    return rows
