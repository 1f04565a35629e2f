"""Exact positive rationals stored as prime-exponent vectors (monzos).

A :class:`Monzo` is an immutable, hashable mapping ``prime -> exponent`` with
zero exponents pruned, so that structural equality is value equality.  All
arithmetic is exact; only :func:`cents` and the logarithmic parts of
:func:`measures` use floating point.

    >>> m = Monzo.from_fraction(80, 81)
    >>> m
    Monzo({2: 4, 3: -4, 5: 1})
    >>> m.fraction
    Fraction(80, 81)
    >>> (m * m.inverse()).is_unison
    True
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, NamedTuple

__all__ = [
    "DomainError",
    "Monzo",
    "Measures",
    "MAX_DIGITS",
    "factorize",
    "monzo_from_fraction",
    "fraction_from_monzo",
    "mul",
    "inv",
    "pow",
    "split_rough",
    "cents",
    "measures",
]

# inputs longer than this are refused by factorize() unless overridden
MAX_DIGITS = 64


class DomainError(ValueError):
    """Input outside the domain of an operation (non-positive, not 5-rough, ...)."""


@lru_cache(maxsize=4096)
def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    i = 5
    while i * i <= n:
        if n % i == 0 or n % (i + 2) == 0:
            return False
        i += 6
    return True


def factorize(n: int, max_digits: int = MAX_DIGITS) -> dict[int, int]:
    """Prime factorization of a positive integer by trial division."""
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"expected int, got {type(n).__name__}")
    if n < 1:
        raise DomainError(f"cannot factorize non-positive integer {n}")
    if len(str(n)) > max_digits:
        raise DomainError(f"refusing to factorize a {len(str(n))}-digit integer (limit {max_digits})")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    p = 5
    step = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += step
        step = 6 - step
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


class Monzo:
    """Immutable prime-exponent vector; the empty vector is 1/1."""

    __slots__ = ("_items", "_hash")

    def __init__(self, exponents: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        pairs = exponents.items() if isinstance(exponents, Mapping) else exponents
        acc: dict[int, int] = {}
        for p, e in pairs:
            if not isinstance(p, int) or not isinstance(e, int):
                raise TypeError("primes and exponents must be integers")
            acc[p] = acc.get(p, 0) + e
        for p in acc:
            if not _is_prime(p):
                raise DomainError(f"{p} is not prime")
        self._items = tuple(sorted((p, e) for p, e in acc.items() if e))
        self._hash = hash(self._items)

    @classmethod
    def _raw(cls, items: tuple[tuple[int, int], ...]) -> Monzo:
        # trusted constructor: items already sorted, prime, nonzero
        m = object.__new__(cls)
        m._items = items
        m._hash = hash(items)
        return m

    @classmethod
    def from_fraction(cls, num: int | Fraction, den: int = 1) -> Monzo:
        if isinstance(num, Fraction):
            if den != 1:
                raise TypeError("den must be omitted when passing a Fraction")
            num, den = num.numerator, num.denominator
        if num < 1 or den < 1:
            raise DomainError(f"{num}/{den} is not a positive fraction")
        g = math.gcd(num, den)
        num //= g
        den //= g
        acc = factorize(num)
        for p, e in factorize(den).items():
            acc[p] = -e
        return cls._raw(tuple(sorted(acc.items())))

    # -- mapping-ish access ------------------------------------------------
    def items(self) -> tuple[tuple[int, int], ...]:
        return self._items

    def __getitem__(self, p: int) -> int:
        for q, e in self._items:
            if q == p:
                return e
        return 0

    def __iter__(self):
        return (p for p, _ in self._items)

    def __len__(self) -> int:
        return len(self._items)

    def as_dict(self) -> dict[int, int]:
        return dict(self._items)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self._items)

    @property
    def is_unison(self) -> bool:
        return not self._items

    @property
    def limit(self) -> int:
        """Largest prime present (1 for unison)."""
        return self._items[-1][0] if self._items else 1

    # -- values --------------------------------------------------------------
    @property
    def numerator(self) -> int:
        n = 1
        for p, e in self._items:
            if e > 0:
                n *= p**e
        return n

    @property
    def denominator(self) -> int:
        d = 1
        for p, e in self._items:
            if e < 0:
                d *= p**-e
        return d

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def log2(self) -> float:
        return sum(e * math.log2(p) for p, e in self._items)

    # -- group operations ----------------------------------------------------
    def __mul__(self, other: Monzo) -> Monzo:
        if not isinstance(other, Monzo):
            return NotImplemented
        acc = dict(self._items)
        for p, e in other._items:
            acc[p] = acc.get(p, 0) + e
        return Monzo._raw(tuple(sorted((p, e) for p, e in acc.items() if e)))

    def inverse(self) -> Monzo:
        return Monzo._raw(tuple((p, -e) for p, e in self._items))

    def __truediv__(self, other: Monzo) -> Monzo:
        if not isinstance(other, Monzo):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, n: int) -> Monzo:
        if not isinstance(n, int):
            return NotImplemented
        if n == 0:
            return UNISON
        return Monzo._raw(tuple((p, e * n) for p, e in self._items))

    def restrict(self, keep) -> Monzo:
        """Sub-vector of the primes for which ``keep(p)`` is true."""
        return Monzo._raw(tuple((p, e) for p, e in self._items if keep(p)))

    # -- dunder plumbing -----------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, Monzo):
            return self._items == other._items
        return NotImplemented

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(f"{p}: {e}" for p, e in self._items)
        return f"Monzo({{{body}}})"

    def __str__(self) -> str:
        f = self.fraction
        return f"{f.numerator}/{f.denominator}"


UNISON = Monzo()


def pythagorean(a: int, b: int) -> Monzo:
    """The 3-limit ratio ``2**a * 3**b``."""
    return Monzo._raw(tuple((p, e) for p, e in ((2, a), (3, b)) if e))


class Measures(NamedTuple):
    """Complexity and size measures of a ratio.

    ``cy`` is the Benedetti height (numerator times denominator), ``lcy`` its
    base-2 log (Tenney height), ``ao`` the absolute size in octaves and
    ``cm = ao * lcy``.
    """

    cy: int
    lcy: float
    ao: float
    cm: float


def monzo_from_fraction(num: int, den: int = 1) -> Monzo:
    return Monzo.from_fraction(num, den)


def fraction_from_monzo(m: Monzo) -> Fraction:
    return m.fraction


def mul(a: Monzo, b: Monzo) -> Monzo:
    return a * b


def inv(a: Monzo) -> Monzo:
    return a.inverse()


def pow(a: Monzo, n: int) -> Monzo:  # noqa: A001 - mirrors the monzo operation name
    return a**n


def split_rough(a: Monzo) -> tuple[Monzo, Monzo]:
    """Split into a 3-smooth part and a 5-rough part whose product is ``a``."""
    return a.restrict(lambda p: p < 5), a.restrict(lambda p: p >= 5)


def cents(a: Monzo) -> float:
    return 1200.0 * a.log2()


def measures(a: Monzo) -> Measures:
    cy = a.numerator * a.denominator
    lcy = math.log2(cy)
    ao = abs(a.log2())
    return Measures(cy, lcy, ao, ao * lcy)
