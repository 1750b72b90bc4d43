"""Exact rationals and the localized subgroups of Q used as archimedean components.

Rationals are :class:`fractions.Fraction` throughout.  A subgroup of Q of the
form Z[1/p : p in P] is described by :class:`PrimeLocalization`, which keeps
the set P of inverted primes in one of four finite encodings.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Union

import sympy

from .errors import DomainError, ParseError

RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def to_rational(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and ``"a/b"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ParseError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        m = _RATIONAL_RE.match(value)
        if not m:
            raise ParseError(f"not a rational: {value!r}")
        den = int(m.group(2)) if m.group(2) else 1
        if den == 0:
            raise ParseError(f"zero denominator in {value!r}")
        return Fraction(int(m.group(1)), den)
    raise ParseError(f"not a rational: {value!r}")


def rational_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def is_prime(p: int) -> bool:
    return isinstance(p, int) and p > 1 and bool(sympy.isprime(p))


def nth_prime(i: int) -> int:
    """The prime p_i in the enumeration 2 = p_0 < p_1 < p_2 < ..."""
    if i < 0:
        raise DomainError("prime index must be non-negative")
    return int(sympy.prime(i + 1))


def prime_index(p: int) -> int:
    """Inverse of :func:`nth_prime`."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    return int(sympy.primepi(p)) - 1


def integer_root(n: int, p: int) -> Optional[int]:
    """Exact non-negative integer p-th root of ``n >= 0``, or None."""
    root, exact = sympy.integer_nthroot(n, p)
    return int(root) if exact else None


def rational_root(q: Fraction, p: int) -> Optional[Fraction]:
    """Positive rational p-th root of ``q > 0`` if one exists."""
    if q <= 0:
        return None
    num = integer_root(q.numerator, p)
    den = integer_root(q.denominator, p)
    if num is None or den is None:
        return None
    return Fraction(num, den)


EXPLICIT = "explicit"
ALL_EXCEPT = "all_except"
ALL = "all"
NONE = "none"


@dataclass(frozen=True)
class PrimeLocalization:
    """The subgroup Z[1/p : p inverted] of Q.

    ``mode`` selects how ``primes`` is read: ``explicit`` inverts exactly
    those primes, ``all_except`` inverts every other prime, ``all`` is Q and
    ``none`` is Z.  Instances are normalized so that structural equality is
    group equality.
    """

    mode: str
    primes: tuple = ()

    def __post_init__(self):
        if self.mode not in (EXPLICIT, ALL_EXCEPT, ALL, NONE):
            raise DomainError(f"unknown localization mode {self.mode!r}")
        primes = tuple(sorted(set(int(p) for p in self.primes)))
        for p in primes:
            if not is_prime(p):
                raise DomainError(f"{p} is not prime")
        mode = self.mode
        if mode in (ALL, NONE) and primes:
            raise DomainError(f"mode {mode!r} takes no primes")
        if mode == EXPLICIT and not primes:
            mode = NONE
        if mode == ALL_EXCEPT and not primes:
            mode = ALL
        object.__setattr__(self, "mode", mode)
        object.__setattr__(self, "primes", primes)

    # constructors -----------------------------------------------------
    @classmethod
    def integers(cls) -> "PrimeLocalization":
        return cls(NONE)

    @classmethod
    def rationals(cls) -> "PrimeLocalization":
        return cls(ALL)

    @classmethod
    def inverting(cls, *primes: int) -> "PrimeLocalization":
        return cls(EXPLICIT, primes)

    @classmethod
    def inverting_all_but(cls, *primes: int) -> "PrimeLocalization":
        return cls(ALL_EXCEPT, primes)

    # predicates -------------------------------------------------------
    def inverts(self, p: int) -> bool:
        if self.mode == ALL:
            return True
        if self.mode == NONE:
            return False
        if self.mode == EXPLICIT:
            return p in self.primes
        return p not in self.primes

    def contains(self, q: RationalLike) -> bool:
        """True iff every prime factor of q's denominator is inverted."""
        d = to_rational(q).denominator
        if d == 1 or self.mode == ALL:
            return True
        if self.mode == NONE:
            return False
        if self.mode == ALL_EXCEPT:
            return all(d % p for p in self.primes)
        for p in self.primes:
            while d % p == 0:
                d //= p
        return d == 1

    def is_p_divisible(self, p: int) -> bool:
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
        return self.inverts(p)

    def divide(self, q: RationalLike, n: int) -> Optional[Fraction]:
        """``q / n`` when it stays in the group, else None."""
        q = to_rational(q)
        if not isinstance(n, int) or n <= 0:
            raise DomainError("divisor must be a positive integer")
        if not self.contains(q):
            raise DomainError(f"{rational_str(q)} is not in {self}")
        r = q / n
        return r if self.contains(r) else None

    @property
    def is_dense(self) -> bool:
        """Densely ordered iff at least one prime is inverted."""
        return self.mode != NONE

    @property
    def is_divisible(self) -> bool:
        return self.mode == ALL

    def non_inverted_prime(self) -> Optional[int]:
        """Smallest prime that is not inverted, None for Q."""
        if self.mode == ALL:
            return None
        if self.mode == ALL_EXCEPT:
            return self.primes[0]
        p = 2
        while p in self.primes:
            p = int(sympy.nextprime(p))
        return p

    # small helpers used by samplers -----------------------------------
    def denominators(self, limit: int = 64) -> list:
        """Allowed denominators up to ``limit`` (always includes 1)."""
        return [d for d in range(1, limit + 1) if self.contains(Fraction(1, d))]

    def floor_to(self, q: Fraction, den: int) -> Fraction:
        """Largest element ``k/den <= q``; ``den`` must be an allowed denominator."""
        return Fraction((q * den).__floor__(), den)

    # encoding ---------------------------------------------------------
    def to_json(self):
        if self.mode == ALL:
            return "all"
        if self.mode == NONE:
            return "none"
        if self.mode == EXPLICIT:
            return {"primes": list(self.primes)}
        return {"all_except": list(self.primes)}

    @classmethod
    def from_json(cls, data) -> "PrimeLocalization":
        if data == "all":
            return cls(ALL)
        if data == "none":
            return cls(NONE)
        if isinstance(data, dict) and len(data) == 1:
            if "primes" in data:
                return cls(EXPLICIT, tuple(_json_primes(data["primes"])))
            if "all_except" in data:
                return cls(ALL_EXCEPT, tuple(_json_primes(data["all_except"])))
        raise ParseError(f"bad localization: {data!r}")

    def __str__(self):
        if self.mode == ALL:
            return "Q"
        if self.mode == NONE:
            return "Z"
        inner = ",".join(str(p) for p in self.primes)
        if self.mode == EXPLICIT:
            return f"Z[1/{inner}]" if len(self.primes) == 1 else f"Z[1/p : p in {{{inner}}}]"
        return f"Z[1/p : p not in {{{inner}}}]"


def _json_primes(values):
    if not isinstance(values, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in values):
        raise ParseError(f"prime list must be a list of integers: {values!r}")
    for v in values:
        if not is_prime(v):
            raise ParseError(f"{v} is not prime")
    return values


Z = PrimeLocalization.integers()
Q = PrimeLocalization.rationals()


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)
