"""Seeded random elements and brute-force searches used by oracles and checks."""
from __future__ import annotations

import random
from fractions import Fraction
from math import floor, ceil

from ..arith import ALL, ALL_EXCEPT, EXPLICIT, PrimeLocalization, nth_prime
from .element import Element
from .group import GroupDescriptor


def denominator_ladder(L: PrimeLocalization, reach: int = 10 ** 6) -> list:
    """Powers of one allowed base, from 1 up past ``reach``; [1] for Z."""
    if L.mode == ALL:
        base = 10
    elif L.mode == EXPLICIT:
        base = 1
        for p in L.primes:
            base *= p
    elif L.mode == ALL_EXCEPT:
        base, i = 1, 0
        picked = 0
        while picked < 2:
            q = nth_prime(i)
            if q not in L.primes:
                base *= q
                picked += 1
            i += 1
    else:
        return [1]
    out = [1]
    while out[-1] <= reach:
        out.append(out[-1] * base)
    return out


def small_denominators(L: PrimeLocalization, limit: int = 30) -> list:
    return [d for d in range(1, limit + 1) if L.contains(Fraction(1, d))]


def random_coordinate(L: PrimeLocalization, rng: random.Random, size: int = 6, den_limit: int = 30) -> Fraction:
    dens = small_denominators(L, den_limit)
    while True:
        q = Fraction(rng.randint(-size, size), rng.choice(dens))
        if q:
            return q


def random_element(G: GroupDescriptor, rng: random.Random, horizon: int = 4,
                   max_terms: int = 3, size: int = 6) -> Element:
    """Random nonzero-or-zero element of G with few nonzero coordinates."""
    idx = list(G.indices(horizon))
    if not idx:
        return Element()
    k = rng.randint(0, min(max_terms, len(idx)))
    chosen = rng.sample(idx, k)
    return Element({i: random_coordinate(G.component(i), rng, size) for i in chosen})


def random_nonzero_element(G: GroupDescriptor, rng: random.Random, **kw) -> Element:
    while True:
        a = random_element(G, rng, **kw)
        if a:
            return a


def random_hull_element(G: GroupDescriptor, rng: random.Random, horizon: int = 4,
                        max_terms: int = 3, size: int = 6, den_limit: int = 12) -> Element:
    idx = list(G.indices(horizon))
    if not idx:
        return Element()
    k = rng.randint(1, min(max_terms, len(idx)))
    chosen = rng.sample(idx, k)
    return Element({i: Fraction(rng.randint(-size, size) or 1, rng.randint(1, den_limit)) for i in chosen})


def approximations(G: GroupDescriptor, h: Element, horizon: int = 4, reach: int = 10 ** 6, extra_dens=()):
    """Group elements close to ``h`` from both sides.

    For each cut-off index k the coordinates of ``h`` before k are copied
    (when they lie in G), coordinate k is rounded down and up to allowed
    denominators, and later coordinates are zero.  Yields ``(g, k)``.
    """
    top = max(h.support, default=G.start) + 1
    for k in G.indices(horizon):
        if k > top:
            break
        head = h.truncate(k)
        if not G.contains(head):
            break
        L = G.component(k)
        x = h[k]
        dens = set(denominator_ladder(L, reach))
        for d in extra_dens:
            for m in denominator_ladder(L, 4):
                if L.contains(Fraction(1, d * m)):
                    dens.add(d * m)
        for d in sorted(dens):
            for c in (Fraction(floor(x * d), d), Fraction(ceil(x * d), d)):
                yield head + Element({k: c}), k


def limit_point_oracle(G: GroupDescriptor, h: Element, horizon: int = 4) -> bool:
    """Brute force: does every small interval around ``h`` contain a point of G other than h?

    The tested radii are ``c * 1_j`` for j over the indices (cut off at
    ``horizon`` for omega sums) and c in {1, 1/10, 1/1000}.  The verdict is
    "limit point" iff a witness is found for every tested radius.
    """
    if G.contains(h):
        return False
    cands = [g for g, _ in approximations(G, h, horizon + 2)]
    for j in G.indices(horizon):
        for c in (Fraction(1), Fraction(1, 10), Fraction(1, 1000)):
            eps = Element({j: c})
            if not any(g != h and abs(g - h) < eps for g in cands):
                return False
    return True
