"""The convex subgroup defined from a hull point that G cannot approach.

Given h in div G that is neither in G nor a limit of G, and N with N*h in
G, the set

    D = {g in G : g >= 0 and N*g < N*h}
    A = {g in G : g >= 0 and g + D is contained in D}

gives a definable convex subgroup H = A u -A.  Here H is computed two ways:
in closed form (elements whose natural valuation passes the first index
where h leaves G) and literally, by searching D for an element that pushes
g + d out of D.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import DomainError, NotApplicable
from .element import Element
from .group import ConvexCut, GroupDescriptor, canonical_cut, convex_member
from .predicates import is_limit_point
from .sampling import approximations, random_element

DEFAULT_SAMPLES = 500


@dataclass
class DefinableSubgroup:
    group: GroupDescriptor
    g0: Element
    N: int
    cut: ConvexCut
    samples: int = DEFAULT_SAMPLES
    seed: int = 0
    _pool: list = field(default=None, repr=False)

    @property
    def g1(self) -> Element:
        return self.g0 * self.N

    def closed_member(self, g: Element) -> bool:
        return self.group.contains(g) and convex_member(self.group, self.cut, g)

    def in_d(self, g: Element) -> bool:
        return self.group.contains(g) and g.sign >= 0 and (g * self.N) < self.g1

    def _d_pool(self):
        if self._pool is None:
            rng = random.Random(self.seed)
            pool = {Element()}
            for d, _ in approximations(self.group, self.g0, horizon=6):
                if self.in_d(d):
                    pool.add(d)
            seeds = sorted(pool, key=lambda e: e.items())
            for _ in range(20 * self.samples):
                if len(pool) >= self.samples:
                    break
                d = rng.choice(seeds) + random_element(self.group, rng, horizon=6, size=3)
                if self.in_d(d):
                    pool.add(d)
            self._pool = sorted(pool, key=lambda e: e.items())
        return self._pool

    def counterexample(self, g: Element):
        """An element of D that ``|g|`` pushes out of D, or None if the search finds none.

        Besides a fixed pool, the search rounds h down using the
        denominators of g itself, which is where a witness must live when g
        is small.
        """
        a = abs(g)
        for d in self._d_pool():
            if not self.in_d(a + d):
                return d
        dens = sorted({v.denominator for _, v in a.items()})
        for d, _ in approximations(self.group, self.g0, horizon=6, extra_dens=dens):
            if self.in_d(d) and not self.in_d(a + d):
                return d
        return None

    def member(self, g: Element) -> bool:
        """Literal evaluation of the defining condition with bounded search."""
        if not self.group.contains(g):
            return False
        return self.counterexample(g) is None

    def to_json(self):
        return {"cut": self.cut.to_json(), "g0": self.g0.to_json(), "N": self.N, "g1": self.g1.to_json()}


def subgroup_from_hull_point(G: GroupDescriptor, g0: Element, N: int, samples: int = DEFAULT_SAMPLES,
                    seed: int = 0) -> DefinableSubgroup:
    if not isinstance(N, int) or isinstance(N, bool) or N <= 0:
        raise DomainError("N must be a positive integer")
    if not g0:
        raise NotApplicable("not applicable: g0 = 0 lies in G")
    G.check_hull(g0)
    if not G.contains(g0 * N):
        raise DomainError("N * g0 must lie in G")
    if G.contains(g0) or is_limit_point(G, g0):
        raise NotApplicable("not applicable: g0 lies in the closure of G")
    h = abs(g0)
    i0 = G.first_defect(h)
    cut = canonical_cut(G, ConvexCut.at(i0, inclusive=False))
    if cut.kind == "trivial":
        raise NotApplicable("construction gives the trivial subgroup: G is discrete at the defect index")
    return DefinableSubgroup(G, h, N, cut, samples, seed)


def catalog_witnesses(G: GroupDescriptor, horizon: int = 4) -> list:
    """Candidate hull points ``(v * 1_j, N)`` with v among small unit fractions."""
    out = []
    for j in G.indices(horizon):
        for den in (2, 3, 5, 7, 11):
            v = Fraction(1, den)
            if not G.component(j).contains(v):
                out.append((Element({j: v}), den))
    return out


def witness_subgroup(G: GroupDescriptor, horizon: int = 4):
    """First catalog witness for which the construction applies, or None."""
    for g0, n in catalog_witnesses(G, horizon):
        try:
            return subgroup_from_hull_point(G, g0, n)
        except NotApplicable:
            continue
    return None
