"""Structural predicates decided in closed form for the descriptor class.

For a lexicographic sum of subgroups of Q everything reduces to questions
about which primes each component inverts.  Omega sums add the tail rule,
whose behaviour for each prime is known exactly (see
:meth:`TailRule.p_threshold`).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..arith import Z, is_prime, nth_prime
from ..errors import DomainError
from .element import Element
from .group import LEX, OMEGA, ConvexCut, GroupDescriptor, cut_from_position


def _require_prime(p: int):
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")


def is_densely_ordered(G: GroupDescriptor) -> bool:
    if G.is_trivial or G.kind == OMEGA:
        return True
    return G.components[-1].is_dense


def is_discretely_ordered(G: GroupDescriptor) -> bool:
    """A least positive element exists iff the last component is Z."""
    return G.kind == LEX and G.components[-1] == Z


def is_regular(G: GroupDescriptor) -> bool:
    if G.is_trivial:
        return True
    if G.kind == LEX:
        return len(G.components) == 1 or all(c.is_divisible for c in G.components[:-1])
    return all(c.is_divisible for c in G.components) and G.tail.eventually_divisible()


def is_dense_in_hull(G: GroupDescriptor) -> bool:
    return is_regular(G) and is_densely_ordered(G)


def is_p_divisible(G: GroupDescriptor, p: int) -> bool:
    _require_prime(p)
    if not all(c.inverts(p) for c in G.components):
        return False
    if G.kind != OMEGA:
        return True
    t = G.tail.p_threshold(p)
    return t is not None and t <= G.tail_start


def is_divisible(G: GroupDescriptor) -> bool:
    if not all(c.is_divisible for c in G.components):
        return False
    return G.kind != OMEGA or G.tail.eventually_divisible()


def hull_immediate(G: GroupDescriptor) -> bool:
    """G inside its divisible hull is immediate iff each component is already Q."""
    return is_divisible(G)


def maximal_p_divisible_position(G: GroupDescriptor, p: int) -> float:
    """First index of the largest p-divisible final segment (+inf if none)."""
    _require_prime(p)
    if G.is_trivial:
        return float("inf")
    bad = [G.start + k for k, c in enumerate(G.components) if not c.inverts(p)]
    if G.kind == LEX:
        return bad[-1] + 1 if bad else G.start
    t = G.tail.p_threshold(p)
    if t is None:
        return float("inf")
    pos = max([G.start] + [b + 1 for b in bad])
    if t > G.tail_start:
        pos = max(pos, t)
    return pos


def maximal_divisible_position(G: GroupDescriptor) -> float:
    if G.is_trivial:
        return float("inf")
    bad = [G.start + k for k, c in enumerate(G.components) if not c.is_divisible]
    if G.kind == OMEGA and not G.tail.eventually_divisible():
        return float("inf")
    return bad[-1] + 1 if bad else G.start


def maximal_p_divisible_convex_subgroup(G: GroupDescriptor, p: int) -> ConvexCut:
    return cut_from_position(G, maximal_p_divisible_position(G, p))


def maximal_divisible_convex_subgroup(G: GroupDescriptor) -> ConvexCut:
    return cut_from_position(G, maximal_divisible_position(G))


def stubborn_prime(G: GroupDescriptor) -> Optional[int]:
    """A prime p such that G has no non-trivial p-divisible convex subgroup, if any."""
    if G.is_trivial:
        return None
    if G.kind == LEX:
        return G.components[-1].non_inverted_prime()
    return G.tail.stubborn_prime()


def representative_primes(G: GroupDescriptor, horizon: int = 0) -> list:
    """Finite set of primes on which every prime-quantified question about G is decided.

    Contains every prime named by a component, the primes p_0..p_H for
    indices H reaching ``horizon`` past the prefix, and one further prime
    that stands in for all the rest (those behave identically below the
    horizon).
    """
    reach = (G.start + len(G.components) + horizon + 2) if not G.is_trivial else 2
    out = set(G.special_primes())
    out.update(nth_prime(i) for i in range(reach + 1))
    generic = nth_prime(reach + 1)
    while generic in out:
        generic += 1
        while not is_prime(generic):
            generic += 1
    out.add(generic)
    return sorted(out)


def is_strongly_nip(G: GroupDescriptor) -> bool:
    """Both finiteness conditions on the archimedean components.

    For subgroups of Q the index [L : pL] is 1 or p, so the condition on
    infinite indices always holds; only the count of non-p-divisible
    components can fail, and only for omega sums.
    """
    if G.kind != OMEGA:
        return True
    return G.tail.every_prime_eventually_divisible()


# ---------------------------------------------------------------------------
# hull points


def is_limit_point(G: GroupDescriptor, h: Element) -> bool:
    """h lies outside G but every neighbourhood of h meets G.

    Coordinates before the first defect can be matched exactly; at the
    defect G can approach h only if nothing follows it (later indices would
    isolate the defect coordinate) and the component there is dense.
    """
    i0 = G.first_defect(h)
    if i0 is None:
        return False
    return G.kind == LEX and i0 == G.last_index and G.components[-1].is_dense


def in_closure(G: GroupDescriptor, h: Element) -> bool:
    return G.contains(h) or is_limit_point(G, h)


def has_limit_point_in_hull(G: GroupDescriptor) -> bool:
    """Some point of div G outside G is a limit of G."""
    if G.kind != LEX:
        return False
    last = G.components[-1]
    return last.is_dense and not last.is_divisible


@dataclass
class ClosednessCertificate:
    """``status`` is ``yes`` or ``unknown``.

    For ``yes``, :meth:`cut_for` names a non-trivial p-divisible convex
    subgroup for any prime, and ``cuts`` lists them on a representative
    prime set.
    """

    status: str
    reason: str
    group: GroupDescriptor
    cuts: dict = field(default_factory=dict)

    def cut_for(self, p: int) -> ConvexCut:
        return maximal_p_divisible_convex_subgroup(self.group, p)

    def to_json(self):
        return {
            "status": self.status,
            "reason": self.reason,
            "cuts": {str(p): c.to_json() for p, c in self.cuts.items()},
        }


def closed_in_hull_certificate(G: GroupDescriptor) -> ClosednessCertificate:
    if G.is_trivial or is_divisible(G):
        return ClosednessCertificate("yes", "G equals its divisible hull", G,
                                     {p: ConvexCut.whole() if not G.is_trivial else ConvexCut.trivial()
                                      for p in representative_primes(G)})
    if G.kind == LEX:
        ok = G.components[-1].is_divisible
        general = "the last component is Q"
    else:
        ok = G.tail.every_prime_eventually_divisible()
        general = "every prime divides all but finitely many components"
    p_bad = stubborn_prime(G)
    if not ok:
        return ClosednessCertificate(
            "unknown", f"no non-trivial {p_bad}-divisible convex subgroup; the criterion is only sufficient", G)
    cuts = {p: maximal_p_divisible_convex_subgroup(G, p) for p in representative_primes(G)}
    return ClosednessCertificate("yes", general, G, cuts)


__all__ = [
    "is_densely_ordered", "is_discretely_ordered", "is_regular", "is_dense_in_hull",
    "is_p_divisible", "is_divisible", "hull_immediate",
    "maximal_p_divisible_convex_subgroup", "maximal_divisible_convex_subgroup",
    "maximal_p_divisible_position", "maximal_divisible_position",
    "stubborn_prime", "representative_primes", "is_strongly_nip",
    "is_limit_point", "in_closure", "has_limit_point_in_hull",
    "ClosednessCertificate", "closed_in_hull_certificate",
]
