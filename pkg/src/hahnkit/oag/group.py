"""Group descriptors, tail rules and convex cuts.

A descriptor is a lexicographic sum of localized subgroups of Q over a
finite run of indices ``start..last`` or over all indices ``n >= start``.
The omega case keeps a finite prefix and reads every later component off a
:class:`TailRule`.  Indices are absolute: quotients and subgroups keep the
indices of the components they inherit, so an element keeps its meaning
when it is viewed inside a subgroup.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..arith import Q, Z, PrimeLocalization, nth_prime, prime_index
from ..errors import DomainError, MembershipError, ParseError
from .element import ZERO, Element

CONSTANT = "constant"
GROWING_ODD_PRIMES = "growing_odd_primes"
COMPLEMENT_SINGLETON = "complement_singleton"
TAIL_FAMILIES = (CONSTANT, GROWING_ODD_PRIMES, COMPLEMENT_SINGLETON)


@dataclass(frozen=True)
class TailRule:
    """Component at every index past the prefix, as a function of the index.

    ``growing_odd_primes`` puts Z[1/p_1, ..., 1/p_n] at index n and
    ``complement_singleton`` puts the group inverting every prime except
    p_n at index n, where 2 = p_0 < p_1 < ... lists the primes.
    """

    family: str
    arg: Optional[PrimeLocalization] = None

    def __post_init__(self):
        if self.family not in TAIL_FAMILIES:
            raise DomainError(f"unknown tail family {self.family!r}")
        if self.family == CONSTANT and self.arg is None:
            raise DomainError("constant tail needs a component")
        if self.family != CONSTANT and self.arg is not None:
            raise DomainError(f"{self.family} tail takes no argument")

    def component(self, n: int) -> PrimeLocalization:
        if self.family == CONSTANT:
            return self.arg
        if self.family == GROWING_ODD_PRIMES:
            return PrimeLocalization.inverting(*(nth_prime(i) for i in range(1, n + 1)))
        return PrimeLocalization.inverting_all_but(nth_prime(n))

    def p_threshold(self, p: int) -> Optional[int]:
        """Least n0 with ``component(n)`` p-divisible for every n >= n0.

        None when infinitely many components fail.  Constant rules answer 0
        meaning "every index".
        """
        if self.family == CONSTANT:
            return 0 if self.arg.inverts(p) else None
        if self.family == GROWING_ODD_PRIMES:
            return None if p == 2 else prime_index(p)
        return prime_index(p) + 1

    def eventually_divisible(self) -> bool:
        """Whether all components from some index on equal Q."""
        return self.family == CONSTANT and self.arg.is_divisible

    def every_prime_eventually_divisible(self) -> bool:
        """For each prime, all but finitely many components are p-divisible."""
        if self.family == CONSTANT:
            return self.arg.is_divisible
        return self.family == COMPLEMENT_SINGLETON

    def stubborn_prime(self) -> Optional[int]:
        """A prime p for which infinitely many components are not p-divisible."""
        if self.family == CONSTANT:
            return self.arg.non_inverted_prime()
        if self.family == GROWING_ODD_PRIMES:
            return 2
        return None

    def special_primes(self):
        return self.arg.primes if self.family == CONSTANT else ()

    def to_json(self):
        return {"family": self.family, "arg": self.arg.to_json() if self.arg is not None else None}

    @classmethod
    def from_json(cls, data) -> "TailRule":
        if not isinstance(data, dict) or "family" not in data:
            raise ParseError(f"bad tail rule: {data!r}")
        arg = data.get("arg")
        return cls(data["family"], PrimeLocalization.from_json(arg) if arg is not None else None)

    def __str__(self):
        if self.family == CONSTANT:
            return str(self.arg)
        return "A_n" if self.family == GROWING_ODD_PRIMES else "B_n"


LEX = "lex_sum"
OMEGA = "omega_sum"
TRIVIAL = "trivial"


@dataclass(frozen=True)
class GroupDescriptor:
    """A lexicographic (``lex_sum``) or omega-indexed (``omega_sum``) Hahn sum.

    ``components`` holds every component of a finite sum, or the prefix of
    an omega sum.  The prefix is canonicalized by dropping trailing entries
    that the tail rule would produce anyway, so structural equality is group
    equality within this class.
    """

    kind: str
    components: tuple = ()
    tail: Optional[TailRule] = None
    start: int = 0

    def __post_init__(self):
        comps = tuple(self.components)
        for c in comps:
            if not isinstance(c, PrimeLocalization):
                raise DomainError(f"component must be a PrimeLocalization, got {c!r}")
        if not isinstance(self.start, int) or self.start < 0:
            raise DomainError("start index must be a non-negative integer")
        if self.kind == TRIVIAL:
            if comps or self.tail is not None:
                raise DomainError("the trivial group has no components")
            object.__setattr__(self, "start", 0)
        elif self.kind == LEX:
            if not comps:
                raise DomainError("lex_sum needs at least one component (use the trivial descriptor)")
            if self.tail is not None:
                raise DomainError("lex_sum takes no tail rule")
        elif self.kind == OMEGA:
            if self.tail is None:
                raise DomainError("omega_sum needs a tail rule")
            while comps and comps[-1] == self.tail.component(self.start + len(comps) - 1):
                comps = comps[:-1]
        else:
            raise DomainError(f"unknown descriptor kind {self.kind!r}")
        object.__setattr__(self, "components", comps)

    # constructors -----------------------------------------------------
    @classmethod
    def trivial(cls) -> "GroupDescriptor":
        return cls(TRIVIAL)

    @classmethod
    def lex(cls, *components: PrimeLocalization, start: int = 0) -> "GroupDescriptor":
        return cls(LEX, components, start=start)

    @classmethod
    def omega(cls, tail: TailRule, prefix=(), start: int = 0) -> "GroupDescriptor":
        return cls(OMEGA, tuple(prefix), tail, start)

    # index set --------------------------------------------------------
    @property
    def is_trivial(self) -> bool:
        return self.kind == TRIVIAL

    @property
    def is_finite(self) -> bool:
        return self.kind != OMEGA

    @property
    def first_index(self) -> Optional[int]:
        return None if self.is_trivial else self.start

    @property
    def last_index(self) -> Optional[int]:
        """Last index of a finite sum; None for omega sums and the trivial group."""
        if self.kind != LEX:
            return None
        return self.start + len(self.components) - 1

    @property
    def tail_start(self) -> Optional[int]:
        return self.start + len(self.components) if self.kind == OMEGA else None

    def has_index(self, i: int) -> bool:
        if self.is_trivial:
            return False
        if i < self.start:
            return False
        return self.kind == OMEGA or i <= self.last_index

    def component(self, i: int) -> PrimeLocalization:
        if not self.has_index(i):
            raise DomainError(f"index {i} is outside the index set of {self}")
        k = i - self.start
        if k < len(self.components):
            return self.components[k]
        return self.tail.component(i)

    def indices(self, horizon: int = 8):
        """Indices in order; omega sums are cut off after ``horizon`` entries past the prefix."""
        if self.is_trivial:
            return range(0)
        if self.kind == LEX:
            return range(self.start, self.last_index + 1)
        return range(self.start, self.tail_start + horizon)

    def special_primes(self):
        """Primes named explicitly by some component or the tail rule."""
        out = set()
        for c in self.components:
            out.update(c.primes)
        if self.tail is not None:
            out.update(self.tail.special_primes())
        return sorted(out)

    # elements ---------------------------------------------------------
    def contains(self, h: Element) -> bool:
        """Every coordinate lies in its component (and at an existing index)."""
        return all(self.has_index(i) and self.component(i).contains(v) for i, v in h.items())

    def first_defect(self, h: Element) -> Optional[int]:
        """Least index where ``h`` leaves its component, None when ``h`` is in G."""
        for i, v in h.items():
            if not self.has_index(i):
                raise DomainError(f"index {i} is outside the index set of {self}")
            if not self.component(i).contains(v):
                return i
        return None

    def check_hull(self, h: Element) -> Element:
        for i in h.support:
            if not self.has_index(i):
                raise DomainError(f"index {i} is outside the index set of {self}")
        return h

    def check(self, a: Element) -> Element:
        if not self.contains(a):
            raise MembershipError(f"{a!r} is not an element of {self}")
        return a

    def element(self, values, start: Optional[int] = None) -> Element:
        """Validated element from a dense coordinate list."""
        return self.check(Element.from_values(values, self.start if start is None else start))

    # encoding ---------------------------------------------------------
    def to_json(self):
        if self.is_trivial:
            return {"kind": TRIVIAL}
        out = {"kind": self.kind}
        if self.kind == LEX:
            out["components"] = [c.to_json() for c in self.components]
        else:
            out["prefix"] = [c.to_json() for c in self.components]
            out["tail"] = self.tail.to_json()
        if self.start:
            out["start"] = self.start
        return out

    @classmethod
    def from_json(cls, data) -> "GroupDescriptor":
        if not isinstance(data, dict) or "kind" not in data:
            raise ParseError(f"bad group descriptor: {data!r}")
        kind = data["kind"]
        start = data.get("start", 0)
        if not isinstance(start, int) or isinstance(start, bool):
            raise ParseError("start must be an integer")
        if kind == TRIVIAL:
            return cls.trivial()
        if kind == LEX:
            comps = data.get("components")
            if not isinstance(comps, list):
                raise ParseError("lex_sum needs a 'components' list")
            return cls.lex(*(PrimeLocalization.from_json(c) for c in comps), start=start)
        if kind == OMEGA:
            prefix = data.get("prefix", [])
            if not isinstance(prefix, list):
                raise ParseError("omega_sum 'prefix' must be a list")
            if "tail" not in data:
                raise ParseError("omega_sum needs a 'tail'")
            return cls.omega(TailRule.from_json(data["tail"]),
                             [PrimeLocalization.from_json(c) for c in prefix], start)
        raise ParseError(f"unknown descriptor kind {kind!r}")

    def __str__(self):
        if self.is_trivial:
            return "0"
        parts = [str(c) for c in self.components]
        if self.kind == OMEGA:
            parts.append(f"{self.tail} (n >= {self.tail_start})")
        body = " ⊕ ".join(parts)
        return body if not self.start else f"{body} [from index {self.start}]"


# ---------------------------------------------------------------------------
# group operations


def g_add(G: GroupDescriptor, a: Element, b: Element) -> Element:
    return G.check(a) + G.check(b)


def g_neg(G: GroupDescriptor, a: Element) -> Element:
    return -G.check(a)


def g_cmp(G: GroupDescriptor, a: Element, b: Element) -> str:
    c = G.check_hull(a).compare(G.check_hull(b))
    return ("less", "equal", "greater")[c + 1]


def nat_val(G: GroupDescriptor, a: Element) -> int:
    return G.check_hull(a).nat_val


def in_group(G: GroupDescriptor, h: Element) -> bool:
    return G.contains(h)


def g_divide(G: GroupDescriptor, a: Element, n: int) -> Optional[Element]:
    if not isinstance(n, int) or isinstance(n, bool) or n <= 0:
        raise DomainError("divisor must be a positive integer")
    r = G.check(a) / n
    return r if G.contains(r) else None


# ---------------------------------------------------------------------------
# convex cuts


@dataclass(frozen=True)
class ConvexCut:
    """A convex subgroup named by a final segment of the index set.

    ``at`` with ``inclusive=True`` is the subgroup of elements whose natural
    valuation is at least ``index``; exclusive means strictly greater.
    ``whole`` is G itself and ``trivial`` is {0}.  Canonical cuts (as
    returned by :func:`canonical_cut`) are always inclusive.
    """

    kind: str
    index: Optional[int] = None
    inclusive: bool = True

    def __post_init__(self):
        if self.kind not in ("whole", "trivial", "at"):
            raise DomainError(f"unknown cut kind {self.kind!r}")
        if self.kind == "at" and not isinstance(self.index, int):
            raise DomainError("an 'at' cut needs an integer index")
        if self.kind != "at" and self.index is not None:
            raise DomainError(f"a '{self.kind}' cut takes no index")

    @classmethod
    def whole(cls) -> "ConvexCut":
        return cls("whole")

    @classmethod
    def trivial(cls) -> "ConvexCut":
        return cls("trivial")

    @classmethod
    def at(cls, index: int, inclusive: bool = True) -> "ConvexCut":
        return cls("at", index, inclusive)

    def to_json(self):
        if self.kind != "at":
            return {"kind": self.kind}
        return {"kind": "at", "index": self.index, "inclusive": self.inclusive}

    @classmethod
    def from_json(cls, data) -> "ConvexCut":
        if isinstance(data, str):
            return parse_cut(data)
        if not isinstance(data, dict) or "kind" not in data:
            raise ParseError(f"bad cut: {data!r}")
        if data["kind"] != "at":
            return cls(data["kind"])
        return cls.at(data.get("index"), bool(data.get("inclusive", True)))

    def __str__(self):
        if self.kind != "at":
            return self.kind
        return f"at({self.index})" if self.inclusive else f"at({self.index}, exclusive)"


def parse_cut(text: str) -> ConvexCut:
    """``whole``, ``trivial``, ``at(i)`` or ``at(i, exclusive)``."""
    s = text.strip()
    if s in ("whole", "trivial"):
        return ConvexCut(s)
    if s.startswith("at(") and s.endswith(")"):
        parts = [p.strip() for p in s[3:-1].split(",")]
        try:
            index = int(parts[0])
        except ValueError:
            raise ParseError(f"bad cut index in {text!r}") from None
        if len(parts) == 1:
            return ConvexCut.at(index)
        if len(parts) == 2 and parts[1] in ("inclusive", "exclusive"):
            return ConvexCut.at(index, parts[1] == "inclusive")
    raise ParseError(f"bad cut: {text!r}")


def canonical_cut(G: GroupDescriptor, cut: ConvexCut) -> ConvexCut:
    """Inclusive normal form: ``whole``, ``trivial`` or ``at(i)`` with first < i <= last."""
    if G.is_trivial:
        if cut.kind == "at":
            raise DomainError("the trivial group has no indices")
        return ConvexCut.trivial()
    if cut.kind != "at":
        return cut
    i = cut.index
    if not G.has_index(i):
        raise DomainError(f"cut index {i} is outside the index set of {G}")
    if not cut.inclusive:
        if G.is_finite and i == G.last_index:
            return ConvexCut.trivial()
        i += 1
    if i == G.start:
        return ConvexCut.whole()
    return ConvexCut.at(i)


def cut_position(G: GroupDescriptor, cut: ConvexCut) -> float:
    """First index of the final segment; +inf for the trivial subgroup.

    Larger positions mean smaller subgroups.
    """
    c = canonical_cut(G, cut)
    if c.kind == "trivial":
        return float("inf")
    if c.kind == "whole":
        return G.start
    return c.index


def cut_from_position(G: GroupDescriptor, position) -> ConvexCut:
    """Inverse of :func:`cut_position`; positions past the last index give ``trivial``."""
    if G.is_trivial or position == float("inf"):
        return ConvexCut.trivial()
    if position <= G.start:
        return ConvexCut.whole()
    if G.is_finite and position > G.last_index:
        return ConvexCut.trivial()
    return ConvexCut.at(int(position))


def convex_member(G: GroupDescriptor, cut: ConvexCut, a: Element) -> bool:
    if not a:
        return True
    return G.check_hull(a).nat_val >= cut_position(G, cut)


def subgroup(G: GroupDescriptor, cut: ConvexCut) -> GroupDescriptor:
    """The convex subgroup itself, indexed by its final segment."""
    c = canonical_cut(G, cut)
    if c.kind == "whole":
        return G
    if c.kind == "trivial":
        return GroupDescriptor.trivial()
    k = c.index - G.start
    if G.kind == LEX:
        return GroupDescriptor.lex(*G.components[k:], start=c.index)
    return GroupDescriptor.omega(G.tail, G.components[k:], c.index)


def quotient(G: GroupDescriptor, cut: ConvexCut) -> GroupDescriptor:
    """G modulo the convex subgroup: the initial segment of components."""
    c = canonical_cut(G, cut)
    if c.kind == "whole":
        return GroupDescriptor.trivial()
    if c.kind == "trivial":
        return G
    return GroupDescriptor.lex(*(G.component(i) for i in range(G.start, c.index)), start=G.start)


def project(G: GroupDescriptor, cut: ConvexCut, a: Element) -> Element:
    """Image of ``a`` in the quotient by ``cut``."""
    pos = cut_position(G, cut)
    return a.truncate(pos) if pos != float("inf") else a


def enumerate_cuts(G: GroupDescriptor, horizon: int = 6):
    """Canonical cuts from the whole group down to {0}; omega sums are cut off at ``horizon``."""
    if G.is_trivial:
        return [ConvexCut.trivial()]
    out = [ConvexCut.whole()]
    out.extend(ConvexCut.at(i) for i in G.indices(horizon) if i > G.start)
    out.append(ConvexCut.trivial())
    return out


__all__ = [
    "TailRule", "GroupDescriptor", "ConvexCut", "ZERO", "Z", "Q",
    "g_add", "g_neg", "g_cmp", "nat_val", "in_group", "g_divide",
    "canonical_cut", "cut_position", "cut_from_position", "convex_member",
    "subgroup", "quotient", "project", "enumerate_cuts", "parse_cut",
]
