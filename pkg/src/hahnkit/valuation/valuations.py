"""Convex valuations on Hahn fields and their definability verdicts.

Every convex valuation considered here is the coarsening of v_min whose
valuation ring is ``{x : vmin(x) >= 0 mod H}`` for a convex subgroup H of
the exponent group, named by a :class:`ConvexCut`.  Its value group is G/H
and its residue field is k((H)).  ``whole`` is the trivial valuation and
``trivial`` is v_min itself.

Verdicts are three-valued.  ``yes`` and ``no`` always carry the rule that
produced them; ``unknown`` names the condition that could not be decided.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..arith import is_prime
from ..errors import DomainError
from ..hahn.field import FieldDescriptor
from ..oag import predicates as P
from ..oag.group import (
    ConvexCut,
    GroupDescriptor,
    canonical_cut,
    cut_position,
    enumerate_cuts,
    quotient,
    subgroup,
)

YES, NO, UNKNOWN = "yes", "no", "unknown"


@dataclass(frozen=True)
class Verdict:
    status: str
    rule: str

    def to_json(self):
        return {"status": self.status, "rule": self.rule}

    def __str__(self):
        return f"{self.status} ({self.rule})"


@dataclass(frozen=True)
class ValuationDescriptor:
    field: FieldDescriptor
    cut: ConvexCut

    def __post_init__(self):
        object.__setattr__(self, "cut", canonical_cut(self.field.group, self.cut))

    @property
    def group(self) -> GroupDescriptor:
        return self.field.group

    @property
    def value_group(self) -> GroupDescriptor:
        return quotient(self.group, self.cut)

    @property
    def unit_group(self) -> GroupDescriptor:
        """The convex subgroup H of exponents of units."""
        return subgroup(self.group, self.cut)

    @property
    def residue_field(self) -> FieldDescriptor:
        return FieldDescriptor(self.field.coeff, self.unit_group)

    @property
    def position(self) -> float:
        return cut_position(self.group, self.cut)

    @property
    def is_trivial(self) -> bool:
        return self.cut.kind == "whole" or self.group.is_trivial

    def coarser_or_equal(self, other: "ValuationDescriptor") -> bool:
        """``O_self`` contains ``O_other``: the unit subgroup of self is the larger one."""
        return self.position <= other.position

    def in_vk(self) -> bool:
        """Residue field real closed: real closed coefficients and divisible H."""
        return not self.field.is_rational and P.is_divisible(self.unit_group)

    def to_json(self):
        return {"cut": self.cut.to_json(), "value_group": self.value_group.to_json(),
                "residue_group": self.unit_group.to_json()}

    def __str__(self):
        if self.is_trivial:
            return "trivial valuation"
        if self.cut.kind == "trivial":
            return "v_min"
        return f"coarsening by {self.cut}"


def v0(F: FieldDescriptor) -> ValuationDescriptor:
    """Coarsest valuation whose residue field is real closed (quotient by the maximal divisible convex subgroup)."""
    return ValuationDescriptor(F, P.maximal_divisible_convex_subgroup(F.group))


def v_p(F: FieldDescriptor, p: int) -> ValuationDescriptor:
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    return ValuationDescriptor(F, P.maximal_p_divisible_convex_subgroup(F.group, p))


def is_real_closed(F: FieldDescriptor) -> bool:
    return not F.is_rational and P.is_divisible(F.group)


def classify_lr_v0(F: FieldDescriptor) -> Verdict:
    """Ring-language definability of v0 in an almost real closed field."""
    if F.is_rational:
        return Verdict(UNKNOWN, "residue field not real closed, so the v0 criterion does not apply")
    H0 = v0(F)
    if H0.is_trivial:
        return Verdict(NO, "real closed field: v0 is the trivial valuation")
    Q0 = H0.value_group
    p = P.stubborn_prime(Q0)
    if p is not None:
        return Verdict(YES, f"v0 value group has no non-trivial convex {p}-divisible subgroup")
    return Verdict(NO, "v0 value group has a non-trivial convex p-divisible subgroup for every prime p")


def _below_some_vp(v: ValuationDescriptor) -> bool:
    """Whether v <= v_p for some prime, i.e. H contains a maximal p-divisible convex subgroup."""
    G = v.group
    horizon = max(0, int(v.position) - G.start) if v.position != float("inf") else 0
    for p in P.representative_primes(G, horizon):
        if v.position <= P.maximal_p_divisible_position(G, p):
            return True
    return False


def _order_condition(v: ValuationDescriptor):
    """Sufficient conditions for ordered-ring definability read off G/H and k((H))."""
    VG = v.value_group
    if P.is_discretely_ordered(VG):
        return "value group discretely ordered"
    if P.has_limit_point_in_hull(VG):
        return "value group has a limit point in its divisible hull"
    if v.field.is_rational and v.unit_group.is_trivial:
        return "residue field Q is dense in its real closure and not real closed"
    return None


def _euclidean(F: FieldDescriptor) -> bool:
    """R((G)) with 2-divisible G: every positive element is a square, so x >= 0 is L_r-definable."""
    return not F.is_rational and P.is_p_divisible(F.group, 2)


def classify_lr(v: ValuationDescriptor) -> Verdict:
    F = v.field
    if v.is_trivial:
        return Verdict(YES, "trivial valuation (O = K)")
    if is_real_closed(F):
        return Verdict(NO, "real closed field: o-minimality leaves no non-trivial definable convex valuation")
    VG = v.value_group
    if P.is_regular(VG) and not P.is_divisible(VG):
        return Verdict(YES, "value group regular and non-divisible")
    if _euclidean(F):
        rule = _order_condition(v)
        if rule is not None:
            return Verdict(YES, f"{rule}; K is euclidean so the order is L_r-definable")
    if F.is_rational:
        return Verdict(UNKNOWN, "residue field not real closed and the value group is not regular non-divisible")
    if v.in_vk():
        if v.cut == v0(F).cut:
            return classify_lr_v0(F)
        return Verdict(NO, "v0 is the only member of V(K) that can be L_r-definable")
    if not _below_some_vp(v):
        return Verdict(NO, "v <= v_p fails for every prime p")
    return Verdict(UNKNOWN, "L_og-definability of the unit subgroup is not decided here")


def classify_lor(v: ValuationDescriptor) -> Verdict:
    F = v.field
    lr = classify_lr(v)
    if lr.status == YES:
        return Verdict(YES, f"L_r-definable: {lr.rule}")
    if is_real_closed(F):
        return Verdict(NO, "real closed field: o-minimality leaves no non-trivial definable convex valuation")
    rule = _order_condition(v)
    if rule is not None:
        return Verdict(YES, rule)
    if _euclidean(F):
        return Verdict(lr.status, f"K is euclidean so the order is L_r-definable; {lr.rule}")
    if not F.is_rational and v.in_vk():
        vv = ValuationDescriptor(F, v0(F).cut)
        if vv.cut != v.cut and classify_lor(vv).status == YES:
            return Verdict(NO, "v0 is already the L_or-definable member of V(K)")
    return Verdict(UNKNOWN, "no sufficient condition applies and none is known to be necessary")


@dataclass
class ValuationEntry:
    valuation: ValuationDescriptor
    lr: Verdict
    lor: Verdict

    def to_json(self):
        out = self.valuation.to_json()
        out.update({"name": str(self.valuation), "in_VK": self.valuation.in_vk(),
                    "lr": self.lr.to_json(), "lor": self.lor.to_json()})
        return out


@dataclass
class ClassificationReport:
    field: FieldDescriptor
    group_facts: dict
    v0: ValuationDescriptor
    vp: dict
    entries: list
    headline: Verdict = None
    notes: list = field(default_factory=list)

    def entry(self, cut: ConvexCut) -> ValuationEntry:
        cut = canonical_cut(self.field.group, cut)
        for e in self.entries:
            if e.valuation.cut == cut:
                return e
        raise KeyError(str(cut))

    def to_json(self):
        return {
            "field": self.field.to_json(),
            "group_facts": self.group_facts,
            "v0": self.v0.cut.to_json(),
            "v_p": {str(p): c.to_json() for p, c in self.vp.items()},
            "valuations": [e.to_json() for e in self.entries],
            "headline": self.headline.to_json() if self.headline else None,
            "notes": list(self.notes),
        }

    def to_text(self) -> str:
        lines = [f"field: {self.field}"]
        for k, val in self.group_facts.items():
            lines.append(f"  {k}: {val}")
        lines.append(f"v0: {self.v0.cut}")
        lines.append("v_p: " + ", ".join(f"{p} -> {c}" for p, c in self.vp.items()))
        for e in self.entries:
            tag = " [V(K)]" if e.valuation.in_vk() else ""
            lines.append(f"{e.valuation.cut}{tag}: lr {e.lr}; lor {e.lor}")
        if self.headline is not None:
            lines.append(f"admits an L_or-definable member of V(K): {self.headline}")
        for n in self.notes:
            lines.append(f"note: {n}")
        return "\n".join(lines)


def classify_field(F: FieldDescriptor, primes=None, cuts=None, horizon: int = 4) -> ClassificationReport:
    G = F.group
    if primes is None:
        primes = [p for p in P.representative_primes(G, horizon) if p <= 13] or [2]
    if cuts is None:
        cuts = enumerate_cuts(G, horizon)
    facts = {
        "dense_in_hull": P.is_dense_in_hull(G),
        "regular": P.is_regular(G),
        "densely_ordered": P.is_densely_ordered(G),
        "discretely_ordered": P.is_discretely_ordered(G),
        "divisible": P.is_divisible(G),
        "hull_immediate": P.hull_immediate(G),
        "has_limit_point_in_hull": P.has_limit_point_in_hull(G),
        "closed_in_hull": P.closed_in_hull_certificate(G).status,
        "strongly_nip": P.is_strongly_nip(G),
        "max_p_divisible": {str(p): P.maximal_p_divisible_convex_subgroup(G, p).to_json() for p in primes},
    }
    entries = []
    seen = set()
    for c in cuts:
        v = ValuationDescriptor(F, c)
        if v.cut in seen:
            continue
        seen.add(v.cut)
        entries.append(ValuationEntry(v, classify_lr(v), classify_lor(v)))
    zero = v0(F)
    report = ClassificationReport(F, facts, zero, {p: v_p(F, p).cut for p in primes}, entries)
    if F.is_rational:
        report.notes.append("rational coefficients: the field is not almost real closed; no headline")
        return report
    if is_real_closed(F):
        report.headline = Verdict("not_applicable", "real closed; no non-trivial definable convex valuation")
        return report
    lor0 = classify_lor(zero)
    if lor0.status == YES:
        report.headline = Verdict(YES, f"v0: {lor0.rule}")
    elif lor0.status == NO and P.is_p_divisible(G, 2):
        report.headline = Verdict(NO, f"v0 not L_or-definable and no other member of V(K) is: {lor0.rule}")
    else:
        members = [e for e in entries if e.valuation.in_vk()]
        finite = G.is_finite
        if finite and members and all(e.lor.status == NO for e in members):
            report.headline = Verdict(NO, "every member of V(K) is classified no")
        else:
            report.headline = Verdict(UNKNOWN, f"v0: {lor0.rule}")
    return report
