"""Built-in catalog of named groups and fields with their expected properties.

Each entry pairs a descriptor with expected values.  Keys are predicate
names, optionally with an argument after a colon:

* groups: ``regular``, ``p_divisible:3``, ``max_p_divisible:3`` (a cut),
  ``max_divisible``, ``closed_in_hull``, ``limit_point:(0,1/3)``,
  ``member:1/2`` and the other flags of :mod:`hahnkit.oag.predicates`;
* fields: ``headline``, ``v0``, ``v_p:3``, ``lr:<cut>`` and ``lor:<cut>``,
  where the cut may also be ``v0``.
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from ..hahn.field import FieldDescriptor
from ..hahn.text import parse_element
from ..oag import predicates as P
from ..oag.group import ConvexCut, GroupDescriptor, canonical_cut, parse_cut
from ..valuation.valuations import ValuationDescriptor, classify_field, classify_lor, classify_lr, v0, v_p

_GROUP_FLAGS = {
    "densely_ordered": P.is_densely_ordered,
    "discretely_ordered": P.is_discretely_ordered,
    "regular": P.is_regular,
    "dense_in_hull": P.is_dense_in_hull,
    "divisible": P.is_divisible,
    "hull_immediate": P.hull_immediate,
    "strongly_nip": P.is_strongly_nip,
    "has_limit_point_in_hull": P.has_limit_point_in_hull,
}


@dataclass
class CorpusEntry:
    name: str
    kind: str  # "group" or "field"
    descriptor: object
    expected: dict

    @property
    def group(self) -> GroupDescriptor:
        return self.descriptor if self.kind == "group" else self.descriptor.group


@dataclass
class CorpusCheck:
    entry: str
    key: str
    expected: object
    actual: object
    provenance: str
    cite: str
    source: str = ""

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def to_json(self):
        return {"entry": self.entry, "key": self.key, "expected": self.expected,
                "actual": self.actual, "passed": self.passed, "provenance": self.provenance,
                "source": self.source}


@lru_cache(maxsize=1)
def _raw() -> dict:
    text = resources.files(__package__).joinpath("data/corpus.json").read_text(encoding="utf-8")
    return json.loads(text)


def load_corpus() -> list:
    data = _raw()
    out = [CorpusEntry(g["name"], "group", GroupDescriptor.from_json(g["descriptor"]), g["expected"])
           for g in data["groups"]]
    out += [CorpusEntry(f["name"], "field", FieldDescriptor.from_json(f["descriptor"]), f["expected"])
            for f in data["fields"]]
    return out


def corpus_groups() -> dict:
    return {e.name: e.descriptor for e in load_corpus() if e.kind == "group"}


def corpus_fields() -> dict:
    return {e.name: e.descriptor for e in load_corpus() if e.kind == "field"}


def get(name: str):
    for e in load_corpus():
        if e.name == name:
            return e.descriptor
    raise KeyError(name)


def _cut_str(G: GroupDescriptor, cut: ConvexCut) -> str:
    return str(canonical_cut(G, cut))


def evaluate_group(G: GroupDescriptor, key: str):
    name, _, arg = key.partition(":")
    if name in _GROUP_FLAGS:
        return _GROUP_FLAGS[name](G)
    if name == "p_divisible":
        return P.is_p_divisible(G, int(arg))
    if name == "max_p_divisible":
        return _cut_str(G, P.maximal_p_divisible_convex_subgroup(G, int(arg)))
    if name == "max_divisible":
        return _cut_str(G, P.maximal_divisible_convex_subgroup(G))
    if name == "closed_in_hull":
        return P.closed_in_hull_certificate(G).status
    if name == "limit_point":
        return P.is_limit_point(G, parse_element(arg, G))
    if name == "member":
        return G.contains(parse_element(arg, G))
    raise KeyError(f"unknown group key {key!r}")


def evaluate_field(F: FieldDescriptor, key: str, report=None):
    name, _, arg = key.partition(":")
    if name == "headline":
        report = report or classify_field(F)
        return report.headline.status if report.headline else None
    if name == "v0":
        return _cut_str(F.group, v0(F).cut)
    if name == "v_p":
        return _cut_str(F.group, v_p(F, int(arg)).cut)
    if name in ("lr", "lor"):
        cut = v0(F).cut if arg == "v0" else parse_cut(arg)
        v = ValuationDescriptor(F, cut)
        return (classify_lr if name == "lr" else classify_lor)(v).status
    raise KeyError(f"unknown field key {key!r}")


@dataclass
class CorpusReport:
    checks: list
    seconds: float

    @property
    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self):
        return {"ok": self.ok, "seconds": round(self.seconds, 3),
                "checks": [c.to_json() for c in self.checks]}

    def to_text(self) -> str:
        width = max((len(c.entry) for c in self.checks), default=0)
        lines = []
        for c in self.checks:
            mark = "pass" if c.passed else "FAIL"
            line = f"{mark}  {c.entry:<{width}}  {c.key} = {c.expected!r}"
            if not c.passed:
                line += f" (got {c.actual!r})"
            lines.append(line)
        lines.append(f"{len(self.checks) - len(self.failures)}/{len(self.checks)} passed in {self.seconds:.2f}s")
        return "\n".join(lines)


def sources() -> dict:
    """Map from the tags in the data file to source names (literature, derived, trivial)."""
    return dict(_raw()["sources"])


def run_corpus(source=None) -> CorpusReport:
    """Evaluate every expectation; ``source`` (e.g. ``"literature"``) restricts the run to one kind."""
    names = sources()
    if source is not None and source not in names.values():
        raise KeyError(f"unknown source {source!r}; expected one of {sorted(names.values())}")
    t0 = time.perf_counter()
    checks = []
    for e in load_corpus():
        report = None
        for key, exp in e.expected.items():
            kind = names[exp["provenance"]]
            if source and kind != source:
                continue
            if e.kind == "group":
                actual = evaluate_group(e.descriptor, key)
            else:
                if key == "headline" and report is None:
                    report = classify_field(e.descriptor)
                actual = evaluate_field(e.descriptor, key, report)
            checks.append(CorpusCheck(e.name, key, exp["value"], actual, exp["provenance"],
                                      exp.get("cite", ""), kind))
    return CorpusReport(checks, time.perf_counter() - t0)


__all__ = ["CorpusEntry", "CorpusCheck", "CorpusReport", "load_corpus", "corpus_groups",
           "corpus_fields", "get", "evaluate_group", "evaluate_field", "run_corpus", "sources"]
