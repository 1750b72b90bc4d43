import pytest

from hahnkit.corpus import corpus_fields, corpus_groups, evaluate_group, get, load_corpus, run_corpus, sources
from hahnkit.oag import predicates as P

REQUIRED_GROUPS = {"A dyadics", "Q⊕A", "Z⊕Z", "A⊕A", "A_n omega-sum", "G₁", "G₂", "Q", "Z", "Q⊕Q"}
REQUIRED_FIELDS = {"Q((Z))", "Q((Z⊕Z))", "Q((A⊕A))", "RC((G₁))", "RC((G₂))", "RC((Q))"}


def test_catalog_contents():
    assert REQUIRED_GROUPS <= set(corpus_groups())
    assert REQUIRED_FIELDS <= set(corpus_fields())
    assert len(corpus_groups()) >= 10


def test_every_expectation_is_tagged():
    for e in load_corpus():
        assert e.expected, e.name
        for key, exp in e.expected.items():
            assert exp["provenance"] in sources(), (e.name, key)
            assert "value" in exp


def test_full_run_passes_quickly():
    rep = run_corpus()
    assert rep.ok, rep.to_text()
    assert rep.seconds < 10
    assert len(rep.checks) >= 60


def test_literature_values_are_reproduced():
    rep = run_corpus("literature")
    assert rep.checks and rep.ok
    assert all(c.source == "literature" for c in rep.checks)
    names = {c.entry for c in rep.checks}
    assert {"A dyadics", "Z⊕Z", "A⊕A", "G₁", "G₂", "RC((G₁))", "RC((G₂))"} <= names


def test_report_formats():
    rep = run_corpus("trivial")
    d = rep.to_json()
    assert d["ok"] and len(d["checks"]) == len(rep.checks)
    assert "pass" in rep.to_text().lower()


def test_headline_entry():
    rep = run_corpus()
    hits = [c for c in rep.checks if c.entry == "RC((G₂))" and c.key == "headline"]
    assert hits and hits[0].actual == "no"


def test_lookup():
    G = get("G₂")
    assert P.is_strongly_nip(G)
    with pytest.raises(KeyError):
        get("no such structure")


def test_unknown_key_is_rejected():
    with pytest.raises(KeyError):
        evaluate_group(get("Z"), "no_such_flag")


def test_source_names():
    assert sorted(sources().values()) == ["derived", "literature", "trivial"]
    with pytest.raises(KeyError):
        run_corpus("hearsay")
