"""Shared fixtures and hypothesis strategies."""
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from hahnkit.arith import Q, Z, PrimeLocalization
from hahnkit.corpus import corpus_fields, corpus_groups
from hahnkit.hahn import FieldDescriptor, Series, parse_series
from hahnkit.oag import Element, GroupDescriptor, TailRule
from hahnkit.oag.sampling import small_denominators

settings.register_profile("default", deadline=None, max_examples=100,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

A = PrimeLocalization.inverting(2)
ZZ = GroupDescriptor.lex(Z, Z)
AA = GroupDescriptor.lex(A, A)
QA = GroupDescriptor.lex(Q, A)
QQ = GroupDescriptor.lex(Q, Q)
ZG = GroupDescriptor.lex(Z)
QG = GroupDescriptor.lex(Q)
AG = GroupDescriptor.lex(A)
G1 = GroupDescriptor.lex(PrimeLocalization.inverting_all_but(2))
G2 = GroupDescriptor.omega(TailRule("complement_singleton"), start=1)
EX_GROWING = GroupDescriptor.omega(TailRule("growing_odd_primes"), start=1)

QZ = FieldDescriptor.rational(ZG)
QZZ = FieldDescriptor.rational(ZZ)
QAA = FieldDescriptor.rational(AA)


def series(text, F):
    return parse_series(text, F.group)


def coordinates(L, size=12):
    dens = small_denominators(L, 24)
    return st.builds(lambda n, d: Fraction(n, d), st.integers(-size, size), st.sampled_from(dens))


@st.composite
def elements(draw, G, horizon=3, max_terms=3):
    idx = list(G.indices(horizon))
    if not idx:
        return Element()
    chosen = draw(st.lists(st.sampled_from(idx), max_size=max_terms, unique=True))
    return Element({i: draw(coordinates(G.component(i))) for i in chosen})


@st.composite
def nonzero_elements(draw, G, **kw):
    e = draw(elements(G, **kw))
    if not e:
        i = G.first_index
        e = Element({i: 1})
    return e


@st.composite
def hull_elements(draw, G, horizon=3):
    idx = list(G.indices(horizon))
    chosen = draw(st.lists(st.sampled_from(idx), min_size=1, max_size=3, unique=True))
    return Element({i: Fraction(draw(st.integers(-9, 9).filter(bool)), draw(st.integers(1, 12)))
                    for i in chosen})


@st.composite
def series_over(draw, G, max_terms=4, horizon=2, size=6):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        e = draw(elements(G, horizon=horizon, max_terms=2))
        terms[e] = Fraction(draw(st.integers(-size, size)), draw(st.integers(1, 4)))
    return Series(terms)


@st.composite
def nonzero_series(draw, G, **kw):
    s = draw(series_over(G, **kw))
    return s if s else Series.constant(1)


@pytest.fixture(scope="session")
def all_groups():
    return corpus_groups()


@pytest.fixture(scope="session")
def all_fields():
    return corpus_fields()
