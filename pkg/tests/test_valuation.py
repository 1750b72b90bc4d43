from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import AA, EX_GROWING, G1, G2, QA, QAA, QG, QQ, QZ, QZZ, ZG, ZZ, series, series_over
from hahnkit.errors import DomainError
from hahnkit.hahn import FieldDescriptor, Series, parse_element, ring_member, s_mul, vmin
from hahnkit.oag import ConvexCut, canonical_cut
from hahnkit.oag import predicates as P
from hahnkit.valuation import (
    NO,
    YES,
    MonomialCut,
    RealAlgebraicCut,
    ResidueCut,
    ValuationDescriptor,
    alg_cmp,
    classify_field,
    classify_lor,
    classify_lr,
    classify_lr_v0,
    cut_ideal_member,
    cut_ring_falsify,
    cut_ring_member,
    square_leading_test,
    target_cut,
    v0,
    v_p,
)

RC = FieldDescriptor.real_closed
RC_GROUPS = [G1, G2, EX_GROWING, ZZ, AA, QA, QQ, QG, ZG]


def mono(g0, G, N):
    return MonomialCut(parse_element(g0, G), N)


# --- v0 and v_p --------------------------------------------------------------

def test_v0_examples():
    assert v0(RC(G2)).cut == ConvexCut.trivial()
    assert v0(RC(QA)).cut == ConvexCut.trivial()
    assert v0(RC(QG)).cut == ConvexCut.whole() and v0(RC(QG)).is_trivial


def test_v_p_examples():
    K = RC(G2)
    for i, p in [(1, 3), (2, 5), (3, 7)]:
        assert canonical_cut(G2, v_p(K, p).cut) == canonical_cut(G2, ConvexCut.at(i + 1))
    assert v_p(K, 2).is_trivial
    assert v_p(QZ, 2).cut == ConvexCut.trivial()
    with pytest.raises(DomainError):
        v_p(QZ, 9)


def test_valuation_descriptor_parts():
    v = ValuationDescriptor(QZZ, ConvexCut.at(1))
    assert v.value_group.is_finite and v.value_group.last_index == 0
    assert v.residue_field.group.first_index == 1


# --- verdicts ----------------------------------------------------------------

def test_lr_v0_examples():
    assert classify_lr_v0(RC(G1)).status == YES
    assert classify_lr_v0(RC(G2)).status == NO
    assert classify_lr_v0(RC(ZZ)).status == YES
    assert classify_lr_v0(QZ).status == "unknown"


def test_lr_examples():
    assert classify_lr(ValuationDescriptor(FieldDescriptor.rational(G1), ConvexCut.trivial())).status == YES
    assert classify_lr(ValuationDescriptor(RC(G2), ConvexCut.trivial())).status == NO
    assert classify_lr(ValuationDescriptor(RC(QQ), ConvexCut.at(1))).status == NO


def test_lor_examples():
    assert classify_lor(ValuationDescriptor(QZ, ConvexCut.trivial())).status == YES
    assert classify_lor(ValuationDescriptor(QAA, ConvexCut.trivial())).status == YES
    assert classify_lor(ValuationDescriptor(RC(G2), ConvexCut.trivial())).status == NO


def test_verdicts_carry_rules():
    for G in RC_GROUPS:
        for K in (RC(G), FieldDescriptor.rational(G)):
            for e in classify_field(K).entries:
                assert e.lr.rule and e.lor.rule


def test_headlines():
    assert classify_field(RC(G1)).headline.status == YES
    assert classify_field(RC(G2)).headline.status == NO
    rep = classify_field(RC(QG))
    assert rep.headline.status == "not_applicable"
    assert all(e.lor.status in (YES, NO) for e in rep.entries)
    assert all(e.lor.status == NO for e in rep.entries if not e.valuation.is_trivial)


def test_report_text_and_json():
    rep = classify_field(RC(G2))
    assert "v0:" in rep.to_text()
    assert rep.to_json()["headline"]["status"] == NO


# --- coherence ---------------------------------------------------------------

@pytest.mark.parametrize("G", RC_GROUPS)
def test_v0_is_coarsest_in_vk(G):
    K = RC(G)
    zero = v0(K)
    for e in classify_field(K).entries:
        if e.valuation.in_vk():
            assert e.valuation.position >= zero.position


@pytest.mark.parametrize("G", RC_GROUPS)
def test_order_conditions_force_ring_definability(G):
    K = RC(G)
    Q0 = v0(K).value_group
    if not v0(K).is_trivial and (P.is_discretely_ordered(Q0) or P.has_limit_point_in_hull(Q0)):
        assert classify_lr_v0(K).status == YES


@pytest.mark.parametrize("G", RC_GROUPS)
def test_at_most_one_ordered_definable_member(G):
    rep = classify_field(RC(G))
    hits = [e for e in rep.entries if e.valuation.in_vk() and not e.valuation.is_trivial and e.lor.status == YES]
    assert len(hits) <= 1


@pytest.mark.parametrize("G", [g for g in RC_GROUPS if P.is_p_divisible(g, 2)])
def test_ordered_definable_implies_ring_definable(G):
    for e in classify_field(RC(G)).entries:
        if e.lor.status == YES:
            assert e.lr.status == YES


# --- ring-defining constructions ---------------------------------------------

def test_discrete_case_examples():
    pt = mono("(0,1/2)", ZZ, 2)
    assert not cut_ring_member(QZZ, pt, series("t^(0,-1)", QZZ), case=1)
    assert cut_ring_member(QZZ, pt, series("5 + t^(1,2)", QZZ), case=1)
    w = cut_ring_falsify(QZZ, pt, series("t^(0,-1)", QZZ))
    assert w["y"] == series("t^(0,1)", QZZ)


def test_coarser_target_from_first_coordinate():
    pt = mono("(1/2,0)", ZZ, 2)
    assert target_cut(QZZ, pt) == ConvexCut.at(1)
    assert cut_ring_member(QZZ, pt, series("t^(0,-1)", QZZ))
    assert not cut_ring_member(QZZ, pt, series("t^(-1,0)", QZZ))


def test_limit_point_case_examples():
    pt = mono("(0,1/3)", AA, 3)
    x = series("t^(0,-1/2)", QAA)
    assert not cut_ring_member(QAA, pt, x, case=2)
    w = cut_ring_falsify(QAA, pt, x)
    y = w["y"]
    g0 = parse_element("(0,1/3)", AA)
    assert g0 < vmin(QAA, y) < g0 - vmin(QAA, x)


def test_residue_case_examples():
    pt = ResidueCut(RealAlgebraicCut(2))
    assert cut_ring_member(QZ, pt, series("t", QZ), case=3)
    assert cut_ideal_member(QZ, pt, series("t", QZ))
    assert not cut_ideal_member(QZ, pt, Series.constant(3))
    assert not cut_ring_member(QZ, pt, series("t^-1", QZ))
    assert cut_ring_falsify(QZ, pt, series("t^-1", QZ)) is not None


def test_member_has_no_falsifier():
    assert cut_ring_falsify(QZZ, mono("(0,1/2)", ZZ, 2), Series.constant(1)) is None


def test_point_validation():
    with pytest.raises(DomainError):
        cut_ring_member(QZZ, mono("(0,1)", ZZ, 1), Series.constant(1))
    with pytest.raises(DomainError):
        cut_ring_member(QZZ, mono("(0,1/3)", ZZ, 2), Series.constant(1))
    with pytest.raises(DomainError):
        cut_ring_member(QAA, mono("(0,1/3)", AA, 3), Series.constant(1), case=1)
    with pytest.raises(DomainError):
        RealAlgebraicCut(4)


POINTS = [
    (QZZ, lambda: mono("(0,1/2)", ZZ, 2)),
    (QZZ, lambda: mono("(1/2,0)", ZZ, 2)),
    (QAA, lambda: mono("(0,1/3)", AA, 3)),
    (QAA, lambda: mono("(1/3,0)", AA, 3)),
    (QZ, lambda: ResidueCut(RealAlgebraicCut(2))),
    (QZ, lambda: ResidueCut(RealAlgebraicCut(F(5, 3)))),
]


@pytest.mark.parametrize("K,make", POINTS)
@given(data=st.data())
def test_construction_matches_target_ring(K, make, data):
    pt = make()
    x = data.draw(series_over(K.group, size=9))
    assert cut_ring_member(K, pt, x) == ring_member(K, target_cut(K, pt), x)


@pytest.mark.parametrize("K,make", POINTS)
@given(data=st.data())
def test_falsifier_is_sound_and_complete(K, make, data):
    pt = make()
    x = data.draw(series_over(K.group, size=9))
    w = cut_ring_falsify(K, pt, x)
    assert (w is None) == cut_ring_member(K, pt, x)


# --- squares and algebraic comparisons ---------------------------------------

def test_square_test_examples():
    r = square_leading_test(QZ, series("4t^2 + t^3", QZ))
    assert r.holds and r.witness.body == series("2t", QZ)
    assert not square_leading_test(QZ, series("-t^2", QZ)).holds
    assert square_leading_test(QZ, Series()).holds


@pytest.mark.parametrize("K", [QZ, QZZ, QAA])
@given(data=st.data())
def test_square_test_soundness(K, data):
    x = data.draw(series_over(K.group))
    r = square_leading_test(K, x)
    if r.holds:
        assert x.sign >= 0
        if x:
            y = r.witness.body
            d = x - s_mul(K, y, y)
            assert not d or vmin(K, d) > vmin(K, x)


@given(data=st.data())
def test_square_test_completeness(data):
    K = FieldDescriptor.rational(QA)
    x = data.draw(series_over(QA))
    if not x:
        return
    g, c = x.leading
    x = x + Series.monomial(F(data.draw(st.integers(1, 7)), data.draw(st.integers(1, 7))) ** 2 - c, g)
    assert square_leading_test(K, x).holds


def test_alg_cmp_examples():
    a = RealAlgebraicCut(2)
    assert alg_cmp(a, F(3, 2)) == "less"
    assert alg_cmp(a, 1) == "greater"
    assert alg_cmp(a, F(17, 12)) == "less"


@given(st.integers(2, 50), st.fractions(min_value=0, max_value=10, max_denominator=50))
def test_alg_cmp_matches_squaring(r, q):
    if int(r ** 0.5) ** 2 == r:
        return
    expected = "greater" if q * q < r else "less"
    assert alg_cmp(RealAlgebraicCut(r), q) == expected


def test_refinement_brackets_and_halves():
    a = RealAlgebraicCut(F(7, 3))
    for _ in range(20):
        w = a.width
        a.refine()
        assert a.width == w / 2
        assert a.lo ** 2 < F(7, 3) < a.hi ** 2
