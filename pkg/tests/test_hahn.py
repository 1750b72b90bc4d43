from fractions import Fraction as F
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import AG, G2, QZ, QZZ, ZG, ZZ, nonzero_series, series, series_over
from hahnkit.errors import (
    DomainError,
    MembershipError,
    ResidueObstruction,
    SymbolicFieldError,
    TruncationBudgetExceeded,
    ValueGroupObstruction,
)
from hahnkit.hahn import (
    FieldDescriptor,
    Series,
    TruncatedSeries,
    coarsen_val,
    hensel_root,
    parse_element,
    residue,
    residue_field,
    ring_member,
    s_add,
    s_inv,
    s_mul,
    s_neg,
    sign,
    vmin,
)
from hahnkit.oag import ConvexCut, Element, GroupDescriptor

QG2 = FieldDescriptor.rational(GroupDescriptor.from_json(
    {"kind": "lex_sum", "components": [G2.component(i).to_json() for i in (1, 2, 3)], "start": 1}))
QA = FieldDescriptor.rational(AG)
FIELDS = [QZ, QZZ, QG2]


def e(text, G):
    return parse_element(text, G)


# --- arithmetic examples -----------------------------------------------------

def test_product_examples():
    assert s_mul(QZ, series("1 + t", QZ), series("1 - t", QZ)) == series("1 - t^2", QZ)
    assert s_mul(QZ, series("2t^-1 + 1", QZ), series("3t", QZ)) == series("6 + 3t", QZ)


def test_additive_inverse():
    x = series("3t^-2 + 1/2 - t^5", QZ)
    assert not s_add(QZ, x, s_neg(QZ, x))


def test_vmin_and_sign():
    assert vmin(QZ, series("3t^-2 + t", QZ)) == e("-2", ZG)
    assert sign(QZ, series("-t^5 + 100t^6", QZ)) == -1
    assert sign(QZ, Series()) == 0
    with pytest.raises(DomainError):
        vmin(QZ, Series())


def test_exponents_must_lie_in_group():
    with pytest.raises(MembershipError):
        s_add(QA, series("t^1/3", QA), Series.constant(1))


def test_real_closed_field_is_symbolic():
    RC = FieldDescriptor.real_closed(ZG)
    with pytest.raises(SymbolicFieldError):
        s_mul(RC, Series.constant(1), Series.constant(2))


# --- inverses and roots ------------------------------------------------------

def test_inverse_examples():
    y = s_inv(QZ, series("1 - t", QZ), e("4", ZG))
    assert y.body == series("1 + t + t^2 + t^3", QZ)
    assert s_inv(QZ, series("t", QZ)) == TruncatedSeries(series("t^-1", QZ))
    assert s_inv(QZ, Series.constant(2)).body == Series.constant(F(1, 2))
    with pytest.raises(DomainError, match="division by zero"):
        s_inv(QZ, Series(), e("1", ZG))


def test_inverse_budget():
    with pytest.raises(TruncationBudgetExceeded):
        s_inv(QZ, series("1 - t", QZ), e("50", ZG), budget=10)


def test_unreachable_bound_fails_fast():
    with pytest.raises(TruncationBudgetExceeded):
        s_inv(QZZ, series("1 + t^(0,1)", QZZ), e("(1,0)", ZZ))


def test_hensel_examples():
    r = hensel_root(QZ, series("1 + t", QZ), 2, e("3", ZG))
    assert r.body == series("1 + 1/2 t - 1/8 t^2", QZ)
    assert hensel_root(QZ, series("4t^2", QZ), 2).body == series("2t", QZ)
    with pytest.raises(ResidueObstruction):
        hensel_root(QZ, Series.constant(3), 2)
    with pytest.raises(ValueGroupObstruction):
        hensel_root(QZ, series("t", QZ), 2)
    with pytest.raises(DomainError):
        hensel_root(QZ, series("-1 + t", QZ), 2, e("3", ZG))


def test_hensel_matches_binomial_series():
    r = hensel_root(QZ, series("1 + t", QZ), 2, e("12", ZG))
    for k in range(12):
        # independent oracle: binom(1/2, k) = (-1)^(k+1) C(2k, k) / (4^k (2k - 1))
        expected = F((-1) ** (k + 1) * comb(2 * k, k), 4 ** k * (2 * k - 1))
        assert r.body.coefficient(e(str(k), ZG)) == expected


def test_truncated_product_bound():
    a = TruncatedSeries(series("1 + t", QZ), e("3", ZG))
    b = TruncatedSeries(series("t", QZ))
    assert (a * b).bound == e("4", ZG)
    assert (a + b).bound == e("3", ZG)


# --- coarsenings -------------------------------------------------------------

def test_coarsening_examples():
    cut = ConvexCut.at(1)
    x = series("t^(0,-3) + 1", QZZ)
    assert coarsen_val(QZZ, cut, x) == 0
    r = residue(QZZ, cut, x)
    K = residue_field(QZZ, cut)
    assert s_add(K, r, Series()) == r and len(r) == 2
    assert coarsen_val(QZZ, cut, series("t^(1,0)", QZZ)) == 1
    assert residue(QZZ, cut, Series.constant(5)) == Series.constant(5)
    with pytest.raises(DomainError):
        residue(QZZ, cut, series("t^(1,0)", QZZ))


def test_ring_member_examples():
    assert not ring_member(QZZ, ConvexCut.trivial(), series("t^(0,-3)", QZZ))
    assert ring_member(QZZ, ConvexCut.trivial(), series("5 + t^(1,2)", QZZ))
    assert ring_member(QZZ, ConvexCut.at(1), series("t^(0,-3)", QZZ))
    # the whole group as H is the trivial valuation
    assert ring_member(QZZ, ConvexCut.whole(), series("t^(-7,0)", QZZ))


# --- invariants --------------------------------------------------------------

@pytest.mark.parametrize("K", FIELDS)
@given(data=st.data())
def test_valuation_laws(K, data):
    x = data.draw(nonzero_series(K.group))
    y = data.draw(nonzero_series(K.group))
    assert vmin(K, s_mul(K, x, y)) == vmin(K, x) + vmin(K, y)
    s = s_add(K, x, y)
    if s:
        assert vmin(K, s) >= min(vmin(K, x), vmin(K, y))


@pytest.mark.parametrize("K", FIELDS)
@given(data=st.data())
def test_ordered_field_laws(K, data):
    x, y, z = (data.draw(series_over(K.group)) for _ in range(3))
    assert sign(K, s_mul(K, x, x)) >= 0
    assert sign(K, s_mul(K, x, y)) == sign(K, x) * sign(K, y)
    if x < y:
        assert s_add(K, x, z) < s_add(K, y, z)


@pytest.mark.parametrize("K", FIELDS)
@given(data=st.data())
def test_inverse_residual(K, data):
    x = data.draw(nonzero_series(K.group, max_terms=3))
    b = Element({K.group.last_index: data.draw(st.integers(1, 4))})
    y = s_inv(K, x, b)
    res = s_mul(K, x, y.body) - 1
    assert not res or vmin(K, res) >= b


@pytest.mark.parametrize("K", FIELDS)
@given(data=st.data())
def test_hensel_residual(K, data):
    u = data.draw(series_over(K.group, max_terms=3))
    u = u.filter(lambda g: g > Element())
    c = data.draw(st.sampled_from([1, 4, F(9, 4), F(1, 16)]))
    lead = data.draw(st.sampled_from([Element(), Element({K.group.start: 2}), Element({K.group.start: -4})]))
    x = (Series.constant(c) + u).shift(lead)
    b = lead + Element({K.group.last_index: 3})
    r = hensel_root(K, x, 2, b)
    res = s_mul(K, r.body, r.body) - x
    assert not res or vmin(K, res) >= b


@pytest.mark.parametrize("K", FIELDS)
@given(data=st.data())
def test_whole_ring_is_valuation_ring(K, data):
    cut = ConvexCut.trivial()
    x = data.draw(series_over(K.group))
    y = data.draw(series_over(K.group))
    if ring_member(K, cut, x) and ring_member(K, cut, y):
        assert ring_member(K, cut, s_add(K, x, y)) and ring_member(K, cut, s_mul(K, x, y))
    if x:
        inv = s_inv(K, x, Element({K.group.last_index: 2}))
        assert ring_member(K, cut, x) or ring_member(K, cut, inv.body)


@given(nonzero_series(ZZ))
def test_series_json_round_trip(x):
    assert Series.from_json(x.to_json()) == x
