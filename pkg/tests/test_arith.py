from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from hahnkit.arith import (
    Q,
    Z,
    PrimeLocalization,
    integer_root,
    nth_prime,
    prime_index,
    rational_root,
    rational_str,
    to_rational,
)
from hahnkit.errors import DomainError, ParseError

A = PrimeLocalization.inverting(2)
A2 = PrimeLocalization.inverting(3, 5)
NOT2 = PrimeLocalization.inverting_all_but(2)

localizations = st.sampled_from([Z, Q, A, A2, NOT2, PrimeLocalization.inverting(3),
                                 PrimeLocalization.inverting_all_but(3, 5)])
rationals = st.builds(Fraction, st.integers(-500, 500), st.integers(1, 500))


def contains_oracle(L, q):
    """Prime-factor check written against sympy, independent of the class."""
    primes = sympy.factorint(Fraction(q).denominator)
    return all(L.inverts(p) for p in primes)


def test_contains_examples():
    assert A.contains(Fraction(5, 8))
    assert not A.contains(Fraction(1, 3))
    assert not NOT2.contains(Fraction(1, 2))
    assert NOT2.contains(Fraction(1, 15))


def test_p_divisible_examples():
    assert A2.is_p_divisible(3)
    assert not A.is_p_divisible(3)
    assert Q.is_p_divisible(7)


def test_divide_examples():
    assert A.divide(Fraction(3, 4), 2) == Fraction(3, 8)
    assert A.divide(1, 3) is None
    assert Q.divide(1, 6) == Fraction(1, 6)


def test_divide_rejects_non_member():
    with pytest.raises(DomainError):
        A.divide(Fraction(1, 3), 2)


def test_normalization():
    assert PrimeLocalization("all_except", ()) == Q
    assert PrimeLocalization("explicit", ()) == Z
    assert PrimeLocalization("explicit", (5, 2, 2)).primes == (2, 5)
    with pytest.raises(DomainError):
        PrimeLocalization("explicit", (4,))


def test_density_flags():
    assert not Z.is_dense and A.is_dense and Q.is_divisible and not NOT2.is_divisible


@pytest.mark.parametrize("L", [Z, Q, A, A2, NOT2])
def test_json_round_trip(L):
    assert PrimeLocalization.from_json(L.to_json()) == L


def test_json_rejects_garbage():
    with pytest.raises(ParseError):
        PrimeLocalization.from_json({"primes": "2"})
    with pytest.raises(ParseError):
        PrimeLocalization.from_json("some")


def test_prime_enumeration():
    assert [nth_prime(i) for i in range(5)] == [2, 3, 5, 7, 11]
    assert prime_index(11) == 4


def test_roots():
    assert integer_root(27, 3) == 3 and integer_root(26, 3) is None
    assert rational_root(Fraction(4, 9), 2) == Fraction(2, 3)
    assert rational_root(Fraction(3), 2) is None


def test_rational_text():
    assert to_rational("-3/6") == Fraction(-1, 2)
    assert rational_str(Fraction(-1, 2)) == "-1/2"
    with pytest.raises(ParseError):
        to_rational("1/0")


@given(localizations, rationals)
def test_contains_matches_factorization(L, q):
    assert L.contains(q) == contains_oracle(L, q)


@given(localizations, rationals, st.integers(1, 30))
def test_divide_law(L, q, n):
    q = L.floor_to(q, 1)
    r = L.divide(q, n)
    if r is not None:
        assert n * r == q and L.contains(r)
    else:
        assert not contains_oracle(L, q / n)


@given(localizations, st.sampled_from([2, 3, 5, 7, 11, 13]), st.lists(st.integers(-50, 50), min_size=1, max_size=20))
def test_p_divisible_matches_sampled_division(L, p, nums):
    dens = L.denominators(32)
    samples = [Fraction(n, dens[i % len(dens)]) for i, n in enumerate(nums)]
    samples.append(Fraction(1))
    sampled = all(L.divide(q, p) is not None for q in samples)
    assert sampled == L.is_p_divisible(p)


@given(localizations, rationals, rationals)
def test_membership_closed_under_group_operations(L, a, b):
    if L.contains(a) and L.contains(b):
        assert L.contains(a + b) and L.contains(-a)
