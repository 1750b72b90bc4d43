"""Field descriptors and the operations of k((G)) on finite-support series.

Inverses and p-th roots of series with more than one term have infinite
support, so they come back as :class:`TruncatedSeries`.  Both are expanded
around the leading monomial: writing ``x = c t^g (1 + u)`` with
``vmin(u) > 0``,

    1/x       = c^-1 t^-g  * sum_k (-u)^k
    x^(1/p)   = c^(1/p) t^(g/p) * sum_k binom(1/p, k) u^k
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ..arith import is_prime, rational_root
from ..errors import (
    DomainError,
    MembershipError,
    ParseError,
    ResidueObstruction,
    SymbolicFieldError,
    TruncationBudgetExceeded,
    ValueGroupObstruction,
)
from ..oag.element import ZERO, Element
from ..oag.group import ConvexCut, GroupDescriptor, cut_position, subgroup
from .series import Series, TruncatedSeries

RATIONAL = "rational"
REAL_CLOSED = "real_closed"
DEFAULT_BUDGET = 10_000


@dataclass(frozen=True)
class FieldDescriptor:
    """k((G)) with k = Q (computable) or k a real closed field (descriptor only)."""

    coeff: str
    group: GroupDescriptor

    def __post_init__(self):
        if self.coeff not in (RATIONAL, REAL_CLOSED):
            raise DomainError(f"unknown coefficient kind {self.coeff!r}")

    @classmethod
    def rational(cls, group: GroupDescriptor) -> "FieldDescriptor":
        return cls(RATIONAL, group)

    @classmethod
    def real_closed(cls, group: GroupDescriptor) -> "FieldDescriptor":
        return cls(REAL_CLOSED, group)

    @property
    def is_rational(self) -> bool:
        return self.coeff == RATIONAL

    def require_arithmetic(self):
        if not self.is_rational:
            raise SymbolicFieldError(
                "symbolic field: real closed coefficients support classification only")

    def check(self, x: Series) -> Series:
        for e in x.exponents:
            if not self.group.contains(e):
                raise MembershipError(f"exponent {e!r} is not in {self.group}")
        return x

    def to_json(self):
        return {"coeff": self.coeff, "group": self.group.to_json()}

    @classmethod
    def from_json(cls, data) -> "FieldDescriptor":
        if not isinstance(data, dict) or "group" not in data:
            raise ParseError(f"bad field descriptor: {data!r}")
        coeff = data.get("coeff", RATIONAL)
        if coeff in ("declared_real_closed", "declared-real-closed", "R"):
            coeff = REAL_CLOSED
        return cls(coeff, GroupDescriptor.from_json(data["group"]))

    def __str__(self):
        k = "Q" if self.is_rational else "R"
        return f"{k}(({self.group}))"


# ---------------------------------------------------------------------------
# ring operations


def s_add(F: FieldDescriptor, x: Series, y: Series) -> Series:
    F.require_arithmetic()
    return F.check(x) + F.check(y)


def s_neg(F: FieldDescriptor, x: Series) -> Series:
    F.require_arithmetic()
    return -F.check(x)


def s_mul(F: FieldDescriptor, x: Series, y: Series) -> Series:
    F.require_arithmetic()
    return F.check(x) * F.check(y)


def vmin(F: FieldDescriptor, x: Series) -> Element:
    return F.check(x).vmin


def sign(F: FieldDescriptor, x: Series) -> int:
    return F.check(x).sign


def _normalize(x: Series):
    """``x = c t^g (1 + u)``; returns (c, g, u)."""
    g, c = x.leading
    u = Series._raw(tuple((e - g, a / c) for e, a in x.terms[1:]))
    return c, g, u


def _power_sum(u: Series, coeffs, precision: Element, budget: int) -> Series:
    """``sum_k coeffs(k) u^k`` keeping exponents below ``precision``; requires vmin(u) > 0."""
    out = Series.constant(coeffs(0))
    if not u:
        return out
    # k * vmin(u) never passes a bound from a larger archimedean class
    if precision > ZERO and u.vmin.nat_val > precision.nat_val:
        raise TruncationBudgetExceeded(
            "truncation budget exceeded: the bound is infinitely large compared to the tail of the series")
    power = Series.constant(1)
    produced = 1
    k = 0
    while True:
        k += 1
        power = (power * u).truncate(precision)
        if not power:
            return out
        produced += len(power)
        if produced > budget:
            raise TruncationBudgetExceeded(
                f"truncation budget exceeded ({budget} terms) before reaching the bound")
        ck = coeffs(k)
        if ck:
            out = out + power * ck
        if k >= budget:
            raise TruncationBudgetExceeded("truncation budget exceeded")


def s_inv(F: FieldDescriptor, x: Series, bound: Optional[Element] = None,
          budget: int = DEFAULT_BUDGET) -> TruncatedSeries:
    """``y`` with ``x*y - 1`` of valuation at least ``bound``.

    Monomials invert exactly.  Otherwise ``y`` is known below
    ``bound - vmin(x)``, which is the bound recorded on the result.
    """
    F.require_arithmetic()
    F.check(x)
    if not x:
        raise DomainError("division by zero")
    c, g, u = _normalize(x)
    lead = Series.monomial(1 / c, -g)
    if not u:
        return TruncatedSeries(lead)
    if bound is None:
        raise DomainError("a bound is required to invert a series with more than one term")
    # y is wanted below bound - g, so the unit part is needed below bound
    body = _power_sum(u, lambda k: Fraction((-1) ** k), bound, budget)
    return TruncatedSeries(body.shift(-g) * (1 / c), bound - g)


def _binom(a: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    for i in range(k):
        out = out * (a - i) / (i + 1)
    return out


def root_expansion(F: FieldDescriptor, x: Series, p: int, precision: Optional[Element],
                   budget: int = DEFAULT_BUDGET) -> TruncatedSeries:
    """Positive p-th root of ``x`` known below ``precision`` (exact for monomials)."""
    F.require_arithmetic()
    F.check(x)
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if not x or x.sign < 0:
        raise DomainError("p-th roots are taken of positive series only")
    c, g, u = _normalize(x)
    h = g / p
    if not F.group.contains(h):
        raise ValueGroupObstruction(f"value-group obstruction: vmin(x) is not {p}-divisible in {F.group}")
    r = rational_root(c, p)
    if r is None:
        raise ResidueObstruction(f"residue obstruction: {c} has no rational root of degree {p}")
    lead = Series.monomial(r, h)
    if not u:
        return TruncatedSeries(lead)
    if precision is None:
        raise DomainError("a bound is required for the root of a series with more than one term")
    a = Fraction(1, p)
    body = _power_sum(u, lambda k: _binom(a, k), precision - h, budget)
    return TruncatedSeries(body.shift(h) * r, precision)


def hensel_root(F: FieldDescriptor, x: Series, p: int, bound: Optional[Element] = None,
                budget: int = DEFAULT_BUDGET) -> TruncatedSeries:
    """``r > 0`` with ``r^p - x`` of valuation at least ``bound``.

    The root itself is expanded below ``bound - (p-1) vmin(x)/p``, since an
    error of valuation e in r moves r^p by valuation e + (p-1) vmin(r).
    """
    if not x:
        raise DomainError("p-th roots are taken of positive series only")
    if bound is None:
        return root_expansion(F, x, p, None, budget)
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    h = x.vmin / p
    return root_expansion(F, x, p, bound - h * (p - 1), budget)


# ---------------------------------------------------------------------------
# coarsenings of vmin


def coarsen_val(F: FieldDescriptor, cut: ConvexCut, x: Series) -> int:
    """Sign of the image of vmin(x) in G/H, H the subgroup named by ``cut``."""
    F.check(x)
    if not x:
        raise DomainError("coarsened valuation of zero is undefined")
    g = x.vmin
    if not g or g.nat_val >= cut_position(F.group, cut):
        return 0
    return g.sign


def residue(F: FieldDescriptor, cut: ConvexCut, x: Series) -> Series:
    """Image of a unit in the residue field k((H)); exponents keep their indices."""
    if coarsen_val(F, cut, x) != 0:
        raise DomainError("residue is defined for units only")
    pos = cut_position(F.group, cut)
    return x.filter(lambda e: not e or e.nat_val >= pos)


def residue_field(F: FieldDescriptor, cut: ConvexCut) -> FieldDescriptor:
    return FieldDescriptor(F.coeff, subgroup(F.group, cut))


def ring_member(F: FieldDescriptor, cut: ConvexCut, x: Series) -> bool:
    return not x or coarsen_val(F, cut, x) >= 0


def monomial(coeff, exp: Element = ZERO) -> Series:
    return Series.monomial(coeff, exp)
