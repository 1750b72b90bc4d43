"""Valuation rings defined from a point of the real closure, and the square formula.

Monomial case.  For g0 in div G outside G with N*g0 = h in G, the set
``D = {y >= 0 : y^N < t^h}`` is the set of non-negative y with
vmin(y) > g0, and ``O = {x : |x| D in D}`` is the ring of the coarsening
whose units have exponents in the stabilizer ``{gamma : gamma + S in S}``
of ``S = {g in G : g > g0}``.  That stabilizer is everything past the first
index where g0 leaves G, so O is v_min itself when g0 is a limit point of
G or sits at the last index of a discrete G, and a proper coarsening
otherwise.

Residue case.  For a = sqrt(r) irrational, ``D = {y : a - 1 < y < a}``
and ``A = {x >= 0 : x + D in D}``.  Then ``A u -A`` is the maximal ideal
of v_min and O is its stabilizer.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ..arith import rational_root
from ..errors import DomainError
from ..hahn.field import FieldDescriptor
from ..hahn.series import Series, TruncatedSeries
from ..oag.element import ZERO, Element
from ..oag.group import ConvexCut, canonical_cut
from ..oag.predicates import is_discretely_ordered, is_limit_point
from ..oag.sampling import approximations
from .algebraic import RealAlgebraicCut, series_vs_alg


@dataclass
class MonomialCut:
    """The point ``t^g0`` of the real closure; ``N * g0`` must lie in G."""

    g0: Element
    N: int

    @property
    def h(self) -> Element:
        return self.g0 * self.N


@dataclass
class ResidueCut:
    """The constant ``sqrt(r)`` of the real closure of the coefficient field."""

    a: RealAlgebraicCut


def _case(F: FieldDescriptor, point) -> int:
    if isinstance(point, ResidueCut):
        return 3
    if is_limit_point(F.group, point.g0):
        return 2
    return 1 if is_discretely_ordered(F.group) else 0


def validate_point(F: FieldDescriptor, point, case: Optional[int] = None) -> int:
    """Check the hypotheses and return the case: 1 discrete, 2 limit point, 3 residue, 0 coarsening."""
    F.require_arithmetic()
    G = F.group
    if isinstance(point, MonomialCut):
        if not isinstance(point.N, int) or point.N <= 0:
            raise DomainError("N must be a positive integer")
        if not point.g0 or G.contains(point.g0):
            raise DomainError("g0 must lie in the divisible hull but outside G")
        G.check_hull(point.g0)
        if not G.contains(point.h):
            raise DomainError("N * g0 must lie in G")
    elif not isinstance(point, ResidueCut):
        raise DomainError("unknown cut specification")
    found = _case(F, point)
    if case is not None:
        if case == 1 and not is_discretely_ordered(G):
            raise DomainError("case 1 needs a discretely ordered value group")
        if case == 1 and found == 2:
            raise DomainError("g0 is a limit point of G; that is case 2")
        if case == 2 and found != 2:
            raise DomainError("case 2 needs g0 to be a limit point of G")
        if case == 3 and found != 3:
            raise DomainError("case 3 needs a residue cut sqrt(r)")
        if case in (1, 2) and found == 3:
            raise DomainError("cases 1 and 2 need a monomial cut g0")
        if case not in (0, 1, 2, 3):
            raise DomainError(f"unknown case {case}")
    return found


def target_cut(F: FieldDescriptor, point) -> ConvexCut:
    """Cut of the valuation whose ring the construction defines."""
    if isinstance(point, ResidueCut):
        return ConvexCut.trivial()
    i0 = F.group.first_defect(abs(point.g0))
    return canonical_cut(F.group, ConvexCut.at(i0, inclusive=False))


def cut_ring_member(F: FieldDescriptor, point, x: Series, case: Optional[int] = None) -> bool:
    """Membership in the constructed valuation ring, by the stabilizer closed form."""
    validate_point(F, point, case)
    F.check(x)
    if not x:
        return True
    g = x.vmin
    if g.sign >= 0:
        return True
    if isinstance(point, ResidueCut):
        return False
    # a negative exponent survives iff it is infinitesimal against the defect index
    return g.nat_val > F.group.first_defect(abs(point.g0))


# ---------------------------------------------------------------------------
# literal evaluation of the defining sets


def in_monomial_d(point: MonomialCut, y: Series) -> bool:
    """``y >= 0 and y^N < t^h`` evaluated with exact series arithmetic."""
    if y.sign < 0:
        return False
    if not y:
        return True
    return (y ** point.N) < Series.monomial(1, point.h)


def in_residue_d(point: ResidueCut, y: Series) -> bool:
    """``a - 1 < y < a``."""
    return series_vs_alg(y, point.a, -1) > 0 and series_vs_alg(y, point.a) < 0


def cut_ideal_member(F: FieldDescriptor, point: ResidueCut, x: Series) -> bool:
    """Membership of ``|x|`` in A = {z >= 0 : z + D in D} (residue case), so in the maximal ideal."""
    validate_point(F, point, 3)
    F.check(x)
    return _ideal_counterexample(point, abs_series(x)) is None


def abs_series(x: Series) -> Series:
    return -x if x.sign < 0 else x


def _ideal_counterexample(point: ResidueCut, z: Series) -> Optional[Fraction]:
    """A rational b in (a - 1, a) with z + b outside D, if the search finds one.

    Infinitesimal z never has one.  Otherwise b is taken within
    min(1, standard part of z) below a, which pushes z + b past a.
    """
    if not z or z.sign < 0 or z.vmin.sign > 0:
        return None
    a = point.a
    gap = Fraction(1) if z.vmin.sign < 0 else min(Fraction(1), z.coefficient(ZERO))
    while a.width >= gap:
        a.refine()
    b = a.lo
    y = Series.constant(b)
    if in_residue_d(point, y) and not in_residue_d(point, z + y):
        return b
    return None


def cut_ring_falsify(F: FieldDescriptor, point, x: Series, samples: int = 500, seed: int = 0):
    """Search for a concrete witness that x is outside the constructed ring.

    Monomial case: y with ``y in D`` and ``|x| y not in D``.  Residue case:
    an element m of the maximal ideal and a rational b with ``|x| m + b``
    leaving D, so that ``x m`` is not in A.  Returns a dict or None.
    """
    validate_point(F, point)
    F.check(x)
    if not x:
        return None
    ax = abs_series(x)
    rng = random.Random(seed)
    tried = 0
    if isinstance(point, ResidueCut):
        g = x.vmin
        cands = [Series.monomial(1, -g)] if g.sign < 0 else []
        while len(cands) < 4 and g.sign < 0:
            cands.append(Series.monomial(Fraction(1, rng.randint(1, 9)), -g))
        for m in cands:
            tried += 1
            if _ideal_counterexample(point, m) is not None:
                continue
            b = _ideal_counterexample(point, ax * m)
            if b is not None:
                return {"m": m, "b": b}
        return None
    G = F.group
    dens = sorted({v.denominator for _, v in x.vmin.items()})
    exps = []
    for e, _ in approximations(G, point.g0, horizon=6, extra_dens=dens):
        if e > point.g0:
            exps.append(e)
    exps.sort()
    for e in exps:
        if tried >= samples:
            break
        tried += 1
        y = Series.monomial(1, e)
        if in_monomial_d(point, y) and not in_monomial_d(point, ax * y):
            return {"y": y}
    return None


# ---------------------------------------------------------------------------
# squares


@dataclass
class SquareTestResult:
    holds: bool
    witness: Optional[TruncatedSeries]


def square_leading_test(F: FieldDescriptor, x: Series) -> SquareTestResult:
    """``x = 0 or exists y with vmin(x - y^2) > vmin(x)``, decided on the leading term."""
    F.require_arithmetic()
    F.check(x)
    if not x:
        return SquareTestResult(True, None)
    g, c = x.leading
    r = rational_root(c, 2)
    half = g / 2
    if r is None or not F.group.contains(half):
        return SquareTestResult(False, None)
    return SquareTestResult(True, TruncatedSeries(Series.monomial(r, half)))
