"""Square roots of positive rationals, located by dyadic bisection."""
from __future__ import annotations

from fractions import Fraction
from math import isqrt

from ..arith import rational_root, rational_str, to_rational
from ..errors import DomainError
from ..hahn.series import Series
from ..oag.element import ZERO


class RealAlgebraicCut:
    """``sqrt(r)`` for a positive rational r that is not a rational square.

    The isolating interval ``(lo, hi)`` has dyadic endpoints and halves on
    every :meth:`refine`.  Refinement mutates the instance.
    """

    def __init__(self, r):
        r = to_rational(r)
        if r <= 0:
            raise DomainError("the radicand must be positive")
        if rational_root(r, 2) is not None:
            raise DomainError(f"{rational_str(r)} is a rational square")
        self.base = r
        # start from integers around the root, then the interval is dyadic forever
        k = isqrt(r.numerator // r.denominator)
        self.lo = Fraction(k)
        self.hi = Fraction(k + 1)

    def refine(self):
        mid = (self.lo + self.hi) / 2
        if mid * mid < self.base:
            self.lo = mid
        else:
            self.hi = mid

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def compare(self, q) -> int:
        """Sign of ``sqrt(r) - q``; never 0 because the root is irrational."""
        q = to_rational(q)
        while True:
            if q <= self.lo:
                return 1
            if q >= self.hi:
                return -1
            self.refine()

    def rational_between(self, lower) -> Fraction:
        """A rational in the open interval ``(lower, sqrt(r))`` (requires lower < sqrt(r))."""
        lower = to_rational(lower)
        if self.compare(lower) <= 0:
            raise DomainError("lower end must be below the root")
        while self.lo <= lower:
            self.refine()
        return self.lo

    def __str__(self):
        return f"sqrt({rational_str(self.base)})"


def alg_cmp(a: RealAlgebraicCut, q) -> str:
    """``less`` if sqrt(r) < q, else ``greater``."""
    return "greater" if a.compare(q) > 0 else "less"


def series_vs_alg(y: Series, a: RealAlgebraicCut, offset=0) -> int:
    """Sign of ``y - (sqrt(r) + offset)`` in the ordered Hahn field.

    Only the part of y at exponent 0 and the sign of its least term matter,
    since the constant sqrt(r) + offset is irrational and nonzero.
    """
    offset = to_rational(offset)
    if y and y.vmin.sign < 0:
        return y.sign
    c = y.coefficient(ZERO)
    # y = c + infinitesimal; c differs from the irrational constant
    return -a.compare(c - offset)
