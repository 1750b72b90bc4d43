"""Exact computation with ordered abelian groups, Hahn series fields and their convex valuations.

Subpackages:

* :mod:`hahnkit.oag` - Hahn sums of subgroups of Q, convex subgroups and
  group predicates (regularity, density in the divisible hull, strong NIP);
* :mod:`hahnkit.hahn` - finite-support Hahn series with truncated inverses
  and roots;
* :mod:`hahnkit.valuation` - coarsenings of the natural valuation, v0 and
  v_p, definability verdicts and ring-defining constructions;
* :mod:`hahnkit.axioms` - checkers for axiom schemes;
* :mod:`hahnkit.corpus` - a catalog of named structures with expected values.
"""
from .arith import Q, Z, PrimeLocalization
from .errors import (
    DomainError,
    HahnkitError,
    MembershipError,
    NotApplicable,
    ParseError,
    ResidueObstruction,
    SymbolicFieldError,
    TruncationBudgetExceeded,
    ValueGroupObstruction,
)
from .hahn import FieldDescriptor, Series, TruncatedSeries, parse_series
from .oag import ConvexCut, Element, GroupDescriptor, TailRule
from .valuation import ValuationDescriptor, classify_field

__version__ = "0.1.0"

__all__ = [
    "Q", "Z", "PrimeLocalization",
    "HahnkitError", "ParseError", "DomainError", "MembershipError", "SymbolicFieldError",
    "ResidueObstruction", "ValueGroupObstruction", "TruncationBudgetExceeded", "NotApplicable",
    "FieldDescriptor", "Series", "TruncatedSeries", "parse_series",
    "ConvexCut", "Element", "GroupDescriptor", "TailRule",
    "ValuationDescriptor", "classify_field",
]
