"""Convex valuations on Hahn fields: v0, v_p, definability verdicts and defining constructions."""
from .algebraic import RealAlgebraicCut, alg_cmp, series_vs_alg
from .construction import (
    MonomialCut,
    SquareTestResult,
    ResidueCut,
    cut_ring_falsify,
    cut_ideal_member,
    cut_ring_member,
    in_monomial_d,
    in_residue_d,
    square_leading_test,
    target_cut,
    validate_point,
)
from .valuations import (
    NO,
    UNKNOWN,
    YES,
    ClassificationReport,
    ValuationDescriptor,
    ValuationEntry,
    Verdict,
    classify_field,
    classify_lor,
    classify_lr,
    classify_lr_v0,
    is_real_closed,
    v0,
    v_p,
)

__all__ = [name for name in dir() if not name.startswith("_")]
