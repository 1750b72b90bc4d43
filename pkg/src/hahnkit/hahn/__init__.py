"""Hahn series fields k((G)) with finite-support elements."""
from .field import (
    RATIONAL,
    REAL_CLOSED,
    FieldDescriptor,
    coarsen_val,
    hensel_root,
    monomial,
    residue,
    residue_field,
    ring_member,
    root_expansion,
    s_add,
    s_inv,
    s_mul,
    s_neg,
    sign,
    vmin,
)
from .series import Series, TruncatedSeries
from .text import format_element, format_series, parse_element, parse_series

__all__ = [name for name in dir() if not name.startswith("_")]
