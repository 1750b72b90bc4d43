"""Ordered abelian groups given as Hahn sums of localized subgroups of Q."""
from .element import ZERO, Element
from .group import (
    ConvexCut,
    GroupDescriptor,
    TailRule,
    canonical_cut,
    convex_member,
    cut_from_position,
    cut_position,
    enumerate_cuts,
    g_add,
    g_cmp,
    g_divide,
    g_neg,
    in_group,
    nat_val,
    parse_cut,
    project,
    quotient,
    subgroup,
)
from .predicates import (
    ClosednessCertificate,
    closed_in_hull_certificate,
    has_limit_point_in_hull,
    hull_immediate,
    in_closure,
    is_dense_in_hull,
    is_densely_ordered,
    is_discretely_ordered,
    is_divisible,
    is_limit_point,
    is_p_divisible,
    is_regular,
    is_strongly_nip,
    maximal_divisible_convex_subgroup,
    maximal_p_divisible_convex_subgroup,
    representative_primes,
    stubborn_prime,
)
from .definable import DefinableSubgroup, catalog_witnesses, subgroup_from_hull_point, witness_subgroup

__all__ = [name for name in dir() if not name.startswith("_")]
