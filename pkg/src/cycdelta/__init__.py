"""Finite-group engine for the cyclic-subgroup deficiency census."""

from .group import (
    ClosureError,
    DeltaReport,
    Group,
    GroupError,
    OrderCensus,
    closure,
    cyclic_subgroup_count,
    delta,
    delta_report,
    euler_phi,
    i2,
    is_elementary_abelian_2,
    order_census,
    star_identity,
)
from .perm import Permutation, PermutationError, compose, element_order, identity

__version__ = "0.1.0"

__all__ = [
    "ClosureError",
    "DeltaReport",
    "Group",
    "GroupError",
    "OrderCensus",
    "Permutation",
    "PermutationError",
    "closure",
    "compose",
    "cyclic_subgroup_count",
    "delta",
    "delta_report",
    "element_order",
    "euler_phi",
    "i2",
    "identity",
    "is_elementary_abelian_2",
    "order_census",
    "star_identity",
    "__version__",
]
