"""Counting, enumerating and cross-checking S-omino towers with exact arithmetic."""

from .exact import HnSpec, binomial, count_dyck, count_total, count_U, count_Wb, hyp2f1_terminating, multinomial
from .series import Series, qpoch
from .tower import Block, ClassSpec, Tower, TowerError, WidthList, canonicalize, is_member, validate

__all__ = [
    "Block",
    "ClassSpec",
    "HnSpec",
    "Series",
    "Tower",
    "TowerError",
    "WidthList",
    "binomial",
    "canonicalize",
    "count_U",
    "count_Wb",
    "count_dyck",
    "count_total",
    "hyp2f1_terminating",
    "is_member",
    "multinomial",
    "qpoch",
    "validate",
]
