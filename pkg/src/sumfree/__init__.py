"""Exact enumeration toolkit for sum-free sets over integer intervals and
finite abelian groups, the link graphs they induce, and maximal independent
set counting in graphs with loops."""

from .intset import (
    GroundSet,
    IntSubset,
    SetStats,
    addable_elements,
    is_maximal_sum_free,
    is_schur_triple,
    is_sum_free,
    schur_triple_count,
    set_stats,
    sumset,
    unordered_schur,
)

__all__ = [
    "GroundSet",
    "IntSubset",
    "SetStats",
    "addable_elements",
    "is_maximal_sum_free",
    "is_schur_triple",
    "is_sum_free",
    "schur_triple_count",
    "set_stats",
    "sumset",
    "unordered_schur",
]

__version__ = "0.1.0"
