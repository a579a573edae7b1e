"""Minkowski sum decomposition of multisets and factoring in N[x]."""

from ._core import (
    Multiset,
    __version__,
    bench,
    brute_force_factor_pairs,
    contains,
    decompose,
    difference,
    factor,
    factor_completely,
    from_polynomial,
    generate,
    minkowski_set_sum,
    minkowski_sum,
    normalize,
    quotient,
    score,
    to_polynomial,
)

__all__ = [
    "Multiset",
    "bench",
    "brute_force_factor_pairs",
    "contains",
    "decompose",
    "difference",
    "factor",
    "factor_completely",
    "from_polynomial",
    "generate",
    "minkowski_set_sum",
    "minkowski_sum",
    "normalize",
    "quotient",
    "score",
    "to_polynomial",
]
