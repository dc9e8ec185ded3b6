"""Python surface of the narain-lab C++ core."""

from ._narain_lab import (  # noqa: F401
    Classification,
    SweepResult,
    character,
    classify,
    construct_family,
    eta,
    expected_gram,
    gram_matrix,
    group_mul,
    narain_gram,
    norm_counts,
    q_expansion,
    theta,
    verify_all,
    verify_family,
)

__all__ = [
    "Classification",
    "SweepResult",
    "character",
    "classify",
    "construct_family",
    "eta",
    "expected_gram",
    "gram_matrix",
    "group_mul",
    "narain_gram",
    "norm_counts",
    "q_expansion",
    "theta",
    "verify_all",
    "verify_family",
]
