"""Exact enumeration of pattern-avoiding set partitions.

Partitions of [n] are handled in their canonical sequential form (restricted
growth strings, e.g. "1231242"); all counts and series coefficients are exact
integers of arbitrary size.
"""

from ._core import (
    __version__,
    a007317,
    bell,
    bruteforce_series,
    catalan,
    closed_form_k1,
    contains,
    count_avoiding,
    count_avoiding_by_run,
    crossing_pattern,
    enumerate_partitions,
    from_blocks,
    gf_k0,
    gf_k0_sequence,
    gf_k1,
    gf_k2,
    gf_q,
    initial_run_length,
    is_canonical,
    kernel_residual_is_zero,
    occurrence,
    reduce,
    stirling2,
    to_blocks,
    verify,
)

__all__ = [
    "__version__",
    "a007317",
    "bell",
    "bruteforce_series",
    "catalan",
    "closed_form_k1",
    "contains",
    "count_avoiding",
    "count_avoiding_by_run",
    "crossing_pattern",
    "enumerate_partitions",
    "from_blocks",
    "gf_k0",
    "gf_k0_sequence",
    "gf_k1",
    "gf_k2",
    "gf_q",
    "initial_run_length",
    "is_canonical",
    "kernel_residual_is_zero",
    "occurrence",
    "reduce",
    "stirling2",
    "to_blocks",
    "verify",
]
