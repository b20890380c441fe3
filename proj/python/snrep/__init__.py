"""Exact representation-theoretic computations for symmetric groups.

Shapes and cycle types are sequences of positive integers in weakly
decreasing order. Measure weights are exact rationals: pass ints, strings
like "1/3", or fractions.Fraction values; floats are rejected.
"""

from snrep._core import (
    Error,
    InvariantError,
    ParseError,
    PreconditionError,
    RangeError,
    ResourceGuardError,
    SemanticError,
    __version__,
    a_multiplicity,
    b_multiplicity,
    centralizer_order,
    character,
    character_table,
    class_size,
    conjugate,
    convolve,
    decompose,
    enumerate_partitions,
    expected_fixed_points,
    fourier_scalar,
    max_closed_form_r,
    oracle_multiplicity,
    sample_permutations,
    simulate,
    syt_count,
    verify_cor2,
    verify_prop1,
    verify_prop3,
)

__all__ = [
    "Error",
    "InvariantError",
    "ParseError",
    "PreconditionError",
    "RangeError",
    "ResourceGuardError",
    "SemanticError",
    "__version__",
    "a_multiplicity",
    "b_multiplicity",
    "centralizer_order",
    "character",
    "character_table",
    "class_size",
    "conjugate",
    "convolve",
    "decompose",
    "enumerate_partitions",
    "expected_fixed_points",
    "fourier_scalar",
    "max_closed_form_r",
    "oracle_multiplicity",
    "sample_permutations",
    "simulate",
    "syt_count",
    "verify_cor2",
    "verify_prop1",
    "verify_prop3",
]
