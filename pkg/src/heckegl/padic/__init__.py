"""Exact convolution algebra of bi-invariant functions on GL_2(Q_p)."""

from .core import (
    INF,
    GL2Element,
    Level,
    PadicContext,
    cartan_exponents,
    coset_equal,
    in_subgroup,
    iwahori_reduce,
    lattice_key,
    pi_matrix,
    right_coset_key,
    valuation,
    weyl_matrix,
)
from .cosets import (
    CosetBoundError,
    CosetDecomposition,
    congruence_level,
    decompose,
    left_coset_reps,
    right_coset_reps,
    validate_decomposition,
)
from .functions import (
    HAAR_NOTE,
    BiInvariantFunction,
    canonical_double_coset,
    convolve,
    indicator,
    iwahori_relation_check,
    l1_norm,
    unit_idempotent,
)
from ._kernels import active_backend

__all__ = [
    "INF",
    "GL2Element",
    "Level",
    "PadicContext",
    "cartan_exponents",
    "coset_equal",
    "in_subgroup",
    "iwahori_reduce",
    "lattice_key",
    "pi_matrix",
    "right_coset_key",
    "valuation",
    "weyl_matrix",
    "CosetBoundError",
    "CosetDecomposition",
    "congruence_level",
    "decompose",
    "left_coset_reps",
    "right_coset_reps",
    "validate_decomposition",
    "HAAR_NOTE",
    "BiInvariantFunction",
    "canonical_double_coset",
    "convolve",
    "indicator",
    "iwahori_relation_check",
    "l1_norm",
    "unit_idempotent",
    "active_backend",
]
