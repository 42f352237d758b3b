"""Exact computations with bimodules over cyclic reflection groups of rank one."""
from .bimodule import (
    CycSet,
    DecompList,
    HomDescription,
    ShiftedIndec,
    enumerate_indecomposables,
    graded_rank,
    hom_describe,
    hom_oracle,
    parse_indec,
    tensor_decompose,
    tensor_rank_oracle,
    twist_product,
    verify_ses,
    verify_soergel_splitting,
)
from .cyclotomic import CycContext, CycNumber, context
from .errors import (
    ContextMismatch,
    CycsoergelError,
    DivisionByZero,
    InternalInconsistency,
    InvalidParameter,
    InvalidSplit,
    VerificationFailure,
)
from .grothendieck import AWElement, aw_multiply, categorification_check, decat, hecke_quotient_poly, q_poly
from .laurent import LaurentInt
from .polyring import Poly, p_poly, reduce_mod, split_coeffs
from .semisimple import char_poly_block, chebyshev_roots, eigen_block, semisimple_check

__all__ = [name for name in dir() if not name.startswith("_")]
