"""Non-commutative 4-dimensional hypercomplex number systems (Grassmann-Clifford doublings)."""

from .algebra import (
    NAMED_KINDS,
    CayleyTable,
    HNSError,
    HNum,
    Kind,
    NonFiniteError,
    SignedBasis,
    SystemDef,
    SystemMismatchError,
    ZeroDivisorError,
    add,
    builtin_system,
    conj,
    div_left,
    div_right,
    gc_double,
    generic_system,
    inverse,
    is_zero_divisor,
    left_rep,
    mul,
    neg,
    norm,
    pseudonorm,
    render,
    right_rep,
    scale,
    sub,
)
from .functions import Branch, RadicandBranch, exp_closed, exp_series, expm, radicand
from .printed import verify_printed_table

__all__ = [
    "NAMED_KINDS", "CayleyTable", "HNSError", "HNum", "Kind", "NonFiniteError", "SignedBasis",
    "SystemDef", "SystemMismatchError", "ZeroDivisorError", "add", "builtin_system", "conj",
    "div_left", "div_right", "gc_double", "generic_system", "inverse", "is_zero_divisor",
    "left_rep", "mul", "neg", "norm", "pseudonorm", "render", "right_rep", "scale", "sub",
    "Branch", "RadicandBranch", "exp_closed", "exp_series", "expm", "radicand",
    "verify_printed_table",
]
