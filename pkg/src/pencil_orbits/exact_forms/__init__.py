"""Exact scalars, binary and ternary forms, and symmetric 3x3 matrices."""

from .binary import (
    BinaryForm,
    binary_gcd,
    disc3,
    discriminant,
    format_form,
    gcd_many,
    resultant,
    squarefree_decomposition,
    squarefree_pattern,
    substitute_linear,
)
from .fields import DEFAULT_PRIME, GF, QQ, FieldError, ModP, PrimeField, RationalField, parse_rational
from .invariants import BinaryQuartic, j_of_cross_ratio, quartic_I, quartic_J, quartic_J_hankel
from .symmatrix import SymMatrix3, det3, rank3
from .ternary import TernaryForm, det3_generic, hessian

__all__ = [
    "BinaryForm", "BinaryQuartic", "DEFAULT_PRIME", "FieldError", "GF", "ModP", "PrimeField", "QQ",
    "RationalField", "SymMatrix3", "TernaryForm", "binary_gcd", "det3", "det3_generic", "disc3",
    "discriminant", "format_form", "gcd_many", "hessian", "j_of_cross_ratio", "parse_rational",
    "quartic_I", "quartic_J", "quartic_J_hankel", "rank3", "resultant", "squarefree_decomposition",
    "squarefree_pattern", "substitute_linear",
]
