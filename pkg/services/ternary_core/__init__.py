"""
Ternary Core Package

Abstract ternary algebras and commutative ternary groups, and the formal
symbol constructions: the acting ring R of a ternary algebra and the
acting abelian group G of a commutative ternary group.
"""

from .base import TernaryStructure, TernaryAlgebra, CommutativeTernaryGroup
from .symbols import (
    Symbol,
    make_symbol,
    identity_symbol,
    phi,
    normalize,
    symbol_eq,
    symbol_mul,
    symbol_add,
    symbol_neg,
    symbol_act,
    group_inverse,
    transitive_witness,
)

__all__ = [
    "TernaryStructure",
    "TernaryAlgebra",
    "CommutativeTernaryGroup",
    "Symbol",
    "make_symbol",
    "identity_symbol",
    "phi",
    "normalize",
    "symbol_eq",
    "symbol_mul",
    "symbol_add",
    "symbol_neg",
    "symbol_act",
    "group_inverse",
    "transitive_witness",
]
