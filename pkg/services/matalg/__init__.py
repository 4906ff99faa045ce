"""
Matrix Algebra Package

The ternary algebra A(q) of matrices [x, y]_q, the commutative ring R(q)
of matrices [u, v]_{q,0}, the pair product A * B^*, the module action
g * C and the triple product A * B^* * C.
"""

from .matrix import Matrix2
from .elements import (
    AlgebraElement,
    RingElement,
    embed,
    det_of,
    adjugate,
    ring_one,
    pair_product,
    act,
    triple,
    affine_triple,
    base_pair,
    pair_product_formula,
    act_formula,
    ring_product_formula,
    printed_ring_product,
)
from .structure import MatrixTernaryAlgebra

__all__ = [
    "Matrix2",
    "AlgebraElement",
    "RingElement",
    "embed",
    "det_of",
    "adjugate",
    "ring_one",
    "pair_product",
    "act",
    "triple",
    "affine_triple",
    "base_pair",
    "pair_product_formula",
    "act_formula",
    "ring_product_formula",
    "printed_ring_product",
    "MatrixTernaryAlgebra",
]
