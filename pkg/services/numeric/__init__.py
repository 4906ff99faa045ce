"""
Numeric Package

Exact scalar arithmetic over the rationals and over odd prime fields F_p.
Every other module is generic over these two scalar domains.
"""

from .base import Scalar, ScalarField
from .rational import Rational, RationalField, QQ
from .prime_field import PrimeField, PrimeFieldElement, GF, is_prime
from .factory import get_field

__all__ = [
    "Scalar",
    "ScalarField",
    "Rational",
    "RationalField",
    "QQ",
    "PrimeField",
    "PrimeFieldElement",
    "GF",
    "is_prime",
    "get_field",
]
