"""
Conic Package

Rational (or F_p) points of a conic q(x, y) = 0 with Det(q), Disc(q)
nonzero, as a commutative ternary group, and its acting abelian group of
symbols.
"""

from .conic import Conic, ConicPoint
from .group import ConicGroup, conic_group

__all__ = ["Conic", "ConicPoint", "ConicGroup", "conic_group"]
