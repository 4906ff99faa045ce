"""
Abstract base classes for ternary structures.

A ternary structure is a carrier set with a triple product A * B^* * C and
an identity pair (B0, C0) such that A * B0^* * C0 = A for every A.

- TernaryAlgebra: a vector space whose triple product is commutative in
  the outer arguments, associative, distributive, linear and
  nondegenerate (A A^* A = 0 iff det A = 0).
- CommutativeTernaryGroup: a set whose triple product is closed,
  commutative, associative, has an identity pair (Q0, R0) and inverses
  (for every P some R with P Q0^* R = R0).

The identity pair is supplied by the concrete structure; nothing at this
layer searches for one.
"""

from abc import ABC, abstractmethod
from typing import Any, Generic, Tuple, TypeVar

from services.errors import StructureMismatch

Carrier = TypeVar("Carrier")


class TernaryStructure(ABC, Generic[Carrier]):
    """
    Carrier plus triple product plus identity pair.

    Args:
        base: The identity pair (B0, C0)
    """

    def __init__(self, base: Tuple[Carrier, Carrier]):
        self._base = base

    @property
    def base_pair(self) -> Tuple[Carrier, Carrier]:
        """(B0, C0) with triple(A, B0, C0) == A for all A."""
        return self._base

    @abstractmethod
    def triple(self, first: Carrier, second: Carrier, third: Carrier) -> Carrier:
        """The triple product first * second^* * third."""

    @abstractmethod
    def contains(self, element: Any) -> bool:
        """True iff element belongs to the carrier."""

    @abstractmethod
    def describe(self) -> str:
        """Short human-readable description."""

    def require(self, element: Any) -> Carrier:
        """Return element, or raise StructureMismatch if it is foreign."""
        if not self.contains(element):
            raise StructureMismatch(f"{element} is not in {self.describe()}")
        return element

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.describe()})"


class TernaryAlgebra(TernaryStructure[Carrier]):
    """Ternary structure on a vector space."""

    @abstractmethod
    def add(self, first: Carrier, second: Carrier) -> Carrier: ...

    @abstractmethod
    def scale(self, alpha: Any, element: Carrier) -> Carrier: ...

    @abstractmethod
    def zero(self) -> Carrier: ...

    @abstractmethod
    def det(self, element: Carrier) -> Any:
        """Determinant used by the nondegeneracy axiom."""


class CommutativeTernaryGroup(TernaryStructure[Carrier]):
    """Ternary structure with an identity pair (Q0, R0) and inverses."""

    def inverse(self, element: Carrier) -> Carrier:
        """R with element * Q0^* * R == R0, namely R = Q0 * element^* * R0."""
        q0, r0 = self.base_pair
        return self.triple(q0, self.require(element), r0)
