"""
Abstract scalar interface.

Every algebraic module is written against Scalar / ScalarField so the same
code runs over the rationals and over odd prime fields.
"""

from abc import ABC, abstractmethod
from random import Random
from typing import Any, Iterator


class Scalar(ABC):
    """
    An immutable element of an exact field.

    Implementations support +, -, *, / and unary minus with each other and
    with plain ints, plus exact equality and hashing.
    """

    __slots__ = ()

    @property
    @abstractmethod
    def field(self) -> "ScalarField":
        """The field this scalar belongs to."""

    @abstractmethod
    def is_zero(self) -> bool:
        """True iff this is the additive identity."""

    @abstractmethod
    def inverse(self) -> "Scalar":
        """Multiplicative inverse; raises DivisionByZero for zero."""

    @abstractmethod
    def __add__(self, other: Any) -> "Scalar": ...

    @abstractmethod
    def __sub__(self, other: Any) -> "Scalar": ...

    @abstractmethod
    def __mul__(self, other: Any) -> "Scalar": ...

    @abstractmethod
    def __truediv__(self, other: Any) -> "Scalar": ...

    @abstractmethod
    def __neg__(self) -> "Scalar": ...

    @abstractmethod
    def __eq__(self, other: Any) -> bool: ...

    @abstractmethod
    def __hash__(self) -> int: ...

    def __radd__(self, other: Any) -> "Scalar":
        return self + other

    def __rmul__(self, other: Any) -> "Scalar":
        return self * other

    def __rsub__(self, other: Any) -> "Scalar":
        return -self + other

    def __rtruediv__(self, other: Any) -> "Scalar":
        return self.inverse() * other

    def __pos__(self) -> "Scalar":
        return self


class ScalarField(ABC):
    """A scalar domain: the rationals or a prime field F_p."""

    @property
    @abstractmethod
    def name(self) -> str:
        """Short display name ("Q", "F_7")."""

    @property
    @abstractmethod
    def characteristic(self) -> int:
        """0 for the rationals, p for F_p."""

    @abstractmethod
    def __call__(self, value: Any) -> Scalar:
        """Coerce an int, Fraction, string or scalar into this field."""

    @abstractmethod
    def random_element(self, rng: Random) -> Scalar:
        """Deterministic pseudo-random element drawn from rng."""

    def zero(self) -> Scalar:
        return self(0)

    def one(self) -> Scalar:
        return self(1)

    @property
    def is_finite(self) -> bool:
        return self.characteristic != 0

    def elements(self) -> Iterator[Scalar]:
        """All elements of a finite field in increasing representative order."""
        if not self.is_finite:
            raise TypeError(f"{self.name} is infinite")
        return (self(i) for i in range(self.characteristic))
