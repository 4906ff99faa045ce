"""
Exact rational scalars.

Rational wraps fractions.Fraction (arbitrary-precision numerator and
denominator, always gcd-reduced with a positive denominator) and adds the
library's error types, text format and Scalar interface.

Text format: "n", "-n" or "n/d" with d > 0, canonical when rendered.
"""

import re
from fractions import Fraction
from random import Random
from typing import Any, Union

from services.errors import DivisionByZero, ParseError
from services.numeric.base import Scalar, ScalarField

RationalLike = Union["Rational", Fraction, int]

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class Rational(Scalar):
    """
    Immutable exact fraction.

    Example:
        Rational(1, 2) + Rational(1, 3)  # 5/6
        Rational(2, 4)                   # 1/2
        Rational.parse("-7/3")           # -7/3
    """

    __slots__ = ("_value",)

    def __init__(self, numerator: RationalLike = 0, denominator: int = 1):
        if denominator == 0:
            raise DivisionByZero(f"denominator of {numerator}/0")
        if isinstance(numerator, Rational):
            numerator = numerator._value
        if isinstance(numerator, bool) or not isinstance(numerator, (int, Fraction)):
            raise TypeError(f"cannot build Rational from {type(numerator).__name__}")
        self._value = Fraction(numerator, denominator)

    @classmethod
    def _wrap(cls, value: Fraction) -> "Rational":
        obj = object.__new__(cls)
        obj._value = value
        return obj

    @classmethod
    def parse(cls, text: str) -> "Rational":
        """
        Parse the textual rational format.

        Args:
            text: "n", "-n" or "n/d"

        Returns:
            Canonical Rational

        Raises:
            ParseError: malformed text
            DivisionByZero: zero denominator
        """
        match = _RATIONAL_PATTERN.match(text)
        if match is None:
            raise ParseError(f"not a rational: {text!r}", 0)
        numerator = int(match.group(1))
        denominator = int(match.group(2)) if match.group(2) is not None else 1
        return cls(numerator, denominator)

    # ---- accessors ----

    @property
    def numerator(self) -> int:
        return self._value.numerator

    @property
    def denominator(self) -> int:
        return self._value.denominator

    @property
    def field(self) -> "RationalField":
        return QQ

    def as_fraction(self) -> Fraction:
        return self._value

    def is_zero(self) -> bool:
        return self._value == 0

    def is_integer(self) -> bool:
        return self._value.denominator == 1

    def inverse(self) -> "Rational":
        if self._value == 0:
            raise DivisionByZero("inverse of 0")
        return Rational._wrap(1 / self._value)

    # ---- arithmetic ----

    @staticmethod
    def _coerce(other: Any) -> Any:
        if isinstance(other, Rational):
            return other._value
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return other
        return NotImplemented

    def __add__(self, other: Any) -> "Rational":
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return Rational._wrap(self._value + value)

    def __sub__(self, other: Any) -> "Rational":
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return Rational._wrap(self._value - value)

    def __mul__(self, other: Any) -> "Rational":
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return Rational._wrap(self._value * value)

    def __truediv__(self, other: Any) -> "Rational":
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        if value == 0:
            raise DivisionByZero(f"{self} / 0")
        return Rational._wrap(self._value / value)

    def __rtruediv__(self, other: Any) -> "Rational":
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        if self._value == 0:
            raise DivisionByZero(f"{other} / 0")
        return Rational._wrap(value / self._value)

    def __neg__(self) -> "Rational":
        return Rational._wrap(-self._value)

    def __pow__(self, exponent: int) -> "Rational":
        if exponent < 0 and self._value == 0:
            raise DivisionByZero("negative power of 0")
        return Rational._wrap(self._value ** exponent)

    def __abs__(self) -> "Rational":
        return Rational._wrap(abs(self._value))

    # ---- comparison ----

    def __eq__(self, other: Any) -> bool:
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return self._value == value

    def __hash__(self) -> int:
        return hash(self._value)

    def __lt__(self, other: Any) -> bool:
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return self._value < value

    def __le__(self, other: Any) -> bool:
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return self._value <= value

    def __gt__(self, other: Any) -> bool:
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return self._value > value

    def __ge__(self, other: Any) -> bool:
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return self._value >= value

    def __bool__(self) -> bool:
        return self._value != 0

    # ---- rendering ----

    def __str__(self) -> str:
        if self._value.denominator == 1:
            return str(self._value.numerator)
        return f"{self._value.numerator}/{self._value.denominator}"

    def __repr__(self) -> str:
        return f"Rational({self})"

    def __reduce__(self):
        return (Rational, (self._value.numerator, self._value.denominator))


class RationalField(ScalarField):
    """The field of rational numbers."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    @property
    def name(self) -> str:
        return "Q"

    @property
    def characteristic(self) -> int:
        return 0

    def __call__(self, value: Any) -> Rational:
        if isinstance(value, Rational):
            return value
        if isinstance(value, str):
            return Rational.parse(value)
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return Rational(value)
        raise TypeError(f"cannot coerce {type(value).__name__} into Q")

    def random_element(self, rng: Random, bound: int = 20) -> Rational:
        """Rational with numerator in [-bound, bound] and denominator in [1, bound]."""
        return Rational(rng.randint(-bound, bound), rng.randint(1, bound))

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("Q")

    def __repr__(self) -> str:
        return "QQ"

    def __reduce__(self):
        return (RationalField, ())


# Global rational field instance
QQ = RationalField()
