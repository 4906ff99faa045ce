"""
Prime field arithmetic F_p for odd primes p.

Used by the oracle layer: the same generic algebra runs over F_p so small
fields can be swept exhaustively.
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from random import Random
from typing import Any

from services.errors import DivisionByZero, EvenCharacteristic, ModulusMismatch, NotPrime
from services.numeric.base import Scalar, ScalarField
from services.numeric.rational import Rational


def is_prime(n: int) -> bool:
    """
    Deterministic trial division up to sqrt(n).

    Oracle primes are small, so this is fast enough.
    """
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for divisor in range(3, math.isqrt(n) + 1, 2):
        if n % divisor == 0:
            return False
    return True


@dataclass(frozen=True)
class PrimeField(ScalarField):
    """
    The field F_p, p an odd prime.

    Attributes:
        p: Field modulus

    Raises:
        EvenCharacteristic: p == 2
        NotPrime: p composite (or < 2)
    """
    p: int

    def __post_init__(self):
        if self.p == 2:
            raise EvenCharacteristic("characteristic 2 is not supported")
        if not is_prime(self.p):
            raise NotPrime(f"{self.p} is not prime")

    @property
    def name(self) -> str:
        return f"F_{self.p}"

    @property
    def characteristic(self) -> int:
        return self.p

    def __call__(self, value: Any) -> "PrimeFieldElement":
        if isinstance(value, PrimeFieldElement):
            if value.modulus != self.p:
                raise ModulusMismatch(f"element of F_{value.modulus} used in F_{self.p}")
            return value
        if isinstance(value, str):
            value = Rational.parse(value)
        if isinstance(value, Rational):
            value = value.as_fraction()
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise DivisionByZero(f"denominator {value.denominator} vanishes mod {self.p}")
            return PrimeFieldElement(
                value.numerator * pow(value.denominator, -1, self.p), self
            )
        if isinstance(value, int) and not isinstance(value, bool):
            return PrimeFieldElement(value, self)
        raise TypeError(f"cannot coerce {type(value).__name__} into F_{self.p}")

    def random_element(self, rng: Random) -> "PrimeFieldElement":
        return PrimeFieldElement(rng.randrange(self.p), self)

    def __repr__(self) -> str:
        return f"GF({self.p})"


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    """Cached PrimeField constructor."""
    return PrimeField(p)


class PrimeFieldElement(Scalar):
    """
    Element of F_p, value kept reduced in [0, p).

    Example:
        F5 = GF(5)
        F5(3) + F5(4)   # 2
        F5(2).inverse() # 3
    """

    __slots__ = ("value", "_field")

    def __init__(self, value: int, field: Any):
        if isinstance(field, int):
            field = GF(field)
        self._field = field
        self.value = value % field.p

    @property
    def field(self) -> PrimeField:
        return self._field

    @property
    def modulus(self) -> int:
        return self._field.p

    def is_zero(self) -> bool:
        return self.value == 0

    def inverse(self) -> "PrimeFieldElement":
        if self.value == 0:
            raise DivisionByZero(f"inverse of 0 in F_{self.modulus}")
        return PrimeFieldElement(pow(self.value, -1, self.modulus), self._field)

    def _coerce(self, other: Any) -> Any:
        if isinstance(other, PrimeFieldElement):
            if other.modulus != self.modulus:
                raise ModulusMismatch(
                    f"F_{self.modulus} and F_{other.modulus} operands"
                )
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return other
        return NotImplemented

    def __add__(self, other: Any) -> "PrimeFieldElement":
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return PrimeFieldElement(self.value + value, self._field)

    def __sub__(self, other: Any) -> "PrimeFieldElement":
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return PrimeFieldElement(self.value - value, self._field)

    def __mul__(self, other: Any) -> "PrimeFieldElement":
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        return PrimeFieldElement(self.value * value, self._field)

    def __truediv__(self, other: Any) -> "PrimeFieldElement":
        value = self._coerce(other)
        if value is NotImplemented:
            return NotImplemented
        if value % self.modulus == 0:
            raise DivisionByZero(f"division by 0 in F_{self.modulus}")
        return PrimeFieldElement(self.value * pow(value, -1, self.modulus), self._field)

    def __neg__(self) -> "PrimeFieldElement":
        return PrimeFieldElement(-self.value, self._field)

    def __pow__(self, exponent: int) -> "PrimeFieldElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return PrimeFieldElement(pow(self.value, exponent, self.modulus), self._field)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, PrimeFieldElement):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self) -> int:
        # same hash as the reduced int it compares equal to
        return hash(self.value)

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        return f"PrimeFieldElement({self.value}, GF({self.modulus}))"

    def __reduce__(self):
        return (PrimeFieldElement, (self.value, self.modulus))
