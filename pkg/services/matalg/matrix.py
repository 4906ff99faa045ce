"""
Exact 2x2 matrices over a scalar field.

    [[m00, m01],
     [m10, m11]]
"""

from dataclasses import dataclass
from typing import Any, Tuple

from services.numeric import Scalar, ScalarField


@dataclass(frozen=True)
class Matrix2:
    """Immutable 2x2 matrix with exact entries."""
    m00: Scalar
    m01: Scalar
    m10: Scalar
    m11: Scalar

    @classmethod
    def identity(cls, field: ScalarField) -> "Matrix2":
        return cls(field.one(), field.zero(), field.zero(), field.one())

    @classmethod
    def zero(cls, field: ScalarField) -> "Matrix2":
        return cls(field.zero(), field.zero(), field.zero(), field.zero())

    def rows(self) -> Tuple[Tuple[Scalar, Scalar], Tuple[Scalar, Scalar]]:
        return ((self.m00, self.m01), (self.m10, self.m11))

    def det(self) -> Scalar:
        return self.m00 * self.m11 - self.m01 * self.m10

    def adjugate(self) -> "Matrix2":
        """Transpose of the cofactor matrix: adj(M) * M = det(M) * I."""
        return Matrix2(self.m11, -self.m01, -self.m10, self.m00)

    def trace(self) -> Scalar:
        return self.m00 + self.m11

    def is_zero(self) -> bool:
        return all(entry.is_zero() for entry in (self.m00, self.m01, self.m10, self.m11))

    def __add__(self, other: "Matrix2") -> "Matrix2":
        return Matrix2(
            self.m00 + other.m00, self.m01 + other.m01,
            self.m10 + other.m10, self.m11 + other.m11,
        )

    def __sub__(self, other: "Matrix2") -> "Matrix2":
        return Matrix2(
            self.m00 - other.m00, self.m01 - other.m01,
            self.m10 - other.m10, self.m11 - other.m11,
        )

    def __matmul__(self, other: "Matrix2") -> "Matrix2":
        return Matrix2(
            self.m00 * other.m00 + self.m01 * other.m10,
            self.m00 * other.m01 + self.m01 * other.m11,
            self.m10 * other.m00 + self.m11 * other.m10,
            self.m10 * other.m01 + self.m11 * other.m11,
        )

    def scale(self, factor: Any) -> "Matrix2":
        return Matrix2(
            self.m00 * factor, self.m01 * factor,
            self.m10 * factor, self.m11 * factor,
        )

    def __str__(self) -> str:
        return f"[[{self.m00}, {self.m01}], [{self.m10}, {self.m11}]]"
