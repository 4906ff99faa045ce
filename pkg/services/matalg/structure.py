"""A(q) as a ternary algebra for the symbol constructions."""

from typing import Any, Optional, Tuple

from services.matalg.elements import AlgebraElement, base_pair, triple
from services.numeric import Scalar
from services.quadform import QuadraticForm
from services.ternary_core import TernaryAlgebra


class MatrixTernaryAlgebra(TernaryAlgebra[AlgebraElement]):
    """
    The ternary algebra A(q) with triple product A * B^* * C.

    Args:
        form: Quadratic form with Disc(q) != 0
        base: Identity pair; defaults to matalg.base_pair(form)
    """

    def __init__(
        self,
        form: QuadraticForm,
        base: Optional[Tuple[AlgebraElement, AlgebraElement]] = None
    ):
        self.form = form
        super().__init__(base if base is not None else base_pair(form))

    def triple(self, first: AlgebraElement, second: AlgebraElement, third: AlgebraElement) -> AlgebraElement:
        return triple(first, second, third)

    def contains(self, element: Any) -> bool:
        return isinstance(element, AlgebraElement) and element.form == self.form

    def add(self, first: AlgebraElement, second: AlgebraElement) -> AlgebraElement:
        return first + second

    def scale(self, alpha: Any, element: AlgebraElement) -> AlgebraElement:
        return element.scale(alpha)

    def zero(self) -> AlgebraElement:
        return AlgebraElement.from_centered(self.form, 0, 0)

    def det(self, element: AlgebraElement) -> Scalar:
        return element.det()

    def describe(self) -> str:
        return f"A({self.form})"

    def __eq__(self, other: Any) -> bool:
        return (
            isinstance(other, MatrixTernaryAlgebra)
            and self.form == other.form
            and self.base_pair == other.base_pair
        )

    def __hash__(self) -> int:
        return hash((self.form, self.base_pair))
