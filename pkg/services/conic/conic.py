"""
Conic sections q(x, y) = 0 with the ternary group law.

For a conic with Det(q) != 0 and Disc(q) != 0, every point P = (x, y)
embeds as [x, y]_q with det = m_q != 0, and

    P * Q^* * R := the point of [P]_q * [Q]_q^-1 * [R]_q

stays on the conic because its determinant is m * m^-1 * m = m.
"""

from dataclasses import dataclass
from typing import Any, Optional, Tuple

import structlog

from services.errors import DegenerateConic, NotFound, NotOnConic
from services.matalg import affine_triple
from services.numeric import Scalar
from services.quadform import QuadraticForm, search_representation

logger = structlog.get_logger()


@dataclass(frozen=True)
class ConicPoint:
    """A point on a conic; equality is exact componentwise."""
    x: Scalar
    y: Scalar

    def as_tuple(self) -> Tuple[Scalar, Scalar]:
        return (self.x, self.y)

    def __str__(self) -> str:
        return f"{self.x},{self.y}"


@dataclass(frozen=True)
class Conic:
    """
    The curve C(q): q(x, y) = 0.

    Raises:
        DegenerateConic: Det(q) == 0 or Disc(q) == 0
    """
    form: QuadraticForm

    def __post_init__(self):
        if self.form.disc.is_zero() or self.form.det3.is_zero():
            raise DegenerateConic(
                f"{self.form}: Det = {self.form.det3}, Disc = {self.form.disc} (both must be nonzero)"
            )

    @property
    def field(self):
        return self.form.field

    @property
    def m(self) -> Scalar:
        """Determinant shared by the embedded matrices of all points."""
        return self.form.m_value()

    # ---- membership ----

    def contains(self, x: Any, y: Any) -> bool:
        """True iff q(x, y) == 0 exactly."""
        return self.form.evaluate(x, y).is_zero()

    def point(self, x: Any, y: Any) -> ConicPoint:
        """
        Validated point.

        Raises:
            NotOnConic: q(x, y) != 0
        """
        point = ConicPoint(self.field(x), self.field(y))
        return self.require_point(point)

    def require_point(self, point: ConicPoint) -> ConicPoint:
        if not isinstance(point, ConicPoint) or not self.contains(point.x, point.y):
            raise NotOnConic(f"({point}) is not on {self.form} = 0")
        return point

    # ---- group law ----

    def triple(self, first: ConicPoint, second: ConicPoint, third: ConicPoint) -> ConicPoint:
        """
        P * Q^* * R.

        Raises:
            NotOnConic: any input off the curve
        """
        for point in (first, second, third):
            self.require_point(point)
        x, y = affine_triple(self.form, first.as_tuple(), second.as_tuple(), third.as_tuple())
        return ConicPoint(x, y)

    def identity_pair(self, base: ConicPoint) -> Tuple[ConicPoint, ConicPoint]:
        """(Q0, R0) = (base, base): P * base^* * base == P for every P."""
        self.require_point(base)
        return (base, base)

    def inverse_point(self, point: ConicPoint, base: ConicPoint) -> ConicPoint:
        """R = base * P^* * base, so that P * base^* * R == base."""
        return self.triple(base, point, base)

    def power(self, point: ConicPoint, exponent: int, base: ConicPoint) -> ConicPoint:
        """
        P^n in the group with identity `base`.

        P^0 = base, P^(n+1) = P^n * base^* * P, negative n via the inverse.
        On x^2 - 2y^2 = 1 with base (1, 0): (3, 2)^2 = (17, 12), (3, 2)^3 = (99, 70).
        """
        self.require_point(base)
        if exponent < 0:
            point, exponent = self.inverse_point(point, base), -exponent
        result = base
        for _ in range(exponent):
            result = self.triple(result, base, point)
        return result

    def group(self, base: ConicPoint):
        """The commutative ternary group on this conic with identity pair (base, base)."""
        from services.conic.group import ConicGroup
        return ConicGroup(self, base)

    # ---- finding points ----

    def find_point(self, height_bound: int) -> ConicPoint:
        """
        First rational point of height <= height_bound (rationals only).

        Raises:
            NotFound: none within the bound; the conic may still have points
        """
        x, y = search_representation(self.form, 0, height_bound)
        logger.info("conic_point_found", conic=str(self.form), x=str(x), y=str(y))
        return ConicPoint(x, y)

    def point_from_slope(self, base: ConicPoint, slope: Optional[Any]) -> ConicPoint:
        """
        Second intersection of the conic with the line through `base` of
        the given slope (None for the vertical line).

        A tangent line returns `base` itself.

        Raises:
            NotFound: the line meets the conic only at `base`
        """
        self.require_point(base)
        grad_x, grad_y = self.form.gradient(base.x, base.y)
        q = self.form
        if slope is None:
            leading, linear = q.c, grad_y
            direction = (self.field(0), self.field(1))
        else:
            t = self.field(slope)
            leading = q.a + q.b * t + q.c * t * t
            linear = grad_x + t * grad_y
            direction = (self.field(1), t)

        if leading.is_zero():
            raise NotFound(f"slope {slope} is an asymptotic direction of {q}")
        step = -linear / leading
        return ConicPoint(base.x + step * direction[0], base.y + step * direction[1])

    def __str__(self) -> str:
        return f"C({self.form})"
