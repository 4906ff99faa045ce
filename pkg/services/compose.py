"""
Closed-form composition identities for binary quadratic forms.

For F(x, y) = a x^2 + b x y + c y^2:

    F(P1) F(P2)       = u^2 + b u v + a c v^2
                        u = a x1 x2 + b x1 y2 + c y1 y2,  v = y1 x2 - x1 y2
    F(P1) F(P2) F(P3) = F(x, y)
                        x = a x1x2x3 + b x1y2x3 + c (x1y2y3 - y1x2y3 + y1y2x3)
                        y = a (x1x2y3 - x1y2x3 + y1x2x3) + b y1x2y3 + c y1y2y3

These are determinants of the pair and triple products in A(F) and hold as
polynomial identities, Disc = 0 included. On a x^2 + b y^2 + c z^2 = 0
three points give a fourth by the analogous projective formula.

The identities are checked at runtime when settings.identity_checks_enabled
is on (debug configurations) and raise IdentityViolation on failure.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Tuple

import structlog

from config import settings
from services.errors import IdentityViolation, NotOnVariety, ZeroPoint
from services.numeric import QQ, Rational, Scalar, ScalarField
from services.quadform import QuadraticForm

logger = structlog.get_logger()

Pair = Tuple[Any, Any]
Triple = Tuple[Any, Any, Any]


@dataclass(frozen=True)
class HomogeneousForm:
    """
    The form a x^2 + b x y + c y^2.

    Attributes:
        a, b, c: Coefficients
        field: Scalar field
    """
    a: Any
    b: Any
    c: Any
    field: ScalarField = QQ

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, self.field(getattr(self, name)))

    def __call__(self, x: Any, y: Any) -> Scalar:
        x, y = self.field(x), self.field(y)
        return self.a * x * x + self.b * x * y + self.c * y * y

    def norm(self, u: Any, v: Any) -> Scalar:
        """u^2 + b u v + a c v^2: the determinant of [u, v]_{q,0}."""
        u, v = self.field(u), self.field(v)
        return u * u + self.b * u * v + self.a * self.c * v * v

    def as_quadratic_form(self) -> QuadraticForm:
        return QuadraticForm.homogeneous(self.a, self.b, self.c, field=self.field)

    def __str__(self) -> str:
        return str(self.as_quadratic_form())


def _check(identity: str, left: Scalar, right: Scalar, **context: Any) -> None:
    if not settings.identity_checks_enabled:
        return
    if left != right:
        logger.error("identity_violation", identity=identity, left=str(left), right=str(right),
                     **{key: str(value) for key, value in context.items()})
        raise IdentityViolation(f"{identity}: {left} != {right}")


def compose2(form: HomogeneousForm, first: Pair, second: Pair) -> Tuple[Scalar, Scalar]:
    """
    (u, v) with F(P1) F(P2) = u^2 + b u v + a c v^2.

    Example:
        compose2(HomogeneousForm(1, 0, 1), (1, 2), (2, 3))  # (8, 1): 5 * 13 = 64 + 1
    """
    k = form.field
    x1, y1 = k(first[0]), k(first[1])
    x2, y2 = k(second[0]), k(second[1])
    u = form.a * x1 * x2 + form.b * x1 * y2 + form.c * y1 * y2
    v = y1 * x2 - x1 * y2
    _check("compose2", form(x1, y1) * form(x2, y2), form.norm(u, v), form=form)
    return u, v


def compose3(form: HomogeneousForm, first: Pair, second: Pair, third: Pair) -> Tuple[Scalar, Scalar]:
    """
    (x, y) with F(P1) F(P2) F(P3) = F(x, y).

    Example:
        compose3(HomogeneousForm(1, 0, 1), (1, 2), (2, 3), (1, 1))  # (7, 9): 5 * 13 * 2 = 130
    """
    k = form.field
    x1, y1 = k(first[0]), k(first[1])
    x2, y2 = k(second[0]), k(second[1])
    x3, y3 = k(third[0]), k(third[1])
    a, b, c = form.a, form.b, form.c
    x = a * x1 * x2 * x3 + b * x1 * y2 * x3 + c * (x1 * y2 * y3 - y1 * x2 * y3 + y1 * y2 * x3)
    y = a * (x1 * x2 * y3 - x1 * y2 * x3 + y1 * x2 * x3) + b * y1 * x2 * y3 + c * y1 * y2 * y3
    _check("compose3", form(x1, y1) * form(x2, y2) * form(x3, y3), form(x, y), form=form)
    return x, y


def two_square(x1: Any, y1: Any, x2: Any, y2: Any) -> Tuple[Scalar, Scalar]:
    """
    (x1^2 + y1^2)(x2^2 + y2^2) = (x1 x2 + y1 y2)^2 + (y1 x2 - x1 y2)^2.

    compose2 specialised to x^2 + y^2.
    """
    return compose2(HomogeneousForm(1, 0, 1), (x1, y1), (x2, y2))


def _ternary_value(a: Scalar, b: Scalar, c: Scalar, point: Tuple[Scalar, Scalar, Scalar]) -> Scalar:
    x, y, z = point
    return a * x * x + b * y * y + c * z * z


def proj_compose3(
    a: Any,
    b: Any,
    c: Any,
    first: Triple,
    second: Triple,
    third: Triple,
    field: ScalarField = QQ
) -> Tuple[Scalar, Scalar, Scalar]:
    """
    A fourth point on a x^2 + b y^2 + c z^2 = 0 from three points on it.

    The coordinates are returned as computed, not projectively normalized
    (see normalize_projective).

    Raises:
        ZeroPoint: an input is (0, 0, 0)
        NotOnVariety: an input is off the variety
    """
    a, b, c = field(a), field(b), field(c)
    points = []
    for point in (first, second, third):
        point = tuple(field(coordinate) for coordinate in point)
        if all(coordinate.is_zero() for coordinate in point):
            raise ZeroPoint("(0, 0, 0) is not a projective point")
        if not _ternary_value(a, b, c, point).is_zero():
            raise NotOnVariety(f"{point} is not on {a}x^2 + {b}y^2 + {c}z^2 = 0")
        points.append(point)

    (x1, y1, z1), (x2, y2, z2), (x3, y3, z3) = points
    x = a * x1 * x2 * x3 + b * (x1 * y2 * y3 - y1 * x2 * y3 + y1 * y2 * x3)
    y = a * (x1 * x2 * y3 - x1 * y2 * x3 + y1 * x2 * x3) + b * y1 * y2 * y3
    z = c * z1 * z2 * z3
    _check("proj_compose3", _ternary_value(a, b, c, (x, y, z)), field.zero(), a=a, b=b, c=c)
    return x, y, z


def normalize_projective(point: Triple) -> Tuple[int, int, int]:
    """
    Coprime integer representative with positive first nonzero entry.

    Example:
        normalize_projective((2, 2, -2))        # (1, 1, -1)
        normalize_projective((-1/2, 7/2, -5/2)) # (1, -7, 5)

    Raises:
        ZeroPoint: the all-zero triple
    """
    fractions = [
        coordinate.as_fraction() if isinstance(coordinate, Rational) else Fraction(coordinate)
        for coordinate in point
    ]
    if all(value == 0 for value in fractions):
        raise ZeroPoint("(0, 0, 0) is not a projective point")

    common = math.lcm(*(value.denominator for value in fractions))
    integers = [int(value * common) for value in fractions]
    divisor = math.gcd(*integers)
    integers = [value // divisor for value in integers]
    leading = next(value for value in integers if value != 0)
    if leading < 0:
        integers = [-value for value in integers]
    return tuple(integers)
