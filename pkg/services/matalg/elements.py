"""
The matrix algebra A(q) and the commutative ring R(q).

For a form q with Disc(q) != 0, center (h, k):

    [x, y]_q     = [[x-h, -c (y-k)], [y-k, a (x-h) + b (y-k)]]   in A(q)
    [u, v]_{q,0} = [[u,   -c v    ], [a v,  u + b v          ]]   in R(q)

det [x, y]_q = q(x, y) + m_q and det [u, v]_{q,0} = u^2 + b u v + a c v^2.

Elements store coordinates; matrices are derived views. Every product is
computed as a literal matrix product and read back into coordinates, which
fails loudly (ClosureViolation) if the product leaves the expected shape.
The closed formulas at the bottom of this module are cross-checks only.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Any, Iterator, Tuple

import structlog

from services.errors import ClosureViolation, DegenerateDisc, FormMismatch, SingularElement
from services.matalg.matrix import Matrix2
from services.numeric import Scalar
from services.quadform import QuadraticForm

logger = structlog.get_logger()


def _check_same_form(first: Any, second: Any) -> None:
    if first.form != second.form:
        raise FormMismatch(f"elements over {first.form} and {second.form}")


@dataclass(frozen=True)
class AlgebraElement:
    """
    The element [x, y]_q of A(q).

    Attributes:
        form: Quadratic form with Disc(q) != 0
        x, y: Coordinates (not centered)
    """
    form: QuadraticForm
    x: Scalar
    y: Scalar

    def __post_init__(self):
        self.form.require_center()
        object.__setattr__(self, "x", self.form.field(self.x))
        object.__setattr__(self, "y", self.form.field(self.y))

    @classmethod
    def from_centered(cls, form: QuadraticForm, dx: Any, dy: Any) -> "AlgebraElement":
        """Element with x - h = dx and y - k = dy."""
        h, k = form.center()
        return cls(form, form.field(dx) + h, form.field(dy) + k)

    @classmethod
    def from_matrix(cls, form: QuadraticForm, matrix: Matrix2) -> "AlgebraElement":
        """
        Read a matrix back as an element of A(q).

        Raises:
            ClosureViolation: matrix is not of the A(q) shape
        """
        dx, dy = matrix.m00, matrix.m10
        if matrix.m01 != -form.c * dy or matrix.m11 != form.a * dx + form.b * dy:
            raise ClosureViolation(f"{matrix} is not in A({form})")
        return cls.from_centered(form, dx, dy)

    @property
    def point(self) -> Tuple[Scalar, Scalar]:
        return (self.x, self.y)

    @property
    def centered(self) -> Tuple[Scalar, Scalar]:
        """(x - h, y - k)."""
        h, k = self.form.center()
        return (self.x - h, self.y - k)

    @cached_property
    def matrix(self) -> Matrix2:
        dx, dy = self.centered
        q = self.form
        return Matrix2(dx, -q.c * dy, dy, q.a * dx + q.b * dy)

    def det(self) -> Scalar:
        """Determinant; equals q(x, y) + m_q."""
        return self.matrix.det()

    def adjugate(self) -> Matrix2:
        """[[a(x-h) + b(y-k), c(y-k)], [-(y-k), x-h]]."""
        dx, dy = self.centered
        q = self.form
        return Matrix2(q.a * dx + q.b * dy, q.c * dy, -dy, dx)

    def is_zero(self) -> bool:
        dx, dy = self.centered
        return dx.is_zero() and dy.is_zero()

    # ---- linear structure (in centered coordinates) ----

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        _check_same_form(self, other)
        (dx1, dy1), (dx2, dy2) = self.centered, other.centered
        return AlgebraElement.from_centered(self.form, dx1 + dx2, dy1 + dy2)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        _check_same_form(self, other)
        (dx1, dy1), (dx2, dy2) = self.centered, other.centered
        return AlgebraElement.from_centered(self.form, dx1 - dx2, dy1 - dy2)

    def __neg__(self) -> "AlgebraElement":
        return self.scale(-1)

    def scale(self, alpha: Any) -> "AlgebraElement":
        dx, dy = self.centered
        return AlgebraElement.from_centered(self.form, dx * alpha, dy * alpha)

    def __str__(self) -> str:
        return f"[{self.x}, {self.y}]_q"


@dataclass(frozen=True)
class RingElement:
    """
    The element [u, v]_{q,0} of R(q).

    Attributes:
        form: Quadratic form
        u, v: Coordinates
    """
    form: QuadraticForm
    u: Scalar
    v: Scalar

    def __post_init__(self):
        object.__setattr__(self, "u", self.form.field(self.u))
        object.__setattr__(self, "v", self.form.field(self.v))

    @classmethod
    def one(cls, form: QuadraticForm) -> "RingElement":
        return cls(form, 1, 0)

    @classmethod
    def zero(cls, form: QuadraticForm) -> "RingElement":
        return cls(form, 0, 0)

    @classmethod
    def from_matrix(cls, form: QuadraticForm, matrix: Matrix2) -> "RingElement":
        """
        Read a matrix back as an element of R(q).

        v is recovered from whichever of a, c, b is nonzero.

        Raises:
            ClosureViolation: matrix is not of the R(q) shape
        """
        a, b, c = form.a, form.b, form.c
        u = matrix.m00
        if not a.is_zero():
            v = matrix.m10 / a
        elif not c.is_zero():
            v = -matrix.m01 / c
        elif not b.is_zero():
            v = (matrix.m11 - matrix.m00) / b
        else:
            raise ClosureViolation(f"R({form}) is not determined by a matrix: a = b = c = 0")
        element = cls(form, u, v)
        if element.matrix != matrix:
            raise ClosureViolation(f"{matrix} is not in R({form})")
        return element

    @cached_property
    def matrix(self) -> Matrix2:
        q = self.form
        return Matrix2(self.u, -q.c * self.v, q.a * self.v, self.u + q.b * self.v)

    def det(self) -> Scalar:
        """Determinant; equals u^2 + b u v + a c v^2."""
        return self.matrix.det()

    def __add__(self, other: "RingElement") -> "RingElement":
        _check_same_form(self, other)
        return RingElement.from_matrix(self.form, self.matrix + other.matrix)

    def __sub__(self, other: "RingElement") -> "RingElement":
        _check_same_form(self, other)
        return RingElement.from_matrix(self.form, self.matrix - other.matrix)

    def __mul__(self, other: "RingElement") -> "RingElement":
        _check_same_form(self, other)
        return RingElement.from_matrix(self.form, self.matrix @ other.matrix)

    def __neg__(self) -> "RingElement":
        return RingElement(self.form, -self.u, -self.v)

    def __str__(self) -> str:
        return f"[{self.u}, {self.v}]_q,0"


# ==================== Operations ====================

def embed(form: QuadraticForm, x: Any, y: Any) -> AlgebraElement:
    """[x, y]_q; raises DegenerateDisc when Disc(q) == 0."""
    return AlgebraElement(form, x, y)


def det_of(element: AlgebraElement) -> Scalar:
    return element.det()


def adjugate(element: AlgebraElement) -> Matrix2:
    return element.adjugate()


def ring_one(form: QuadraticForm) -> RingElement:
    return RingElement.one(form)


def pair_product(first: AlgebraElement, second: AlgebraElement) -> RingElement:
    """
    A * B^* as an element of R(q).

    Raises:
        FormMismatch: different forms
    """
    _check_same_form(first, second)
    return RingElement.from_matrix(first.form, first.matrix @ second.adjugate())


def act(g: RingElement, element: AlgebraElement) -> AlgebraElement:
    """
    Module action g * C of R(q) on A(q).

    Raises:
        FormMismatch: different forms
    """
    _check_same_form(g, element)
    return AlgebraElement.from_matrix(element.form, g.matrix @ element.matrix)


def triple(first: AlgebraElement, second: AlgebraElement, third: AlgebraElement) -> AlgebraElement:
    """
    Triple product A * B^* * C in A(q).

    det(A B^* C) = det A * det B * det C.
    """
    _check_same_form(first, third)
    return act(pair_product(first, second), third)


def affine_triple(
    form: QuadraticForm,
    first: Tuple[Any, Any],
    second: Tuple[Any, Any],
    third: Tuple[Any, Any]
) -> Tuple[Scalar, Scalar]:
    """
    The point (x, y) of [x1,y1]_q * [x2,y2]_q^-1 * [x3,y3]_q.

    The middle element is inverted as adj(B)/det(B).

    Raises:
        DegenerateDisc: Disc(q) == 0
        SingularElement: det of the middle element is 0
    """
    a, b, c = (embed(form, *point) for point in (first, second, third))
    middle_det = b.det()
    if middle_det.is_zero():
        raise SingularElement(f"det {b} = 0")
    return triple(a, b, c).scale(middle_det.inverse()).point


def _base_offsets() -> Iterator[Tuple[int, int]]:
    """(1,0), (0,1), (1,1), (2,0), (0,2), (2,1), (1,2), (2,2), (3,0), ..."""
    shell = 1
    while True:
        yield (shell, 0)
        yield (0, shell)
        for j in range(1, shell):
            yield (shell, j)
            yield (j, shell)
        yield (shell, shell)
        shell += 1


def base_pair(form: QuadraticForm, max_shell: int = 8) -> Tuple[AlgebraElement, AlgebraElement]:
    """
    Identity pair (B0, C0) with B0^* * C0 = I, so A * B0^* * C0 = A.

    B0 = [h+i, k+j]_q for the first offset (i, j) with det != 0, and
    C0 = B0 / det B0. The first shell always succeeds: its determinants
    are a, c and a+b+c, which cannot all vanish when Disc(q) != 0.

    Raises:
        DegenerateDisc: Disc(q) == 0
    """
    for i, j in _base_offsets():
        if max(i, j) > max_shell:
            break
        candidate = AlgebraElement.from_centered(form, i, j)
        determinant = candidate.det()
        if not determinant.is_zero():
            logger.debug("base_pair_selected", form=str(form), offset=(i, j), det=str(determinant))
            return candidate, candidate.scale(determinant.inverse())
    raise DegenerateDisc(f"no invertible element found for {form}")


# ==================== Closed formulas (cross-checks) ====================

def pair_product_formula(first: AlgebraElement, second: AlgebraElement) -> Tuple[Scalar, Scalar]:
    """u = a X1 X2 + b X1 Y2 + c Y1 Y2, v = X2 Y1 - X1 Y2 in centered coordinates."""
    q = first.form
    (x1, y1), (x2, y2) = first.centered, second.centered
    return (q.a * x1 * x2 + q.b * x1 * y2 + q.c * y1 * y2, x2 * y1 - x1 * y2)


def act_formula(g: RingElement, element: AlgebraElement) -> Tuple[Scalar, Scalar]:
    """Centered coordinates of g * C: (u X - c v Y, u Y + a v X + b v Y)."""
    q = g.form
    x, y = element.centered
    return (g.u * x - q.c * g.v * y, g.u * y + q.a * g.v * x + q.b * g.v * y)


def ring_product_formula(g: RingElement, h: RingElement) -> Tuple[Scalar, Scalar]:
    """g * h = [u1 u2 - a c v1 v2, u1 v2 + v1 u2 + b v1 v2], as matrix multiplication gives."""
    q = g.form
    return (
        g.u * h.u - q.a * q.c * g.v * h.v,
        g.u * h.v + g.v * h.u + q.b * g.v * h.v,
    )


def printed_ring_product(g: RingElement, h: RingElement) -> Tuple[Scalar, Scalar]:
    """
    The variant with last term b u1 v2 found in the literature.

    Kept only to demonstrate that it disagrees with matrix multiplication;
    see docs/guides/MATH_NOTES.md.
    """
    q = g.form
    return (
        g.u * h.u - q.a * q.c * g.v * h.v,
        g.u * h.v + g.v * h.u + q.b * g.u * h.v,
    )
