"""
Binary quadratic forms q(x,y) = a x^2 + b x y + c y^2 + d x + e y + f.

Invariants:
    Det(q)  = det [[a, b/2, d/2], [b/2, c, e/2], [d/2, e/2, f]]
    Disc(q) = det [[a, b/2], [b/2, c]] = a c - b^2/4

When Disc(q) != 0 the form has a center (h, k), its unique critical point,
and m = -Det(q)/Disc(q), with

    q(x, y) = a (x-h)^2 + b (x-h)(y-k) + c (y-k)^2 - m
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, Optional, Tuple

from services.errors import DegenerateDisc, DivisionByZero, DomainViolation
from services.numeric import QQ, Scalar, ScalarField


@dataclass(frozen=True)
class FormInvariants:
    """
    Derived invariants of a quadratic form.

    Attributes:
        det3: Det(q)
        disc: Disc(q)
        h: Center abscissa, None when disc == 0
        k: Center ordinate, None when disc == 0
        m: -det3/disc, None when disc == 0
    """
    det3: Scalar
    disc: Scalar
    h: Optional[Scalar] = None
    k: Optional[Scalar] = None
    m: Optional[Scalar] = None

    @property
    def has_center(self) -> bool:
        return self.h is not None

    def to_dict(self) -> Dict[str, Optional[str]]:
        """Convert to dictionary with rationals rendered as strings."""
        return {
            "det": str(self.det3),
            "disc": str(self.disc),
            "h": None if self.h is None else str(self.h),
            "k": None if self.k is None else str(self.k),
            "m": None if self.m is None else str(self.m),
        }


@dataclass(frozen=True)
class QuadraticForm:
    """
    Quadratic form with exact coefficients in a scalar field.

    Coefficients are coerced into `field` on construction, so plain ints,
    Fractions and "n/d" strings are accepted.

    Example:
        q = QuadraticForm(1, 0, 1, 0, 0, -1)   # x^2 + y^2 - 1
        q.disc                                 # 1
        q.center()                             # (0, 0)
        q.evaluate(Rational(3, 5), Rational(4, 5))  # 0
    """
    a: Any
    b: Any
    c: Any
    d: Any = 0
    e: Any = 0
    f: Any = 0
    field: ScalarField = QQ

    def __post_init__(self):
        for name in ("a", "b", "c", "d", "e", "f"):
            object.__setattr__(self, name, self.field(getattr(self, name)))

    # ---- construction helpers ----

    @classmethod
    def homogeneous(cls, a: Any, b: Any, c: Any, field: ScalarField = QQ) -> "QuadraticForm":
        """The form a x^2 + b x y + c y^2."""
        return cls(a, b, c, 0, 0, 0, field=field)

    def coefficients(self) -> Tuple[Scalar, ...]:
        return (self.a, self.b, self.c, self.d, self.e, self.f)

    def reduce(self, field: ScalarField) -> "QuadraticForm":
        """
        Map the coefficients into another field (typically Q → F_p).

        Raises:
            DomainViolation: a coefficient denominator vanishes in `field`
        """
        try:
            return QuadraticForm(*self.coefficients(), field=field)
        except DivisionByZero as exc:
            raise DomainViolation(f"{self} cannot be reduced into {field.name}: {exc}") from exc

    def quadratic_part(self) -> "QuadraticForm":
        return QuadraticForm(self.a, self.b, self.c, 0, 0, 0, field=self.field)

    @property
    def is_homogeneous(self) -> bool:
        return self.d.is_zero() and self.e.is_zero() and self.f.is_zero()

    # ---- invariants ----

    @cached_property
    def disc(self) -> Scalar:
        """Disc(q) = a c - b^2/4."""
        return self.a * self.c - self.b * self.b / 4

    @cached_property
    def det3(self) -> Scalar:
        """Det(q): cofactor expansion of the symmetric 3x3 coefficient matrix."""
        a, c, f = self.a, self.c, self.f
        b2, d2, e2 = self.b / 2, self.d / 2, self.e / 2
        return (
            a * (c * f - e2 * e2)
            - b2 * (b2 * f - e2 * d2)
            + d2 * (b2 * e2 - c * d2)
        )

    @cached_property
    def _invariants(self) -> FormInvariants:
        disc, det3 = self.disc, self.det3
        if disc.is_zero():
            return FormInvariants(det3=det3, disc=disc)
        b2, d2, e2 = self.b / 2, self.d / 2, self.e / 2
        h = (b2 * e2 - d2 * self.c) / disc
        k = -(self.a * e2 - d2 * b2) / disc
        return FormInvariants(det3=det3, disc=disc, h=h, k=k, m=-det3 / disc)

    def invariants(self) -> FormInvariants:
        """All invariants, computed once and cached."""
        return self._invariants

    @property
    def has_center(self) -> bool:
        return not self.disc.is_zero()

    def require_center(self) -> FormInvariants:
        """
        Invariants of a form with Disc(q) != 0.

        Raises:
            DegenerateDisc: Disc(q) == 0
        """
        invariants = self._invariants
        if not invariants.has_center:
            raise DegenerateDisc(f"Disc({self}) = 0")
        return invariants

    def center(self) -> Tuple[Scalar, Scalar]:
        """(h_q, k_q); raises DegenerateDisc when Disc(q) == 0."""
        invariants = self.require_center()
        return invariants.h, invariants.k

    def m_value(self) -> Scalar:
        """m_q = -Det(q)/Disc(q); raises DegenerateDisc when Disc(q) == 0."""
        return self.require_center().m

    # ---- evaluation ----

    def evaluate(self, x: Any, y: Any) -> Scalar:
        """q(x, y), exact."""
        x, y = self.field(x), self.field(y)
        return (
            self.a * x * x + self.b * x * y + self.c * y * y
            + self.d * x + self.e * y + self.f
        )

    def centered_evaluate(self, x: Any, y: Any) -> Scalar:
        """a (x-h)^2 + b (x-h)(y-k) + c (y-k)^2 - m; equals evaluate(x, y)."""
        invariants = self.require_center()
        dx = self.field(x) - invariants.h
        dy = self.field(y) - invariants.k
        return self.a * dx * dx + self.b * dx * dy + self.c * dy * dy - invariants.m

    def gradient(self, x: Any, y: Any) -> Tuple[Scalar, Scalar]:
        """(dq/dx, dq/dy) at (x, y)."""
        x, y = self.field(x), self.field(y)
        return (
            2 * self.a * x + self.b * y + self.d,
            self.b * x + 2 * self.c * y + self.e,
        )

    def __str__(self) -> str:
        from services.quadform.parser import render_form
        return render_form(self)
