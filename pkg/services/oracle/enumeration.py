"""
Conics over F_p and exhaustive point enumeration.
"""

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, List

import structlog

from config import settings
from services.conic import Conic, ConicPoint
from services.errors import InfeasibleSize
from services.numeric import GF, PrimeField
from services.quadform import QuadraticForm

logger = structlog.get_logger()


@dataclass(frozen=True)
class FiniteConic(Conic):
    """
    A conic with coefficients in F_p, p odd.

    Det and Disc are taken in F_p; both must be nonzero there.

    Example:
        circle = FiniteConic.over(parse_form("x^2+y^2-1"), 5)
        enumerate_conic_points(circle)  # (0,1), (0,4), (1,0), (4,0)

    Raises:
        DegenerateConic: Det or Disc vanishes mod p
        TypeError: form is not over a prime field
    """

    def __post_init__(self):
        if not isinstance(self.form.field, PrimeField):
            raise TypeError(f"{self.form} is over {self.form.field.name}, not a prime field")
        super().__post_init__()

    @classmethod
    def over(cls, form: QuadraticForm, p: int) -> "FiniteConic":
        """
        Reduce a form mod p.

        Raises:
            InfeasibleSize: p above settings.oracle_max_prime
            DomainViolation: a coefficient denominator divisible by p
        """
        if p > settings.oracle_max_prime:
            raise InfeasibleSize(f"p = {p} exceeds the oracle limit {settings.oracle_max_prime}")
        return cls(form.reduce(GF(p)))

    @property
    def p(self) -> int:
        return self.form.field.characteristic


def _square_roots(p: int) -> Dict[int, List[int]]:
    roots = defaultdict(list)
    for s in range(p):
        roots[s * s % p].append(s)
    return roots


def enumerate_conic_points(conic: FiniteConic) -> List[ConicPoint]:
    """
    All (x, y) in F_p^2 with q(x, y) = 0, in lexicographic order.

    Solves q(x, y) = 0 as a quadratic in y for each x.
    """
    field = conic.field
    p = conic.p
    q = conic.form
    roots = _square_roots(p)

    points = []
    for xi in range(p):
        x = field(xi)
        # c y^2 + (b x + e) y + (a x^2 + d x + f)
        linear = q.b * x + q.e
        constant = q.a * x * x + q.d * x + q.f
        if q.c.is_zero():
            if not linear.is_zero():
                ys = [-constant / linear]
            elif constant.is_zero():
                ys = list(field.elements())
            else:
                ys = []
        else:
            delta = linear * linear - 4 * q.c * constant
            ys = [(-linear + s) / (2 * q.c) for s in roots.get(delta.value, [])]
        for y in sorted(set(ys), key=lambda element: element.value):
            points.append(ConicPoint(x, y))

    logger.debug("conic_points_enumerated", conic=str(q), p=p, points=len(points))
    return points
