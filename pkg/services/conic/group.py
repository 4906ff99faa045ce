"""
Conic points as a commutative ternary group, wired into ternary_core.
"""

from typing import Any, Iterable, List

import structlog

from services.conic.conic import Conic, ConicPoint
from services.ternary_core import (
    CommutativeTernaryGroup,
    Symbol,
    make_symbol,
    transitive_witness,
)

logger = structlog.get_logger()


class ConicGroup(CommutativeTernaryGroup[ConicPoint]):
    """
    Points of a conic with P * Q^* * R and identity pair (base, base).

    The symbol classes P * Q^* form an abelian group acting simply
    transitively on the points.

    Example:
        circle = Conic(parse_form("x^2+y^2-1"))
        group = circle.group(ConicPoint(1, 0))
        g = group.witness(ConicPoint(0, 1), ConicPoint(1, 0))   # rotation by 90 degrees
        group.act(g, ConicPoint(Rational(3, 5), Rational(4, 5)))  # (-4/5, 3/5)
    """

    def __init__(self, conic: Conic, base: ConicPoint):
        self.conic = conic
        super().__init__(conic.identity_pair(conic.point(base.x, base.y)))

    @property
    def base(self) -> ConicPoint:
        return self.base_pair[0]

    def triple(self, first: ConicPoint, second: ConicPoint, third: ConicPoint) -> ConicPoint:
        return self.conic.triple(first, second, third)

    def contains(self, element: Any) -> bool:
        return isinstance(element, ConicPoint) and self.conic.contains(element.x, element.y)

    def describe(self) -> str:
        return f"{self.conic} based at ({self.base})"

    # ---- symbol conveniences ----

    def symbol(self, left: ConicPoint, right: ConicPoint) -> Symbol:
        return make_symbol(self, left, right)

    def witness(self, target: ConicPoint, source: ConicPoint) -> Symbol:
        return transitive_witness(self, target, source)

    def act(self, symbol: Symbol, point: ConicPoint) -> ConicPoint:
        return self.triple(symbol.left, symbol.right, self.require(point))

    def symbol_classes(self, points: Iterable[ConicPoint]) -> List[Symbol]:
        """Distinct classes among all symbols P * Q^* with P, Q in points."""
        points = list(points)
        classes = {}
        for left in points:
            for right in points:
                symbol = make_symbol(self, left, right)
                classes.setdefault(symbol.left, symbol)
        logger.debug("symbol_classes_counted", conic=str(self.conic.form), classes=len(classes))
        return list(classes.values())

    def __eq__(self, other: Any) -> bool:
        return (
            isinstance(other, ConicGroup)
            and self.conic == other.conic
            and self.base_pair == other.base_pair
        )

    def __hash__(self) -> int:
        return hash((self.conic, self.base_pair))


def conic_group(conic: Conic, base: ConicPoint) -> ConicGroup:
    """
    Build the ternary group structure of a conic.

    Raises:
        NotOnConic: base is not on the conic
    """
    return ConicGroup(conic, base)
