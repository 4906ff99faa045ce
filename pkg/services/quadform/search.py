"""
Bounded search for rational points by height.

A candidate is (p/r, s/r) with gcd(p, s, r) = 1, r >= 1 and height
H = max(r, |p|, |s|). Candidates are visited by increasing H, then by
(r, p, s) ascending, so the first hit does not depend on the bound once
the bound reaches its height.
"""

import math
from typing import Any, Iterator, Tuple

import structlog

from services.errors import NotFound
from services.numeric import Rational
from services.quadform.form import QuadraticForm

logger = structlog.get_logger()


def iter_points_by_height(height_bound: int) -> Iterator[Tuple[Rational, Rational]]:
    """
    Yield every rational pair of height <= height_bound exactly once.

    Args:
        height_bound: Largest height H to visit (>= 1)
    """
    if height_bound < 1:
        raise ValueError(f"height_bound must be >= 1, got {height_bound}")
    for height in range(1, height_bound + 1):
        for r in range(1, height + 1):
            for p in range(-height, height + 1):
                for s in range(-height, height + 1):
                    if max(r, abs(p), abs(s)) != height:
                        continue
                    if math.gcd(p, s, r) != 1:
                        continue
                    yield Rational(p, r), Rational(s, r)


def search_representation(
    form: QuadraticForm,
    target: Any,
    height_bound: int
) -> Tuple[Rational, Rational]:
    """
    First (x, y) in height order with q(x, y) == target.

    Args:
        form: Quadratic form over Q
        target: Value to represent
        height_bound: Search bound (>= 1)

    Returns:
        (x, y)

    Raises:
        NotFound: nothing within the bound (not a proof of non-representability)
    """
    target = form.field(target)
    visited = 0
    for x, y in iter_points_by_height(height_bound):
        visited += 1
        if form.evaluate(x, y) == target:
            logger.debug(
                "representation_found",
                form=str(form),
                target=str(target),
                x=str(x),
                y=str(y),
                visited=visited
            )
            return x, y

    logger.info(
        "representation_not_found",
        form=str(form),
        target=str(target),
        height_bound=height_bound,
        visited=visited
    )
    raise NotFound(f"no (x, y) of height <= {height_bound} with {form} = {target}")
