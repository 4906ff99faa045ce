"""
The value set of a quadratic form as a commutative ternary group.

For values alpha with Disc(q) * alpha != Det(q):

    alpha * beta^* * gamma
        = (Disc * alpha * gamma - Det * (alpha - beta + gamma)) / (Disc * beta - Det)

When Disc != 0 this is (alpha + m)(gamma + m)/(beta + m) - m, the value of
q at the affine triple product of representing points. When Disc == 0 it
reduces to alpha - beta + gamma. One code path serves every case.

Representability of alpha by q over Q is not decided here: a witness point
is optional metadata, found by bounded search when asked for.
"""

from dataclasses import dataclass
from typing import Any, Optional, Tuple

import structlog

from services.errors import DomainViolation, NotFound
from services.numeric import Scalar
from services.quadform import QuadraticForm, search_representation
from services.ternary_core import CommutativeTernaryGroup

logger = structlog.get_logger()


def value_in_domain(form: QuadraticForm, alpha: Any) -> bool:
    """True iff Disc(q) * alpha != Det(q)."""
    return form.disc * form.field(alpha) != form.det3


def _require_domain(form: QuadraticForm, alpha: Any) -> Scalar:
    alpha = form.field(alpha)
    if not value_in_domain(form, alpha):
        raise DomainViolation(f"Disc * {alpha} == Det for {form}")
    return alpha


def value_triple(form: QuadraticForm, alpha: Any, beta: Any, gamma: Any) -> Scalar:
    """
    alpha * beta^* * gamma on the value set.

    Raises:
        DomainViolation: an argument with Disc(q) * value == Det(q)
    """
    alpha, beta, gamma = (_require_domain(form, value) for value in (alpha, beta, gamma))
    disc, det = form.disc, form.det3
    return (disc * alpha * gamma - det * (alpha - beta + gamma)) / (disc * beta - det)


def shifted_product(form: QuadraticForm, alpha: Any, beta: Any, gamma: Any) -> Scalar:
    """(alpha + m)(gamma + m)/(beta + m) - m; Disc(q) != 0 only. Cross-check oracle."""
    m = form.m_value()
    alpha, beta, gamma = (form.field(value) for value in (alpha, beta, gamma))
    return (alpha + m) * (gamma + m) / (beta + m) - m


def point_difference(
    first: Tuple[Any, Any],
    second: Tuple[Any, Any],
    third: Tuple[Any, Any]
) -> Tuple[Any, Any]:
    """
    P - Q + R.

    Test oracle for the Disc = 0 case, where the point-level product
    degenerates to this sum; not a group law on points in general.
    """
    return (first[0] - second[0] + third[0], first[1] - second[1] + third[1])


def value_witness_search(form: QuadraticForm, alpha: Any, height_bound: int) -> Tuple[Scalar, Scalar]:
    """
    First (x, y) in height order with q(x, y) == alpha.

    Raises:
        NotFound: nothing within the bound (not a proof of non-representability)
    """
    return search_representation(form, alpha, height_bound)


@dataclass(frozen=True)
class ValueElement:
    """
    A value alpha of q in the ternary group domain.

    Attributes:
        alpha: The value
        witness: (x, y) with q(x, y) == alpha, if known
        verified: True iff a witness is attached
    """
    alpha: Scalar
    witness: Optional[Tuple[Scalar, Scalar]] = None

    @property
    def verified(self) -> bool:
        return self.witness is not None

    @classmethod
    def create(
        cls,
        form: QuadraticForm,
        alpha: Any,
        witness: Optional[Tuple[Any, Any]] = None,
        search_bound: Optional[int] = None
    ) -> "ValueElement":
        """
        Build a value element.

        With a witness, it is checked; otherwise an optional bounded search
        looks for one; failing both, alpha is accepted unverified.

        Raises:
            DomainViolation: Disc * alpha == Det, or a witness that does not represent alpha
        """
        alpha = _require_domain(form, alpha)
        if witness is not None:
            x, y = form.field(witness[0]), form.field(witness[1])
            if form.evaluate(x, y) != alpha:
                raise DomainViolation(f"q({x}, {y}) = {form.evaluate(x, y)} != {alpha}")
            return cls(alpha, (x, y))

        if search_bound is not None:
            try:
                return cls(alpha, value_witness_search(form, alpha, search_bound))
            except NotFound:
                logger.warning(
                    "value_accepted_unverified",
                    form=str(form),
                    alpha=str(alpha),
                    height_bound=search_bound
                )
        return cls(alpha)

    def __str__(self) -> str:
        return str(self.alpha)


class ValueGroup(CommutativeTernaryGroup[Scalar]):
    """
    The value set with alpha * beta^* * gamma and identity pair (alpha0, alpha0).

    Args:
        form: Quadratic form
        base: Any domain value alpha0
    """

    def __init__(self, form: QuadraticForm, base: Any):
        self.form = form
        base = _require_domain(form, base)
        super().__init__((base, base))

    def triple(self, first: Scalar, second: Scalar, third: Scalar) -> Scalar:
        return value_triple(self.form, first, second, third)

    def contains(self, element: Any) -> bool:
        try:
            return value_in_domain(self.form, element)
        except (TypeError, ValueError):
            return False

    def describe(self) -> str:
        return f"values of {self.form} based at {self.base_pair[0]}"

    def __eq__(self, other: Any) -> bool:
        return (
            isinstance(other, ValueGroup)
            and self.form == other.form
            and self.base_pair == other.base_pair
        )

    def __hash__(self) -> int:
        return hash((self.form, self.base_pair))
