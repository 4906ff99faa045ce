"""
Deterministic random forms, scalars and points for property sweeps.

Everything is drawn from a seeded random.Random, so the same seed gives
the same sequence on every run.
"""

from enum import Enum
from random import Random
from typing import Iterable, List, Tuple

import structlog

from services.errors import InfeasibleSize
from services.numeric import QQ, Rational, Scalar, ScalarField
from services.quadform import QuadraticForm

logger = structlog.get_logger()

COEFFICIENT_BOUND = 20

# Linear factors for det_zero forms; products stay within COEFFICIENT_BOUND.
LINEAR_FACTOR_BOUND = 3


class FormConstraint(str, Enum):
    """Constraints accepted by random_form_sampler."""
    DISC_NONZERO = "disc_nonzero"
    DET_NONZERO = "det_nonzero"
    DISC_ZERO = "disc_zero"
    DET_ZERO = "det_zero"
    HOMOGENEOUS = "homogeneous"


_CONFLICTS = [
    {FormConstraint.DISC_ZERO, FormConstraint.DISC_NONZERO},
    {FormConstraint.DET_ZERO, FormConstraint.DET_NONZERO},
    {FormConstraint.HOMOGENEOUS, FormConstraint.DET_NONZERO},
]


def random_rational(rng: Random, bound: int = COEFFICIENT_BOUND) -> Rational:
    """n/d with |n| <= bound and 1 <= d <= bound."""
    return QQ.random_element(rng, bound)


def random_scalar(rng: Random, field: ScalarField = QQ, bound: int = COEFFICIENT_BOUND) -> Scalar:
    if field.is_finite:
        return field.random_element(rng)
    return random_rational(rng, bound)


def random_pair(rng: Random, field: ScalarField = QQ, bound: int = COEFFICIENT_BOUND) -> Tuple[Scalar, Scalar]:
    return random_scalar(rng, field, bound), random_scalar(rng, field, bound)


def _parabolic(rng: Random, field: ScalarField, homogeneous: bool) -> QuadraticForm:
    # lambda (r x + s y)^2 plus a random linear part
    lam = field(rng.randint(1, 5) * rng.choice((-1, 1)))
    r, s = rng.choice([(r, s) for r in range(-2, 3) for s in range(-2, 3) if (r, s) != (0, 0)])
    r, s = field(r), field(s)
    a, b, c = lam * r * r, 2 * lam * r * s, lam * s * s
    if homogeneous:
        return QuadraticForm(a, b, c, field=field)
    d, e, f = (random_scalar(rng, field) for _ in range(3))
    return QuadraticForm(a, b, c, d, e, f, field=field)


def _line_pair(rng: Random, field: ScalarField, homogeneous: bool) -> QuadraticForm:
    # (a1 x + b1 y + c1)(a2 x + b2 y + c2) has rank <= 2
    def factor():
        return [
            field(rng.randint(-LINEAR_FACTOR_BOUND, LINEAR_FACTOR_BOUND))
            for _ in range(2)
        ] + [field(0) if homogeneous else field(rng.randint(-LINEAR_FACTOR_BOUND, LINEAR_FACTOR_BOUND))]

    (a1, b1, c1), (a2, b2, c2) = factor(), factor()
    return QuadraticForm(
        a1 * a2, a1 * b2 + b1 * a2, b1 * b2,
        a1 * c2 + c1 * a2, b1 * c2 + c1 * b2, c1 * c2,
        field=field
    )


def _generic(rng: Random, field: ScalarField, homogeneous: bool) -> QuadraticForm:
    a, b, c = (random_scalar(rng, field) for _ in range(3))
    if homogeneous:
        return QuadraticForm(a, b, c, field=field)
    d, e, f = (random_scalar(rng, field) for _ in range(3))
    return QuadraticForm(a, b, c, d, e, f, field=field)


def _satisfies(form: QuadraticForm, constraints: set) -> bool:
    checks = {
        FormConstraint.DISC_NONZERO: lambda: not form.disc.is_zero(),
        FormConstraint.DET_NONZERO: lambda: not form.det3.is_zero(),
        FormConstraint.DISC_ZERO: lambda: form.disc.is_zero(),
        FormConstraint.DET_ZERO: lambda: form.det3.is_zero(),
        FormConstraint.HOMOGENEOUS: lambda: form.is_homogeneous,
    }
    return all(checks[constraint]() for constraint in constraints)


def random_form_sampler(
    seed: int,
    count: int,
    constraints: Iterable[FormConstraint] = (),
    field: ScalarField = QQ,
    max_attempts: int = 10_000
) -> List[QuadraticForm]:
    """
    Deterministic pseudo-random forms satisfying every constraint.

    Coefficients are n/d with |n|, |d| <= 20 over Q. Disc-zero forms are
    built as lambda (r x + s y)^2 plus a linear part, Det-zero forms as
    products of two linear factors; everything else is rejection sampled.

    Args:
        seed: Random seed
        count: Number of forms
        constraints: FormConstraint values (or their string names)
        field: Scalar field for the coefficients
        max_attempts: Draws allowed per form

    Returns:
        count forms; the same seed gives the same list

    Raises:
        ValueError: contradictory constraints
        InfeasibleSize: no form found within max_attempts draws
    """
    wanted = {FormConstraint(constraint) for constraint in constraints}
    for conflict in _CONFLICTS:
        if conflict <= wanted:
            raise ValueError(f"contradictory constraints: {sorted(c.value for c in conflict)}")

    homogeneous = FormConstraint.HOMOGENEOUS in wanted
    if FormConstraint.DET_ZERO in wanted:
        draw = _line_pair
    elif FormConstraint.DISC_ZERO in wanted:
        draw = _parabolic
    else:
        draw = _generic

    rng = Random(seed)
    forms = []
    for _ in range(count):
        for _ in range(max_attempts):
            form = draw(rng, field, homogeneous)
            if _satisfies(form, wanted):
                forms.append(form)
                break
        else:
            raise InfeasibleSize(
                f"no form satisfying {sorted(c.value for c in wanted)} in {max_attempts} draws"
            )

    logger.debug(
        "forms_sampled",
        seed=seed,
        count=count,
        constraints=sorted(c.value for c in wanted),
        field=field.name
    )
    return forms
