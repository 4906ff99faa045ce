"""
Scalar Field Factory

Resolves a field specification ("Q", "QQ", "F_7", "GF(7)", "7") to a
ScalarField instance.
"""

import re
from typing import Optional, Union

import structlog

from services.errors import ParseError
from services.numeric.base import ScalarField
from services.numeric.prime_field import GF
from services.numeric.rational import QQ

logger = structlog.get_logger()

_PRIME_SPEC = re.compile(r"^\s*(?:F_?|GF\(?)?(\d+)\)?\s*$", re.IGNORECASE)


def get_field(spec: Optional[Union[str, int]] = None) -> ScalarField:
    """
    Get a scalar field.

    Resolution:
    1. None, "Q", "QQ" → the rationals
    2. int or "F_p" / "GF(p)" / "p" → the prime field F_p (validated)

    Args:
        spec: Field specification

    Returns:
        ScalarField instance

    Raises:
        ParseError: unrecognised specification
        EvenCharacteristic / NotPrime: invalid modulus
    """
    if spec is None:
        return QQ
    if isinstance(spec, int):
        return GF(spec)
    if spec.strip().upper() in ("Q", "QQ"):
        return QQ
    match = _PRIME_SPEC.match(spec)
    if match is None:
        raise ParseError(f"unknown field specification {spec!r}", 0)
    field = GF(int(match.group(1)))
    logger.debug("scalar_field_selected", field=field.name)
    return field
