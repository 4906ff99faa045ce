"""
Argument parsing helpers shared by the subcommands.

Comma-separated scalar tuples ("1,2", "3/5,4/5", "1,1,-2") become exact
scalars; anything malformed raises ParseError so the command exits with
the usage code.
"""

import argparse
import re
from typing import List, Optional, Sequence, Tuple

from services.errors import ParseError
from services.numeric import QQ, Rational, Scalar, ScalarField, get_field


# "-1/2", "-3/5,4/5", "-1,0,2"
_NEGATIVE_VALUE = re.compile(r"^-\d+(?:/\d+)?(?:,-?\d+(?:/\d+)?)*$")


def join_negative_values(argv: Sequence[str]) -> List[str]:
    """
    Rewrite "--flag -1/2" as "--flag=-1/2".

    argparse only recognises plain negative decimals as values, so a
    negative rational or point after an option would otherwise be read as
    an unknown option.
    """
    joined: List[str] = []
    for token in argv:
        previous = joined[-1] if joined else ""
        if (previous.startswith("--") and "=" not in previous
                and _NEGATIVE_VALUE.match(token)):
            joined[-1] = f"{previous}={token}"
        else:
            joined.append(token)
    return joined


def parse_scalars(text: str, arity: int, field: ScalarField = QQ) -> Tuple[Scalar, ...]:
    """
    Parse "v1,...,vn" into exactly `arity` scalars of `field`.

    Raises:
        ParseError: wrong count or a malformed rational
    """
    parts = text.split(",")
    if len(parts) != arity:
        raise ParseError(f"expected {arity} comma-separated values, got {text!r}")
    return tuple(field(Rational.parse(part)) for part in parts)


def parse_points(texts: Optional[Sequence[str]], count: int, arity: int, flag: str,
                 field: ScalarField = QQ) -> List[Tuple[Scalar, ...]]:
    """Exactly `count` repeated flags, each an `arity`-tuple."""
    texts = texts or []
    if len(texts) != count:
        raise ParseError(f"{flag} must be given {count} times, got {len(texts)}")
    return [parse_scalars(text, arity, field) for text in texts]


def field_from_args(args: argparse.Namespace) -> ScalarField:
    """F_p for --mod p, else Q."""
    modulus = getattr(args, "mod", None)
    return QQ if modulus is None else get_field(modulus)


def positive_int(text: str) -> int:
    """argparse type for integers >= 1."""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def strs(values: Sequence[Scalar]) -> List[str]:
    return [str(value) for value in values]
