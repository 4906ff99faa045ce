"""
Exception hierarchy for qform.

Every error raised by the library derives from QFormError and from the
closest builtin, so callers can catch either.
"""
from typing import Optional


class QFormError(Exception):
    """Base class for all library errors."""


# ==================== Scalars ====================

class DivisionByZero(QFormError, ZeroDivisionError):
    """Division by, or inversion of, a zero scalar."""


class ModulusMismatch(QFormError, ValueError):
    """Prime-field operands with different moduli."""


class EvenCharacteristic(QFormError, ValueError):
    """A prime field of characteristic 2 was requested."""


class NotPrime(QFormError, ValueError):
    """A prime-field modulus that is not prime."""


# ==================== Parsing ====================

class ParseError(QFormError, ValueError):
    """Malformed form, rational or point text."""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class DegreeError(ParseError):
    """A term of total degree above 2 in a quadratic form."""


# ==================== Forms and algebra ====================

class DegenerateDisc(QFormError, ValueError):
    """Operation needs Disc(q) != 0."""


class DegenerateConic(QFormError, ValueError):
    """Conic needs Det(q) != 0 and Disc(q) != 0."""


class FormMismatch(QFormError, ValueError):
    """Elements built over different quadratic forms."""


class SingularElement(QFormError, ValueError):
    """Inverting an element of determinant zero."""


class ClosureViolation(QFormError, ArithmeticError):
    """A matrix product left the expected matrix shape."""


class StructureMismatch(QFormError, ValueError):
    """Symbols or carriers from different ternary structures."""


# ==================== Conics, values, composition ====================

class NotOnConic(QFormError, ValueError):
    """A point that does not satisfy q(x, y) = 0."""


class NotFound(QFormError, LookupError):
    """Bounded search found nothing (not a proof of absence)."""


class DomainViolation(QFormError, ValueError):
    """A value with Disc(q) * alpha == Det(q), or a coefficient that cannot be reduced."""


class NotOnVariety(QFormError, ValueError):
    """A projective point off a x^2 + b y^2 + c z^2 = 0."""


class ZeroPoint(QFormError, ValueError):
    """The all-zero projective triple."""


class IdentityViolation(QFormError, ArithmeticError):
    """A composition identity failed its runtime check."""


# ==================== Oracle ====================

class InfeasibleSize(QFormError, ValueError):
    """Exhaustive sweep larger than the configured ceiling."""


USAGE_ERRORS = (ParseError,)
