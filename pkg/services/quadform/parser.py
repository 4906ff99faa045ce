"""
Quadratic form text syntax.

Grammar (whitespace insignificant):

    form    := sign? term (sign term)*
    term    := factor ("*"? factor)*
    factor  := number | var ("^" digits)?
    number  := digits ("/" digits)?
    var     := "x" | "y"

Implicit multiplication is allowed ("3xy", "1/2 y"); powers are written
with "^". Like terms are combined. Any term of total degree above 2 is a
DegreeError.
"""

import re
from typing import Dict, List, NamedTuple, Tuple

from services.errors import DegreeError, ParseError
from services.numeric import QQ, Rational, ScalarField
from services.quadform.form import QuadraticForm

_TOKEN_PATTERN = re.compile(
    r"(?P<num>\d+(?:/\d+)?)|(?P<var>[xyXY])|(?P<op>[-+*^])|(?P<ws>\s+)|(?P<bad>.)"
)

# monomial (x-degree, y-degree) -> coefficient slot
_SLOTS: Dict[Tuple[int, int], str] = {
    (2, 0): "a",
    (1, 1): "b",
    (0, 2): "c",
    (1, 0): "d",
    (0, 1): "e",
    (0, 0): "f",
}

_MONOMIALS = [("a", "x^2"), ("b", "x*y"), ("c", "y^2"), ("d", "x"), ("e", "y"), ("f", "")]


class Token(NamedTuple):
    kind: str
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    """Split form text into tokens, dropping whitespace."""
    tokens = []
    for match in _TOKEN_PATTERN.finditer(text):
        kind = match.lastgroup
        if kind == "ws":
            continue
        if kind == "bad":
            raise ParseError(f"unexpected character {match.group()!r}", match.start())
        tokens.append(Token(kind, match.group().lower(), match.start()))
    return tokens


class _FormParser:
    """Recursive-descent parser over the token list."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    def _peek(self) -> Token:
        if self.index < len(self.tokens):
            return self.tokens[self.index]
        return Token("end", "", len(self.text))

    def _advance(self) -> Token:
        token = self._peek()
        self.index += 1
        return token

    def parse(self) -> Dict[str, Rational]:
        if not self.tokens:
            raise ParseError("empty form", 0)

        totals = {slot: Rational(0) for slot in _SLOTS.values()}
        sign = self._sign(required=False)
        while True:
            slot, coefficient = self._term()
            totals[slot] = totals[slot] + coefficient * sign
            if self._peek().kind == "end":
                return totals
            sign = self._sign(required=True)

    def _sign(self, required: bool) -> int:
        token = self._peek()
        if token.kind == "op" and token.text in "+-":
            self._advance()
            return -1 if token.text == "-" else 1
        if required:
            raise ParseError(f"expected '+' or '-', found {token.text or 'end'!r}", token.position)
        return 1

    def _term(self) -> Tuple[str, Rational]:
        start = self._peek().position
        coefficient = Rational(1)
        x_degree = y_degree = 0
        factors = 0

        while True:
            token = self._peek()
            if token.kind == "num":
                self._advance()
                coefficient = coefficient * Rational.parse(token.text)
            elif token.kind == "var":
                self._advance()
                exponent = self._exponent()
                if token.text == "x":
                    x_degree += exponent
                else:
                    y_degree += exponent
            else:
                raise ParseError(f"expected a number or variable, found {token.text or 'end'!r}",
                                 token.position)
            factors += 1

            following = self._peek()
            if following.kind == "op" and following.text == "*":
                self._advance()
                continue
            if following.kind in ("num", "var"):
                continue
            break

        if x_degree + y_degree > 2:
            raise DegreeError(f"term of degree {x_degree + y_degree}", start)
        return _SLOTS[(x_degree, y_degree)], coefficient

    def _exponent(self) -> int:
        token = self._peek()
        if not (token.kind == "op" and token.text == "^"):
            return 1
        self._advance()
        power = self._advance()
        if power.kind != "num" or "/" in power.text:
            raise ParseError("expected an integer exponent", power.position)
        exponent = int(power.text)
        if exponent > 2:
            raise DegreeError(f"power {exponent} exceeds 2", power.position)
        return exponent


def parse_form(text: str, field: ScalarField = QQ) -> QuadraticForm:
    """
    Parse a polynomial in x, y of total degree <= 2.

    Args:
        text: e.g. "x^2+y^2-1", "2x^2+3x*y+4y^2+x", "1/2 y"
        field: Scalar field for the coefficients (rationals reduced into F_p)

    Returns:
        QuadraticForm

    Raises:
        ParseError: malformed input (with position)
        DegreeError: a term of degree above 2
    """
    totals = _FormParser(text).parse()
    form = QuadraticForm(**totals)
    return form if field == QQ else form.reduce(field)


def render_form(form: QuadraticForm) -> str:
    """
    Canonical text of a form; parse_form(render_form(q)) == q over Q.

    Example:
        render_form(QuadraticForm(2, 3, 4, 1, 0, 0))  # "2*x^2 + 3*x*y + 4*y^2 + x"
    """
    parts: List[str] = []
    for slot, monomial in _MONOMIALS:
        coefficient = getattr(form, slot)
        if coefficient.is_zero():
            continue
        negative = isinstance(coefficient, Rational) and coefficient < 0
        magnitude = abs(coefficient) if negative else coefficient
        if not monomial:
            body = str(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{magnitude}*{monomial}"

        if not parts:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(parts) if parts else "0"
