"""
Formal symbols A * B^* over a ternary structure.

Two symbols are equivalent when A * B^* * C0 == C * D^* * C0. Every symbol
is equivalent to one of the form A' * B0^* with

    A' = A * B0^* * phi(B),   phi(B) = C0 * B^* * C0,

which is the canonical representative used for all arithmetic.

Over a ternary algebra the classes form a commutative ring R acting on the
carrier; over a commutative ternary group they form an abelian group G
acting transitively on the carrier.
"""

from dataclasses import dataclass
from typing import Any

from services.errors import StructureMismatch
from services.ternary_core.base import (
    CommutativeTernaryGroup,
    TernaryAlgebra,
    TernaryStructure,
)


@dataclass(frozen=True, eq=False)
class Symbol:
    """
    The formal symbol left * right^*.

    Equality is the symbol equivalence, not component equality.

    Attributes:
        structure: Underlying ternary structure
        left: Carrier element
        right: Carrier element (B0 for canonical symbols)
    """
    structure: TernaryStructure
    left: Any
    right: Any

    @property
    def is_canonical(self) -> bool:
        return self.right == self.structure.base_pair[0]

    def key(self) -> Any:
        """left * right^* * C0: equal exactly for equivalent symbols."""
        _, c0 = self.structure.base_pair
        return self.structure.triple(self.left, self.right, c0)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Symbol):
            return NotImplemented
        return symbol_eq(self, other)

    def __hash__(self) -> int:
        return hash(self.key())

    def __mul__(self, other: "Symbol") -> "Symbol":
        return symbol_mul(self, other)

    def __add__(self, other: "Symbol") -> "Symbol":
        return symbol_add(self, other)

    def __str__(self) -> str:
        return f"{self.left} * ({self.right})^*"


def _same_structure(first: Symbol, second: Symbol) -> TernaryStructure:
    if first.structure != second.structure:
        raise StructureMismatch(
            f"symbols over {first.structure.describe()} and {second.structure.describe()}"
        )
    return first.structure


def make_symbol(structure: TernaryStructure, left: Any, right: Any) -> Symbol:
    """Canonical symbol equivalent to left * right^*."""
    return normalize(Symbol(structure, structure.require(left), structure.require(right)))


def identity_symbol(structure: TernaryStructure) -> Symbol:
    """1 = C0 * B0^*."""
    b0, c0 = structure.base_pair
    return Symbol(structure, c0, b0)


def phi(structure: TernaryStructure, element: Any) -> Any:
    """phi(B) = C0 * B^* * C0."""
    _, c0 = structure.base_pair
    return structure.triple(c0, structure.require(element), c0)


def normalize(symbol: Symbol) -> Symbol:
    """Equivalent symbol (A * B0^* * phi(B)) * B0^*."""
    structure = symbol.structure
    b0, _ = structure.base_pair
    if symbol.right == b0:
        return symbol
    left = structure.triple(symbol.left, b0, phi(structure, symbol.right))
    return Symbol(structure, left, b0)


def symbol_eq(first: Symbol, second: Symbol) -> bool:
    """
    Symbol equivalence: A * B^* * C0 == C * D^* * C0.

    Raises:
        StructureMismatch: symbols over different structures
    """
    _same_structure(first, second)
    return first.key() == second.key()


def symbol_mul(first: Symbol, second: Symbol) -> Symbol:
    """g * h = (A * B0^* * B) * B0^* for canonical g = A B0^*, h = B B0^*."""
    structure = _same_structure(first, second)
    g, h = normalize(first), normalize(second)
    b0, _ = structure.base_pair
    return Symbol(structure, structure.triple(g.left, b0, h.left), b0)


def symbol_add(first: Symbol, second: Symbol) -> Symbol:
    """
    g + h = (A + B) * B0^*; ternary algebras only.

    Both symbols are normalized before adding.

    Raises:
        StructureMismatch: different structures, or no linear structure
    """
    structure = _same_structure(first, second)
    if not isinstance(structure, TernaryAlgebra):
        raise StructureMismatch(f"{structure.describe()} has no addition")
    g, h = normalize(first), normalize(second)
    b0, _ = structure.base_pair
    return Symbol(structure, structure.add(g.left, h.left), b0)


def symbol_neg(symbol: Symbol) -> Symbol:
    """-g = (-A) * B0^*; ternary algebras only."""
    structure = symbol.structure
    if not isinstance(structure, TernaryAlgebra):
        raise StructureMismatch(f"{structure.describe()} has no addition")
    g = normalize(symbol)
    return Symbol(structure, structure.scale(-1, g.left), g.right)


def symbol_act(symbol: Symbol, element: Any) -> Any:
    """
    Left action g * C = A * B^* * C.

    Raises:
        StructureMismatch: element is not in the symbol's structure
    """
    structure = symbol.structure
    return structure.triple(symbol.left, symbol.right, structure.require(element))


def group_inverse(symbol: Symbol) -> Symbol:
    """
    g^-1 for g = P * Q0^*: the symbol R * Q0^* with P * Q0^* * R = R0.

    Raises:
        StructureMismatch: structure is not a commutative ternary group
    """
    structure = symbol.structure
    if not isinstance(structure, CommutativeTernaryGroup):
        raise StructureMismatch(f"{structure.describe()} is not a ternary group")
    g = normalize(symbol)
    q0, _ = structure.base_pair
    return Symbol(structure, structure.inverse(g.left), q0)


def transitive_witness(structure: TernaryStructure, target: Any, source: Any) -> Symbol:
    """
    Symbol g with g * source == target.

    Choose R with source * Q0^* * R = R0 and take g = (target * Q0^* * R) * Q0^*.

    Raises:
        StructureMismatch: structure is not a commutative ternary group
    """
    if not isinstance(structure, CommutativeTernaryGroup):
        raise StructureMismatch(f"{structure.describe()} is not a ternary group")
    q0, _ = structure.base_pair
    r = structure.inverse(source)
    return Symbol(structure, structure.triple(structure.require(target), q0, r), q0)
