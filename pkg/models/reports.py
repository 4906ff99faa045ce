"""Pydantic models for oracle verification reports."""
from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field


class Axiom(str, Enum):
    """Checked laws."""
    CLOSURE = "closure"
    COMMUTATIVITY = "commutativity"
    ASSOCIATIVITY = "associativity"
    IDENTITY = "identity"
    INVERSES = "inverses"
    DISTRIBUTIVITY = "distributivity"
    LINEARITY = "linearity"
    NONDEGENERACY = "nondegeneracy"
    SYMBOL_GROUP_ABELIAN = "symbol_group_abelian"
    SYMBOL_GROUP_ORDER = "symbol_group_order"
    TRANSITIVITY = "transitivity"
    FREE_ACTION = "free_action"


class AxiomResult(BaseModel):
    """Outcome of one law over one sweep."""
    axiom: Axiom = Field(..., description="Law checked")
    passed: bool = Field(..., description="True iff no counterexample was found")
    checked: int = Field(..., ge=0, description="Number of cases evaluated")
    exhaustive: bool = Field(..., description="False when the cases were sampled")
    counterexample: Optional[str] = Field(None, description="First failing case, if any")

    def render(self) -> str:
        status = "pass" if self.passed else "FAIL"
        scope = "exhaustive" if self.exhaustive else "sampled"
        line = f"{self.axiom.value:<22} {status:<5} {self.checked:>10} {scope}"
        if self.counterexample:
            line += f"  counterexample: {self.counterexample}"
        return line


class AxiomReport(BaseModel):
    """Merged result of an axiom sweep."""
    subject: str = Field(..., description="Structure under test, e.g. C(x^2 + y^2 - 1)")
    field: str = Field(..., description="Scalar field name (Q, F_7, ...)")
    base: Optional[str] = Field(None, description="Identity base point")
    point_count: Optional[int] = Field(None, description="Carrier size for finite sweeps")
    symbol_group_order: Optional[int] = Field(None, description="Number of distinct symbol classes")
    seed: Optional[int] = Field(None, description="Seed for sampled checks")
    results: List[AxiomResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)

    def result(self, axiom: Axiom) -> AxiomResult:
        """Result for one axiom; KeyError if it was not checked."""
        for result in self.results:
            if result.axiom == axiom:
                return result
        raise KeyError(axiom.value)

    def render_text(self) -> str:
        lines = [f"subject: {self.subject}", f"field: {self.field}"]
        if self.base is not None:
            lines.append(f"base: {self.base}")
        if self.point_count is not None:
            lines.append(f"points: {self.point_count}")
        if self.symbol_group_order is not None:
            lines.append(f"symbol group order: {self.symbol_group_order}")
        if self.seed is not None:
            lines.append(f"seed: {self.seed}")
        lines.extend(result.render() for result in self.results)
        lines.append("result: " + ("all pass" if self.passed else "FAILED"))
        return "\n".join(lines)
