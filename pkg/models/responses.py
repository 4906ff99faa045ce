"""Pydantic models for command responses.

Every scalar is carried as its exact string ("n/d" over Q, the residue
over F_p); there is no decimal output.
"""
from typing import List, Optional

from pydantic import BaseModel, Field


class InvariantsResponse(BaseModel):
    """Invariants of a quadratic form."""
    form: str = Field(..., description="Canonical rendering of the form")
    field: str = Field(default="Q", description="Scalar field")
    disc: str = Field(..., description="Disc(q) = ac - b^2/4")
    det: str = Field(..., description="Det(q), the 3x3 symmetric determinant")
    center: Optional[List[str]] = Field(None, description="(h, k); absent when Disc = 0")
    m: Optional[str] = Field(None, description="-Det/Disc; absent when Disc = 0")

    def render_text(self) -> str:
        center = "none" if self.center is None else f"({self.center[0]},{self.center[1]})"
        m = "none" if self.m is None else self.m
        return f"disc={self.disc}\ndet={self.det}\ncenter={center}\nm={m}"


class Compose2Response(BaseModel):
    """F(P1) F(P2) = u^2 + b u v + a c v^2."""
    abc: List[str] = Field(..., min_length=3, max_length=3)
    points: List[List[str]] = Field(..., min_length=2, max_length=2)
    u: str
    v: str
    value: str = Field(..., description="u^2 + b u v + a c v^2")
    factors: List[str] = Field(..., description="F(P1), F(P2)")

    def render_text(self) -> str:
        return (
            f"u={self.u} v={self.v} value={self.value}\n"
            f"identity: {' * '.join(self.factors)} = {self.value}"
        )


class Compose3Response(BaseModel):
    """F(P1) F(P2) F(P3) = F(x, y)."""
    abc: List[str] = Field(..., min_length=3, max_length=3)
    points: List[List[str]] = Field(..., min_length=3, max_length=3)
    x: str
    y: str
    value: str = Field(..., description="F(x, y)")
    factors: List[str] = Field(..., description="F(P1), F(P2), F(P3)")

    def render_text(self) -> str:
        return (
            f"x={self.x} y={self.y} value={self.value}\n"
            f"identity: {' * '.join(self.factors)} = {self.value}"
        )


class ProjectiveResponse(BaseModel):
    """Fourth point on a x^2 + b y^2 + c z^2 = 0."""
    abc: List[str] = Field(..., min_length=3, max_length=3)
    points: List[List[str]] = Field(..., min_length=3, max_length=3)
    point: List[str] = Field(..., min_length=3, max_length=3, description="As computed")
    normalized: List[int] = Field(..., min_length=3, max_length=3, description="Coprime integers, positive leading entry")

    def render_text(self) -> str:
        x, y, z = self.point
        return f"x={x} y={y} z={z}\nnormalized=({','.join(str(v) for v in self.normalized)})"


class PointResponse(BaseModel):
    """A conic point produced by a conic operation."""
    operation: str
    form: str
    field: str = Field(default="Q")
    x: str
    y: str

    def render_text(self) -> str:
        return f"{self.x},{self.y}"


class SymbolResponse(BaseModel):
    """A symbol left * right^*, canonical (right = base)."""
    form: str
    left: List[str] = Field(..., min_length=2, max_length=2)
    right: List[str] = Field(..., min_length=2, max_length=2)
    image: List[str] = Field(..., min_length=2, max_length=2, description="Action on the source point")

    def render_text(self) -> str:
        return f"{','.join(self.left)} * ({','.join(self.right)})^*"


class ValueResponse(BaseModel):
    """alpha * beta^* * gamma on the value set."""
    form: str
    alpha: str
    beta: str
    gamma: str
    value: str

    def render_text(self) -> str:
        return self.value
