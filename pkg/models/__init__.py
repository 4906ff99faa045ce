"""Data models module."""
from models.reports import Axiom, AxiomResult, AxiomReport
from models.responses import (
    InvariantsResponse,
    Compose2Response,
    Compose3Response,
    ProjectiveResponse,
    PointResponse,
    SymbolResponse,
    ValueResponse,
)

__all__ = [
    # Oracle reports
    "Axiom",
    "AxiomResult",
    "AxiomReport",
    # Command responses
    "InvariantsResponse",
    "Compose2Response",
    "Compose3Response",
    "ProjectiveResponse",
    "PointResponse",
    "SymbolResponse",
    "ValueResponse",
]
