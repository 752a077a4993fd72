"""Pydantic schemas for command input and report payloads."""

from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, field_validator

from config import Settings
from quivers.quiver import Quiver, Stability, load_quiver, load_stability
from services.reports import Report

SUITES = (
    "hn",
    "factorization",
    "integrality",
    "poisson",
    "oracle",
    "dynkin",
    "kronecker",
)


class QuiverDescription(BaseModel):
    """Contents of a quiver file."""

    vertices: List[str] = Field(..., min_length=1)
    arrows: List[Tuple[str, str]] = Field(default_factory=list)
    theta: Dict[str, int]

    def build(self) -> Tuple[Quiver, Stability]:
        """Admissibly ordered quiver and its stability.

        Raises:
            UnknownVertex: If an arrow or a theta entry names an undeclared vertex
            CyclicQuiver: If the arrows contain an oriented cycle
        """
        arrows = [list(a) for a in self.arrows]
        quiver = load_quiver({"vertices": self.vertices, "arrows": arrows})
        return quiver, load_stability(quiver, self.theta)


class RunConfig(BaseModel):
    """Settings merged with command-line flags."""

    quiver_path: Optional[str] = None
    order: int
    dim: Optional[List[int]] = None
    slope: Optional[str] = None
    q: Optional[int] = None
    output_format: Literal["text", "json"] = "text"
    budget_reps: int = Field(1_000_000, ge=1)
    budget_subspaces: int = Field(10_000, ge=1)
    seed: int = 0
    poisson_samples: int = Field(5, ge=0)
    oracle_order: int = Field(3, ge=0)
    suites: List[str] = Field(default_factory=lambda: list(SUITES))

    @field_validator("order")
    @classmethod
    def order_nonnegative(cls, value: int) -> int:
        if value < 0:
            raise ValueError("truncation order must be >= 0")
        return value

    @field_validator("q")
    @classmethod
    def supported_field(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and value not in (2, 3):
            raise ValueError("field size must be 2 or 3")
        return value

    @classmethod
    def from_settings(cls, settings: Settings, **flags: Any) -> "RunConfig":
        """Flags that were given override the settings defaults."""
        values: Dict[str, Any] = {
            "order": settings.default_order,
            "output_format": settings.output_format,
            "budget_reps": settings.budget_reps,
            "budget_subspaces": settings.budget_subspaces,
            "seed": settings.seed,
            "poisson_samples": settings.poisson_samples,
            "oracle_order": settings.oracle_order,
        }
        values.update({key: value for key, value in flags.items() if value is not None})
        return cls(**values)


class RationalPayload(BaseModel):
    """q^laurent_shift * numerator / denominator, ascending coefficients."""

    numerator: List[int]
    denominator: List[int]
    laurent_shift: int


class LaurentPayload(BaseModel):
    laurent_shift: int
    coefficients: List[int]


class HNRow(BaseModel):
    dim: Dict[str, int]
    slope: str
    e: RationalPayload
    p: RationalPayload


class HNPayload(BaseModel):
    vertices: List[str]
    theta: Dict[str, int]
    order: int
    rows: List[HNRow]


class WallcrossRow(BaseModel):
    slope: str
    dim: Dict[str, int]
    framing: Dict[str, int]
    poincare: LaurentPayload
    euler: int


class WallcrossPayload(BaseModel):
    vertices: List[str]
    theta: Dict[str, int]
    order: int
    rows: List[WallcrossRow]


class KroneckerRow(BaseModel):
    """Exponents of one primitive class (a, b)."""

    a: int
    b: int
    slope: str
    c: Dict[str, int]
    d: Dict[str, str]


class KroneckerPayload(BaseModel):
    m: int
    order: int
    rows: List[KroneckerRow]
    report: Report


class DynkinPayload(BaseModel):
    type: str
    orientation: str
    order: int
    report: Report


class VerifyPayload(BaseModel):
    ok: bool
    failures: int
    reports: List[Report]
