"""
Point, cluster and singularity descriptions, and the report returned by
the classifier.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Optional

from pydantic import BaseModel, Field


class MissingTangentError(ValueError):
    """A singularity kind that needs an assigned tangent was given none."""


class SingularityKind(str, Enum):
    ORDINARY = "ordinary"
    INFINITELY_NEAR_TRIPLE = "infinitely-near-triple"
    TACNODE = "tacnode"
    CUSP = "cusp"
    SIMPLE = "simple"
    NOT_ON_CURVE = "not-on-curve"
    OUTSIDE_TAXONOMY = "outside-taxonomy"


@dataclass(frozen=True)
class PointSpec:
    """A plane point plus optional infinitely near points.

    chain[k] is the direction (u0, u1), in the chart coordinates of level k,
    of the point blown up at level k + 1.
    """

    base: tuple
    chain: tuple = ()


@dataclass(frozen=True)
class ClusterSpec:
    """Multiplicities (m0, m1, m2) along a chain of infinitely near points."""

    at: PointSpec
    multiplicities: tuple
    tangent: Optional[tuple] = None
    omit: int = 0
    label: str = ""

    def __post_init__(self) -> None:
        ms = tuple(int(m) for m in self.multiplicities)
        while len(ms) > 1 and ms[-1] == 0:
            ms = ms[:-1]
        object.__setattr__(self, "multiplicities", ms)
        if any(a < b for a, b in zip(ms, ms[1:])):
            raise ValueError(f"Multiplicities {ms} violate proximity (m0 >= m1 >= m2)")
        if len(ms) > 3:
            raise ValueError("Clusters deeper than two infinitely near levels are not supported")
        if len(ms) > 1 and self.tangent is None and not self.at.chain:
            raise MissingTangentError(f"Cluster {self.label or ms} needs a tangent direction")
        if len(ms) > 2 and len(self.at.chain) < 2:
            raise MissingTangentError(f"Cluster {self.label or ms} needs a second-level direction")

    @property
    def row_count(self) -> int:
        return sum(m * (m + 1) // 2 for m in self.multiplicities) - self.omit


ROW_COUNTS = {
    SingularityKind.TACNODE: 6,
    SingularityKind.CUSP: 5,
    SingularityKind.INFINITELY_NEAR_TRIPLE: 12,
    SingularityKind.SIMPLE: 1,
}


@dataclass(frozen=True)
class SingularitySpec:
    kind: SingularityKind
    at: PointSpec
    tangent: Optional[tuple] = None
    multiplicity: int = 0
    name: str = ""

    def __post_init__(self) -> None:
        needs_tangent = self.kind in (
            SingularityKind.TACNODE,
            SingularityKind.CUSP,
            SingularityKind.INFINITELY_NEAR_TRIPLE,
        )
        if needs_tangent and self.tangent is None:
            raise MissingTangentError(f"{self.kind.value} at {self.name or self.at.base} needs a tangent")
        if self.kind == SingularityKind.ORDINARY and self.multiplicity < 1:
            raise ValueError("An ordinary point needs its multiplicity")

    def cluster(self) -> ClusterSpec:
        label = self.name or self.kind.value
        if self.kind == SingularityKind.ORDINARY:
            return ClusterSpec(self.at, (self.multiplicity,), self.tangent, label=label)
        if self.kind == SingularityKind.SIMPLE:
            return ClusterSpec(self.at, (1,), self.tangent, label=label)
        if self.kind == SingularityKind.TACNODE:
            return ClusterSpec(self.at, (2, 2), self.tangent, label=label)
        if self.kind == SingularityKind.CUSP:
            return ClusterSpec(self.at, (2, 2), self.tangent, omit=1, label=label)
        if self.kind == SingularityKind.INFINITELY_NEAR_TRIPLE:
            return ClusterSpec(self.at, (3, 3), self.tangent, label=label)
        raise ValueError(f"No condition rows for {self.kind.value}")

    @property
    def row_count(self) -> int:
        if self.kind == SingularityKind.ORDINARY:
            return self.multiplicity * (self.multiplicity + 1) // 2
        return ROW_COUNTS[self.kind]

    def multiplicity_sequence(self) -> tuple:
        """Multiplicities at the point and its infinitely near points, for genus counts."""
        return {
            SingularityKind.ORDINARY: (self.multiplicity,),
            SingularityKind.SIMPLE: (1,),
            SingularityKind.TACNODE: (2, 2),
            SingularityKind.CUSP: (2, 1),
            SingularityKind.INFINITELY_NEAR_TRIPLE: (3, 3),
        }[self.kind]


class SingularityReport(BaseModel):
    point: list[Any]
    multiplicity: int
    cone_shape: str
    kind: SingularityKind
    tangent: Optional[list[Any]] = None
    infinitely_near_multiplicity: Optional[int] = None
    ordinary_after_blowup: Optional[bool] = None
    notes: list[str] = Field(default_factory=list)

    @property
    def label(self) -> str:
        if self.kind == SingularityKind.ORDINARY:
            return f"Ordinary({self.multiplicity})"
        return self.kind.value
