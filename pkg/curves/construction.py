"""
The Campedelli branch octic: its prescribed singularities, reconstruction
from condition rows, and the residual conditions on the conic parameters.

Points are named p, p1, ..., p5. p is an ordinary quadruple point, p1 an
infinitely near triple point with tangent x = 0, and p2, ..., p5 lie on
the conic Q, where the octic has tacnodes tangent to Q. The construction
imposes tacnodes at p2, p3 and cusps at p4, p5 (22 rows on the 23
coefficients left after the conditions at p and p1); the two rows that
would upgrade the cusps to tacnodes are the residual conditions.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from algebra.conic import ConicParametrization
from algebra.poly import HomogeneousPoly, monomials_of_degree
from algebra.matrix import mat_vec

from curves.conditions import (
    ConditionMatrix,
    DegenerateSystemError,
    build_condition_rows,
    cluster_rows,
    kernel_via_signed_minors,
)
from curves.specs import PointSpec, SingularityKind, SingularitySpec

logger = logging.getLogger(__name__)

OCTIC_DEGREE = 8
POINT_NAMES = ("p", "p1", "p2", "p3", "p4", "p5")
CONIC_POINTS = ("p2", "p3", "p4", "p5")
# parameter values of p2..p5 on the conic
CONIC_PARAMETERS = {"p2": (0, 1), "p3": (1, 0), "p4": (1, 1), "p5": (-1, 1)}


@dataclass(frozen=True)
class CampedelliGeometry:
    ring: Any
    points: dict = field(default_factory=dict)
    tangents: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        missing = [name for name in POINT_NAMES if name not in self.points]
        if missing:
            raise ValueError(f"Missing Campedelli points: {missing}")

    @classmethod
    def from_conic_parameters(cls, ring: Any, c: Any, f: Any) -> CampedelliGeometry:
        """p = [1:0:0], p1 = [0:1:0] with tangent x = 0, and p2..p5 on the specialized conic."""
        gamma = ConicParametrization.specialized(ring, ring.convert(c), ring.convert(f))
        one, zero = ring.one, ring.zero
        points = {"p": (one, zero, zero), "p1": (zero, one, zero)}
        tangents = {"p1": (one, zero, zero)}
        for name, (s, t) in CONIC_PARAMETERS.items():
            points[name] = gamma.point(s, t)
            tangents[name] = gamma.tangent_line(s, t)
        return cls(ring, points, tangents)

    def mapped(self, hom: Callable[[Any], Any]) -> CampedelliGeometry:
        codomain = hom.codomain  # type: ignore[attr-defined]
        return CampedelliGeometry(
            codomain,
            {k: tuple(hom(c) for c in v) for k, v in self.points.items()},
            {k: tuple(hom(c) for c in v) for k, v in self.tangents.items()},
        )

    def at(self, name: str) -> PointSpec:
        return PointSpec(self.points[name])

    def spec(self, name: str, kind: SingularityKind, multiplicity: int = 0) -> SingularitySpec:
        return SingularitySpec(kind, self.at(name), self.tangents.get(name), multiplicity, name)


def stage_one_conditions(geometry: CampedelliGeometry) -> list[SingularitySpec]:
    return [
        geometry.spec("p", SingularityKind.ORDINARY, 4),
        geometry.spec("p1", SingularityKind.INFINITELY_NEAR_TRIPLE),
    ]


def stage_two_conditions(geometry: CampedelliGeometry) -> list[SingularitySpec]:
    return [
        geometry.spec("p2", SingularityKind.TACNODE),
        geometry.spec("p3", SingularityKind.TACNODE),
        geometry.spec("p4", SingularityKind.CUSP),
        geometry.spec("p5", SingularityKind.CUSP),
    ]


def final_singularities(geometry: CampedelliGeometry) -> list[SingularitySpec]:
    """The singularities of the finished octic."""
    return stage_one_conditions(geometry) + [geometry.spec(n, SingularityKind.TACNODE) for n in CONIC_POINTS]


def killed_monomials(matrix: ConditionMatrix) -> list[tuple]:
    """Monomials forced to vanish, when every row is a multiple of a unit vector."""
    killed = []
    for label, row in zip(matrix.labels, matrix.rows):
        support = [k for k, v in enumerate(row) if not matrix.ring.is_zero(v)]
        if len(support) != 1:
            raise DegenerateSystemError(f"Row {label} is not a monomial condition")
        killed.append(matrix.monomials[support[0]])
    if len(set(killed)) != len(killed):
        raise DegenerateSystemError("Two monomial conditions coincide")
    return killed


@dataclass
class OcticReconstruction:
    killed: list
    free_monomials: list
    matrix: ConditionMatrix
    octic: Optional[HomogeneousPoly] = None

    @property
    def free_count(self) -> int:
        return len(self.free_monomials)


def assemble_octic_system(geometry: CampedelliGeometry) -> OcticReconstruction:
    """Stage one as killed monomials, stage two as rows on the free coefficients."""
    ring = geometry.ring
    stage_one = build_condition_rows(OCTIC_DEGREE, stage_one_conditions(geometry), ring)
    killed = killed_monomials(stage_one)
    free = [m for m in stage_one.monomials if m not in set(killed)]
    stage_two = build_condition_rows(OCTIC_DEGREE, stage_two_conditions(geometry), ring)
    logger.info("Octic system: %d monomials killed, %d free, %d relations", len(killed), len(free), len(stage_two.rows))
    return OcticReconstruction(killed, free, stage_two.restricted(free))


def reconstruct_octic(geometry: CampedelliGeometry, check_rank: bool = True) -> OcticReconstruction:
    """Solve the 22 x 23 system by signed maximal minors."""
    system = assemble_octic_system(geometry)
    system.octic = kernel_via_signed_minors(system.matrix, check_rank=check_rank)
    return system


def residual_rows(geometry: CampedelliGeometry) -> ConditionMatrix:
    """The row each cusp at p4, p5 lacks to be a tacnode."""
    ring = geometry.ring
    out = ConditionMatrix(ring, OCTIC_DEGREE, monomials_of_degree(OCTIC_DEGREE))
    for name in ("p4", "p5"):
        block = cluster_rows(OCTIC_DEGREE, geometry.spec(name, SingularityKind.TACNODE).cluster(), ring)
        out = out.stacked(ConditionMatrix(ring, OCTIC_DEGREE, block.monomials, block.rows[-1:], block.labels[-1:]))
    return out


@dataclass
class ResidualConditions:
    values: tuple
    reconstruction: OcticReconstruction

    @property
    def vanish(self) -> bool:
        ring = self.reconstruction.matrix.ring
        return all(ring.is_zero(v) for v in self.values)


def residual_parameter_conditions(ring: Any, c: Any, f: Any) -> ResidualConditions:
    """Evaluate the two residual tacnode conditions at the conic parameters (c, f).

    For each (c, f) the 22 imposed conditions determine the octic up to
    scale; the residual rows at p4 and p5 are then two numbers that vanish
    exactly when the octic has tacnodes there as well.
    """
    geometry = CampedelliGeometry.from_conic_parameters(ring, c, f)
    reconstruction = reconstruct_octic(geometry)
    rows = residual_rows(geometry)
    values = tuple(rows.residuals(reconstruction.octic))
    logger.debug("Residual conditions at (c, f): %s", values)
    return ResidualConditions(values, reconstruction)


def full_condition_residuals(F: HomogeneousPoly, geometry: CampedelliGeometry) -> list[Any]:
    """All 24 condition rows on F: stage one, stage two and the residual rows."""
    ring = geometry.ring
    matrix = build_condition_rows(OCTIC_DEGREE, stage_one_conditions(geometry) + stage_two_conditions(geometry), ring)
    matrix = matrix.stacked(residual_rows(geometry))
    return mat_vec(matrix.rows, matrix.coefficient_vector(F), ring)


def eighth_point(F: HomogeneousPoly) -> tuple:
    """The point of z = 0 on the octic other than p (4 times) and p1 (3 times)."""
    ring = F.ring
    top = F.coefficient((4, 4, 0))
    if ring.is_zero(top):
        raise DegenerateSystemError("x^4 y^4 coefficient vanishes; z = 0 is not cut as expected")
    for exps in F.terms:
        if exps[2] == 0 and exps not in ((4, 4, 0), (3, 5, 0)):
            raise DegenerateSystemError(f"Unexpected term {exps} on z = 0")
    return (-F.coefficient((3, 5, 0)), top, ring.zero)
