"""
Case analysis showing the Campedelli octic has no component of degree
at most four.

Every exclusion is a linear system that must come out empty, or a genus
count that no irreducible curve can meet. Run over GF(p) the systems
certify the statement over the tower too: reduction can only lower a rank,
so an empty system mod p is empty upstairs.
"""

from __future__ import annotations

import logging
from itertools import combinations
from typing import Any, Optional

from pydantic import BaseModel, Field

from algebra.poly import HomogeneousPoly

from curves.conditions import build_condition_rows
from curves.construction import CONIC_POINTS, POINT_NAMES, CampedelliGeometry
from curves.genus import GenusCount, genus_deficit, line_divides, tangent_lines_not_components
from curves.specs import ClusterSpec

logger = logging.getLogger(__name__)


class ExclusionResult(BaseModel):
    name: str
    degree: int
    conditions: int
    dimension: int

    @property
    def excluded(self) -> bool:
        return self.dimension == -1


class GenusCase(BaseModel):
    name: str
    count: GenusCount

    @property
    def excluded(self) -> bool:
        return not self.count.possible


class IrreducibilityReport(BaseModel):
    conic_not_component: bool
    tangent_lines_clear: bool
    joining_lines_clear: bool
    exclusions: list[ExclusionResult] = Field(default_factory=list)
    genus_cases: list[GenusCase] = Field(default_factory=list)

    @property
    def irreducible(self) -> bool:
        return (
            self.conic_not_component
            and self.tangent_lines_clear
            and self.joining_lines_clear
            and all(e.excluded for e in self.exclusions)
            and all(c.excluded for c in self.genus_cases)
        )


def _cluster(geometry: CampedelliGeometry, name: str, multiplicities: tuple) -> ClusterSpec:
    tangent = geometry.tangents.get(name) if len(multiplicities) > 1 else None
    return ClusterSpec(geometry.at(name), multiplicities, tangent, label=name)


def _system(name: str, degree: int, clusters: list[ClusterSpec], geometry: CampedelliGeometry) -> ExclusionResult:
    matrix = build_condition_rows(degree, clusters, geometry.ring)
    dimension = len(matrix.monomials) - matrix.rank() - 1
    logger.debug("%s: %d conditions on degree %d, dimension %d", name, len(matrix.rows), degree, dimension)
    return ExclusionResult(name=name, degree=degree, conditions=len(matrix.rows), dimension=dimension)


def conic_exclusions(geometry: CampedelliGeometry) -> list[ExclusionResult]:
    """No conic through p1, p_i, p_j with the tangents there, for any pair."""
    results = []
    for i, j in combinations(CONIC_POINTS, 2):
        clusters = [_cluster(geometry, n, (1, 1)) for n in ("p1", i, j)]
        results.append(_system(f"conic p1,{i},{j}", 2, clusters, geometry))
    return results


def cubic_exclusions(geometry: CampedelliGeometry) -> list[ExclusionResult]:
    """No cubic double at p, tangent at p1 and at three of p2..p5."""
    results = []
    for triple in combinations(CONIC_POINTS, 3):
        clusters = [_cluster(geometry, "p", (2,)), _cluster(geometry, "p1", (1, 1))]
        clusters += [_cluster(geometry, n, (1, 1)) for n in triple]
        results.append(_system(f"cubic p,p1,{','.join(triple)}", 3, clusters, geometry))
    return results


def quartic_exclusion(geometry: CampedelliGeometry) -> ExclusionResult:
    """No quartic with a tacnode at p1, through p, tangent at p2..p5."""
    clusters = [_cluster(geometry, "p1", (2, 2)), _cluster(geometry, "p", (1,))]
    clusters += [_cluster(geometry, n, (1, 1)) for n in CONIC_POINTS]
    return _system("quartic tacnode p1", 4, clusters, geometry)


def quartic_pencil(geometry: CampedelliGeometry) -> ExclusionResult:
    """Quartics double at p and tangent to the branch curve at p1..p5; a pencil."""
    clusters = [_cluster(geometry, "p", (2,))] + [_cluster(geometry, n, (1, 1)) for n in POINT_NAMES[1:]]
    return _system("quartic pencil", 4, clusters, geometry)


def genus_cases() -> list[GenusCase]:
    return [
        GenusCase(name="sextic with conic", count=genus_deficit(6, [(3,), (2, 2), (2, 2), (3, 3)])),
        GenusCase(name="quartic with two conics", count=genus_deficit(4, [(3, 3)])),
        GenusCase(name="cubic with conic and cubic", count=genus_deficit(3, [(2, 2)])),
    ]


def joining_line(a: tuple, b: tuple) -> tuple:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def joining_lines_clear(F: HomogeneousPoly, geometry: CampedelliGeometry) -> bool:
    for a, b in combinations(POINT_NAMES, 2):
        if line_divides(F, joining_line(geometry.points[a], geometry.points[b])):
            logger.info("Line through %s and %s is a component", a, b)
            return False
    return True


def irreducibility_report(
    F: HomogeneousPoly, geometry: CampedelliGeometry, conic: Optional[HomogeneousPoly] = None
) -> IrreducibilityReport:
    """The full case analysis; F and the geometry over GF(p)."""
    report = IrreducibilityReport(
        conic_not_component=conic is None or not conic.divides(F),
        tangent_lines_clear=tangent_lines_not_components(F, geometry.points.values()),
        joining_lines_clear=joining_lines_clear(F, geometry),
    )
    report.exclusions.extend(conic_exclusions(geometry))
    report.exclusions.extend(cubic_exclusions(geometry))
    report.exclusions.append(quartic_exclusion(geometry))
    report.genus_cases.extend(genus_cases())
    return report


def summarize(report: IrreducibilityReport) -> dict[str, Any]:
    return {
        "irreducible": report.irreducible,
        "exclusions": {e.name: e.dimension for e in report.exclusions},
        "genus": {c.name: c.count.geometric for c in report.genus_cases},
    }
