"""
The tricanonical and bicanonical pencils.

Base points of |3K| are located as residual intersections of two plane
generators of the invariant tricanonical pencil; everything runs over
GF(p). A point off the reduced branch curve is off the branch curve over
the coefficient field too, so non-membership mod p is a certificate.
"""

from __future__ import annotations

import logging
import random
from typing import Any, Mapping, Optional, Sequence

from pydantic import BaseModel, Field

from algebra.hom import RationalReduction
from algebra.matrix import solve
from algebra.poly import HomogeneousPoly, monomials_of_degree, product
from algebra.primefield import PrimeField

from curves.conditions import DegenerateSystemError
from curves.intersection import (
    InfiniteIntersectionError,
    NonRationalTangentError,
    common_points,
    intersection_multiplicity,
    normalize_point,
)
from groebner.saturation import base_locus_outside

from surfaces.cover import class_basis
from surfaces.lattice import BlowupConfig, CurveClassTable, DivClass, LatticeMismatchError

logger = logging.getLogger(__name__)

SPOT_CHECKS = 20


class ResidualPoint(BaseModel):
    point: list[int]
    multiplicity: int
    on: list[str] = Field(default_factory=list)


class TricanonicalReport(BaseModel):
    mobile_class: list[int]
    fixed_free_degree: int
    cluster_totals: dict[str, Optional[int]] = Field(default_factory=dict)
    cluster_expected: dict[str, int] = Field(default_factory=dict)
    residual: list[ResidualPoint] = Field(default_factory=list)
    irrational_degree: int = 0
    irrational_off_branch: Optional[bool] = None
    self_intersection: int

    @property
    def residual_count(self) -> int:
        return sum(p.multiplicity for p in self.residual) + self.irrational_degree

    @property
    def base_points(self) -> list[list[int]]:
        """Residual points on the branch curve."""
        return [p.point for p in self.residual if p.on]

    @property
    def excess(self) -> Optional[int]:
        if any(v is None for v in self.cluster_totals.values()):
            return None
        return sum(self.cluster_totals.values()) - sum(self.cluster_expected.values())  # type: ignore[arg-type]


def _cluster_expectation(reduced: DivClass) -> dict[str, int]:
    """Noether's lower bound at each plane center: sum of m^2 over its infinitely near chain."""
    config = reduced.config
    expected: dict[str, int] = {}
    for center in config.centers:
        root = center
        while root.parent is not None:
            root = config.center(root.parent)
        if reduced.multiplicity(root.name) > 0:
            expected[root.name] = expected.get(root.name, 0) + reduced.multiplicity(center.name) ** 2
    return expected


def tricanonical_base_points(
    M: DivClass,
    geometry: BlowupConfig,
    field: PrimeField,
    branch: Mapping[str, HomogeneousPoly],
    method: Optional[str] = None,
) -> TricanonicalReport:
    """Residual intersection of the mobile tricanonical pencil, tested against the branch curves."""
    reduced, basis = class_basis(M, geometry, field)
    if len(basis) != 2:
        raise DegenerateSystemError(f"|{reduced}| has projective dimension {len(basis) - 1}, not a pencil")
    S1, S2 = basis
    assigned = {
        normalize_point(center.point, field): center.name
        for center in geometry.centers
        if center.parent is None and reduced.multiplicity(center.name) > 0
    }
    points, irrational = common_points(S1, S2)
    report = TricanonicalReport(
        mobile_class=reduced.coordinates(),
        fixed_free_degree=reduced.degree,
        cluster_expected=_cluster_expectation(reduced),
        irrational_degree=irrational,
        self_intersection=reduced.dot(reduced),
    )
    for point in points:
        if point in assigned:
            try:
                report.cluster_totals[assigned[point]] = intersection_multiplicity(S1, S2, point)
            except (NonRationalTangentError, InfiniteIntersectionError) as exc:
                logger.warning("No local count at %s: %s", assigned[point], exc)
                report.cluster_totals[assigned[point]] = None
            continue
        on = [name for name, form in branch.items() if form.vanishes_at(point)]
        report.residual.append(
            ResidualPoint(point=list(point), multiplicity=intersection_multiplicity(S1, S2, point), on=on)
        )
    if irrational:
        excluded = list(assigned) + [tuple(p.point) for p in report.residual]
        report.irrational_off_branch = all(
            base_locus_outside([S1, S2, form], excluded, method) for form in branch.values()
        )
    logger.info(
        "Tricanonical pencil: %d residual points (%d irrational), %d on the branch curve",
        report.residual_count,
        irrational,
        len(report.base_points),
    )
    return report


class PencilMember(BaseModel):
    """A member of a pencil: plane curves named in the class table plus exceptional curves."""

    name: str
    plane: list[str]
    exceptional: dict[str, int] = Field(default_factory=dict)

    def divisor_class(self, table: CurveClassTable) -> DivClass:
        total = DivClass(table.config, 0)
        for name in self.plane:
            total = total + table[name]
        for center, coeff in self.exceptional.items():
            total = total + coeff * DivClass.proper(table.config, center)
        return total


class BicanonicalReport(BaseModel):
    mismatches: dict[str, dict[str, int]] = Field(default_factory=dict)
    shared_plane: list[list[str]] = Field(default_factory=list)
    shared_exceptional: list[str] = Field(default_factory=list)

    @property
    def classes_match(self) -> bool:
        return not self.mismatches

    @property
    def fixed_part_free(self) -> bool:
        return not self.shared_plane and not self.shared_exceptional

    @property
    def verdict(self) -> bool:
        return self.classes_match and self.fixed_part_free


def _same_curve(F: HomogeneousPoly, G: HomogeneousPoly) -> bool:
    return F.degree == G.degree and F.divides(G)


def bicanonical_pencil_check(
    table: CurveClassTable,
    members: Sequence[PencilMember],
    forms: Mapping[str, HomogeneousPoly],
    target: str = "bicanonical",
) -> BicanonicalReport:
    """Both generators have the bicanonical class and share no component.

    Plane parts are compared factor by factor (the named forms are
    irreducible), so no two factors being proportional means the gcd is 1.
    """
    if len(members) != 2:
        raise ValueError("A pencil is checked on two generators")
    report = BicanonicalReport()
    expected = table[target]
    for member in members:
        actual = member.divisor_class(table)
        if actual != expected:
            report.mismatches[member.name] = (actual - expected).as_dict()
    first, second = members
    for a in first.plane:
        for b in second.plane:
            if _same_curve(forms[a], forms[b]):
                report.shared_plane.append([a, b])
    report.shared_exceptional = sorted(set(first.exceptional) & set(second.exceptional))
    if not report.verdict:
        logger.warning("Bicanonical pencil check failed: %s", report.model_dump())
    return report


def check_classes(table: CurveClassTable, names: Sequence[str], target: str) -> dict[str, dict[str, int]]:
    """Differences from the target class, for the names that miss it."""
    out = {}
    for name in names:
        try:
            table.check(name, table[target])
        except LatticeMismatchError:
            out[name] = (table[name] - table[target]).as_dict()
    return out


class QuadricRelation(BaseModel):
    solved: bool
    t: Optional[str] = None
    u: Optional[str] = None
    v: Optional[str] = None
    degree: int
    spot_checks: int = 0
    diagnostic: str = ""


def verify_bicanonical_quadric_relation(
    forms: Mapping[str, HomogeneousPoly], p: int, seed: int = 0
) -> QuadricRelation:
    """Scalars with (Q1 Q2 - 2t C2 lt)^2 = u Q1 Q2 Q^2 - 4v C1 C2 l^2.

    Linear in (t, t^2, u, v); solved over the rationals, then t^2 is
    compared with the square of t and the identity spot-checked at random
    points mod p.
    """
    A = forms["Q1"] * forms["Q2"]
    Bv = forms["C2"] * forms["lt"]
    P2 = A * forms["Q"] ** 2
    P3 = product([forms["C1"], forms["C2"], forms["l"] ** 2])
    field = A.ring
    columns = [A * Bv * -4, Bv * Bv * 4, P2 * -1, P3 * 4]
    degree = (A * A).total_degree()
    if any(c.total_degree() != degree for c in columns):
        raise DegenerateSystemError("The quadric relation is not homogeneous of one degree")
    monomials = monomials_of_degree(degree)
    rows = [[c.coefficient(m) for c in columns] for m in monomials]
    rhs = [-(A * A).coefficient(m) for m in monomials]
    solution = solve(rows, rhs, field)
    if solution is None:
        return QuadricRelation(
            solved=False,
            degree=degree,
            diagnostic="no scalars balance the plane identity; exceptional corrections are needed",
        )
    t, t_squared, u, v = solution
    if t * t != t_squared:
        return QuadricRelation(
            solved=False, degree=degree, diagnostic=f"linear solve gave t = {t} but t^2 = {t_squared}"
        )
    relation = (A - Bv * (2 * t)) ** 2 - P2 * u + P3 * (4 * v)
    if not relation.is_zero():
        return QuadricRelation(solved=False, degree=degree, diagnostic="solution does not annihilate the identity")
    checks = spot_check_relation(forms, (t, u, v), p, seed)
    if checks < SPOT_CHECKS:
        return QuadricRelation(solved=False, degree=degree, diagnostic=f"spot check {checks + 1} failed mod {p}")
    logger.info("Quadric relation holds with t=%s, u=%s, v=%s", t, u, v)
    return QuadricRelation(solved=True, t=str(t), u=str(u), v=str(v), degree=degree, spot_checks=checks)


def evaluates_to_zero(forms: Mapping[str, HomogeneousPoly], point: Sequence[Any]) -> dict[str, bool]:
    return {name: form.vanishes_at(point) for name, form in forms.items()}


def random_plane_point(field: Any, rng: random.Random) -> tuple:
    """A uniformly random point of the projective plane over field, as a nonzero vector."""
    while True:
        point = tuple(field.random_element(rng) for _ in range(3))
        if not all(field.is_zero(c) for c in point):
            return point


def spot_check_relation(forms: Mapping[str, HomogeneousPoly], scalars: Sequence[Any], p: int, seed: int = 0) -> int:
    """Evaluate the relation factor by factor at random points mod p; returns how many passed in a row."""
    reduction = RationalReduction(p)
    field = reduction.codomain
    t, u, v = (reduction(s) for s in scalars)
    reduced = {name: form.map_coefficients(reduction, field) for name, form in forms.items()}
    rng = random.Random(seed)
    for done in range(SPOT_CHECKS):
        point = random_plane_point(field, rng)
        value = {name: form.evaluate(point) for name, form in reduced.items()}
        a = value["Q1"] * value["Q2"]
        b = value["C2"] * value["lt"]
        lhs = (a - 2 * t * b) ** 2
        rhs = u * a * value["Q"] ** 2 - 4 * v * value["C1"] * value["C2"] * value["l"] ** 2
        if lhs != rhs:
            return done
    return SPOT_CHECKS
