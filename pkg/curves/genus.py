"""
Genus bookkeeping and the line tests used to rule out reducible curves.
"""

from __future__ import annotations

import logging
from typing import Any, Iterable, Iterator, Sequence

from pydantic import BaseModel

from algebra.poly import HomogeneousPoly
from algebra.primefield import PrimeField
from algebra.univariate import binary_form_roots

from curves.local import chart, line_of_direction, tangent_cone

logger = logging.getLogger(__name__)


class GenusCount(BaseModel):
    degree: int
    arithmetic: int
    deficit: int

    @property
    def geometric(self) -> int:
        """Genus of an irreducible curve with exactly these singularities; negative means none exists."""
        return self.arithmetic - self.deficit

    @property
    def possible(self) -> bool:
        return self.geometric >= 0


def arithmetic_genus(degree: int) -> int:
    return (degree - 1) * (degree - 2) // 2


def delta_of(sequence: Iterable[int]) -> int:
    return sum(m * (m - 1) // 2 for m in sequence)


def genus_deficit(degree: int, sings: Iterable[Sequence[int]]) -> GenusCount:
    """sings holds one multiplicity sequence per cluster, e.g. (3, 3) or (2, 2)."""
    deficit = sum(delta_of(seq) for seq in sings)
    return GenusCount(degree=degree, arithmetic=arithmetic_genus(degree), deficit=deficit)


def restrict_to_line(F: HomogeneousPoly, line: Sequence[Any]) -> HomogeneousPoly:
    """F along the line, parametrized by two of its points, as a binary form."""
    ring = F.ring
    l = [ring.convert(c) for c in line]
    k = max(i for i, c in enumerate(l) if not ring.is_zero(c))
    others = [i for i in range(3) if i != k]
    # basis points of {l = 0}: e_i - (l_i / l_k) e_k
    inv = ring.inverse(l[k])
    substitutions = []
    for v in range(3):
        coeffs = [ring.zero, ring.zero]
        for slot, i in enumerate(others):
            if v == i:
                coeffs[slot] = ring.one
            elif v == k:
                coeffs[slot] = -(l[i] * inv)
        substitutions.append(HomogeneousPoly.linear(ring, coeffs))
    return F.compose(substitutions)  # type: ignore[return-value]


def line_divides(F: HomogeneousPoly, line: Sequence[Any]) -> bool:
    return restrict_to_line(F, line).is_zero()


def tangent_lines(F: HomogeneousPoly, point: Sequence[Any]) -> tuple[list[tuple], int]:
    """GF(p)-rational tangent lines at the point, and the cone degree left irrational."""
    field = F.ring
    if not isinstance(field, PrimeField):
        raise TypeError("Tangent lines are factored over GF(p)")
    cone = tangent_cone(F, point)
    roots, nonrational = binary_form_roots(cone, field)
    lines = [line_of_direction(point, (field.convert(s), field.convert(t)), field) for (s, t), _ in roots]
    return lines, nonrational


def tangent_lines_not_components(F: HomogeneousPoly, points: Iterable[Sequence[Any]]) -> bool:
    for point in points:
        lines, _ = tangent_lines(F, point)
        for line in lines:
            if line_divides(F, line):
                logger.info("Tangent line %s at %s is a component", [int(c) for c in line], point)
                return False
    return True


def lines_through(point: Sequence[Any], field: PrimeField) -> Iterator[tuple]:
    """Every GF(p)-line through the point."""
    yield line_of_direction(point, (field.zero, field.one), field)
    for r in range(field.p):
        yield line_of_direction(point, (field.one, field.convert(r)), field)


def line_components_through(F: HomogeneousPoly, points: Iterable[Sequence[Any]]) -> list[tuple]:
    """Exhaustive scan: every GF(p)-line through a listed point that divides F."""
    field = F.ring
    found = []
    for point in points:
        for line in lines_through(point, field):
            if line_divides(F, line):
                found.append(tuple(int(c) for c in chart(line, field)[2]))
    return sorted(set(found))
