"""
Blow-up configurations and class tables for the two double planes.

Campedelli: the octic C and conic Q, blown up at p (E), at p1, ..., p5
(E1..E5) and once more along the tangent at each (F1..F5).

Oort-Peters: the plane curves Q1, Q2, C1, C2 through P, P1, ..., P5 and
the point at infinity; P1 carries a second infinitely near center G1 on
F1, and the point at infinity is blown up once (E6).
"""

from __future__ import annotations

from typing import Mapping

from algebra.hom import sqrt_minus_three
from algebra.poly import HomogeneousPoly, partial_derivative
from algebra.primefield import PrimeField

from curves.construction import CampedelliGeometry

from surfaces.lattice import BlowupConfig, Center, CurveClassTable, DivClass, strict_transform_class

CAMPEDELLI_POINTS = {"E": "p", "E1": "p1", "E2": "p2", "E3": "p3", "E4": "p4", "E5": "p5"}
OORT_PETERS_PRIME = 10009
OORT_PETERS_POINT_NAMES = ("P", "P1", "P2", "P3", "P4", "P5", "oo")


def campedelli_config(geometry: CampedelliGeometry) -> BlowupConfig:
    centers = [Center(name, None, geometry.points[point]) for name, point in CAMPEDELLI_POINTS.items()]
    for i in range(1, 6):
        centers.append(Center(f"F{i}", f"E{i}", None, geometry.tangents[f"p{i}"]))
    return BlowupConfig(tuple(centers))


def campedelli_table(config: BlowupConfig) -> CurveClassTable:
    table = CurveClassTable(config)
    table.add("K_Y", "K")
    table.add("L", "5H - 2E - sum(E) - 3sum(F)")
    octic = {"E": 4, "E1": 3, "F1": 3}
    octic.update({f"{kind}{i}": 2 for kind in "EF" for i in range(2, 6)})
    table.add("C", strict_transform_class(config, 8, octic))
    table.add("Q", strict_transform_class(config, 2, {f"{kind}{i}": 1 for kind in "EF" for i in range(2, 6)}))
    table.add("B", "C + Q + sum(E)")
    table.add("M", "3K + 3L")
    return table


def campedelli_branch_components(table: CurveClassTable) -> dict[str, DivClass]:
    components = {"C": table["C"], "Q": table["Q"]}
    components.update(table.proper_exceptionals_of(f"E{i}" for i in range(1, 6)))
    return components


def oort_peters_points(field: PrimeField) -> dict[str, tuple]:
    r = field.convert(sqrt_minus_three(field.p))
    half = field.inverse(field.convert(2))
    plus, minus = (3 + r) * half, (3 - r) * half
    one, zero = field.one, field.zero
    return {
        "P": (field.convert(3), zero, field.convert(2)),
        "P1": (one, zero, one),
        "P2": (plus, plus, one),
        "P3": (minus, minus, one),
        "P4": (plus, -plus, one),
        "P5": (minus, -minus, one),
        "oo": (zero, one, zero),
    }


def gradient(F: HomogeneousPoly, point: tuple) -> tuple:
    """Tangent line of F at a smooth point."""
    line = tuple(partial_derivative(F, v).evaluate(point) for v in range(3))
    if all(F.ring.is_zero(c) for c in line):
        raise ValueError(f"{point} is a singular point of the curve")
    return line


def oort_peters_config(field: PrimeField, forms: Mapping[str, HomogeneousPoly]) -> BlowupConfig:
    """Centers over GF(p); tangents at P2, P3 from Q1, at P4, P5 from Q2, at P1 the line x = z."""
    points = oort_peters_points(field)
    centers = [Center("E", None, points["P"])]
    centers += [Center(f"E{i}", None, points[f"P{i}"]) for i in range(1, 6)]
    centers.append(Center("F1", "E1", None, (field.one, field.zero, -field.one)))
    for i, owner in ((2, "Q1"), (3, "Q1"), (4, "Q2"), (5, "Q2")):
        centers.append(Center(f"F{i}", f"E{i}", None, gradient(forms[owner], points[f"P{i}"])))
    centers.append(Center("G1", "F1"))
    centers.append(Center("E6", None, points["oo"]))
    return BlowupConfig(tuple(centers))


def oort_peters_table(config: BlowupConfig) -> CurveClassTable:
    table = CurveClassTable(config)
    table.add("K_Y", "K")
    table.add("L", "5H - 2E - sum(E,1..5) - 3sum(F) - 4G1 - E6")
    table.add("Q1", "2H - E - E1 - E2 - E3 - 2F1 - 2F2 - 2F3 - 3G1")
    table.add("Q2", "2H - E - E1 - E4 - E5 - 2F1 - 2F4 - 2F5 - 3G1")
    table.add("C1", "3H - sum(E,1..5) - 2sum(F) - 2G1 - E6")
    table.add("C2", "3H - 2E - sum(E,2..5) - 2sum(F,2..5) - E6")
    table.add("Q", "2H - E - sum(E,2..5) - sum(F,2..5)")
    table.add("Qt", "2H - sum(E,1..5) - 2F1 - sum(F,2..5) - 2G1")
    table.add("l", "H - E - E1 - F1 - G1")
    table.add("lt", "H - E1 - 2F1 - 2G1 - E6")
    table.add("L1", "2H - E - E1 - 2F1 - sum(F,2..5) - 3G1")
    table.add("L2", "L - L1")
    table.add("B", "2L")
    table.add("B1", "2L1")
    table.add("B2", "2L2")
    table.add("M", "3K + 3L")
    table.add("bicanonical", "4H - 2E - sum(E,1..5) - 2sum(F) - 2G1")
    table.add("y0", "Q1 + Q2 + 2F1 + 4G1 + E1")
    table.add("y1", "C2 + lt + 2E6")
    table.add("y2", "L1 + Q + G1")
    table.add("y3", "L2 + l + E6")
    return table


def oort_peters_branch_components(table: CurveClassTable) -> dict[str, DivClass]:
    components = {name: table[name] for name in ("C1", "C2", "Q1", "Q2")}
    components.update(table.proper_exceptionals_of(f"E{i}" for i in range(1, 6)))
    return components
