"""
Local analysis of plane curves at a point: affine charts, tangent cones,
strict transforms under one blow-up, and singularity classification.

A point [P0:P1:P2] is studied in the chart where its last nonzero
coordinate (the pivot) equals 1. The other two indices (i, j) are the
chart axes and the local coordinates are (s, t), so that the curve near
P reads F(P + s e_i + t e_j). A binary form of degree m is the list
c[a] of the coefficients of s^a t^(m - a).
"""

from __future__ import annotations

import logging
from math import comb
from typing import Any, Optional, Sequence

from algebra.poly import Polynomial
from algebra.univariate import binary_form_is_squarefree, perfect_power_root

from curves.specs import SingularityKind, SingularityReport

logger = logging.getLogger(__name__)


class LocalAnalysisError(ValueError):
    """Raised for zero curves, bad points or directions, and undersized orders."""


def chart(point: Sequence[Any], ring: Any) -> tuple[int, tuple[int, int], tuple]:
    """Pivot index, chart axes and the point scaled so its pivot coordinate is 1."""
    coords = tuple(ring.convert(c) for c in point)
    if len(coords) != 3:
        raise LocalAnalysisError(f"Expected a plane point, got {len(coords)} coordinates")
    nonzero = [k for k, c in enumerate(coords) if not ring.is_zero(c)]
    if not nonzero:
        raise LocalAnalysisError("[0:0:0] is not a point")
    pivot = nonzero[-1]
    inv = ring.inverse(coords[pivot])
    normalized = tuple(c * inv for c in coords)
    axes = tuple(k for k in range(3) if k != pivot)
    return pivot, axes, normalized  # type: ignore[return-value]


def local_equation(F: Polynomial, point: Sequence[Any]) -> Polynomial:
    """F(P + s e_i + t e_j) as a polynomial in (s, t)."""
    if F.is_zero():
        raise LocalAnalysisError("The zero polynomial defines no curve")
    ring = F.ring
    _, (i, j), P = chart(point, ring)
    substitutions = []
    for v in range(3):
        linear = [ring.zero, ring.zero]
        if v == i:
            linear[0] = ring.one
        elif v == j:
            linear[1] = ring.one
        substitutions.append(Polynomial.linear_form(ring, linear, P[v]))
    return F.compose(substitutions)


def multiplicity_at(F: Polynomial, point: Sequence[Any]) -> int:
    """Order of vanishing of F at the point; 0 when the curve misses it."""
    return local_equation(F, point).order()


def leading_form(series: Polynomial) -> list[Any]:
    """Lowest-degree homogeneous part of a bivariate series as a binary form."""
    m = series.order()
    if m < 0:
        raise LocalAnalysisError("The zero series has no leading form")
    return [series.coefficient((a, m - a)) for a in range(m + 1)]


def tangent_cone(F: Polynomial, point: Sequence[Any]) -> list[Any]:
    return leading_form(local_equation(F, point))


def direction_of_line(point: Sequence[Any], line: Sequence[Any], ring: Any) -> tuple[Any, Any]:
    """Chart direction (u0, u1) of a line through the point."""
    _, (i, j), P = chart(point, ring)
    l = tuple(ring.convert(c) for c in line)
    if not ring.is_zero(l[0] * P[0] + l[1] * P[1] + l[2] * P[2]):
        raise LocalAnalysisError(f"Line {line} does not pass through {point}")
    u0, u1 = -l[j], l[i]
    if ring.is_zero(u0) and ring.is_zero(u1):
        raise LocalAnalysisError(f"{line} is not a line")
    return u0, u1


def line_of_direction(point: Sequence[Any], direction: Sequence[Any], ring: Any) -> tuple:
    """Homogeneous line through the point along a chart direction."""
    pivot, (i, j), P = chart(point, ring)
    u0, u1 = (ring.convert(u) for u in direction)
    l = [ring.zero] * 3
    l[i] = u1
    l[j] = -u0
    l[pivot] = -(l[i] * P[i] + l[j] * P[j])
    return tuple(l)


def cone_direction(cone: Sequence[Any], ring: Any) -> Optional[tuple[Any, Any]]:
    """Direction of L when the cone is a power L^m, otherwise None."""
    root = perfect_power_root(cone, ring)
    if root is None:
        return None
    a, b = root
    return -b, a


def cone_line(point: Sequence[Any], cone: Sequence[Any], ring: Any) -> Optional[tuple]:
    direction = cone_direction(cone, ring)
    if direction is None:
        return None
    return line_of_direction(point, direction, ring)


def strict_transform(series: Polynomial, m: int, direction: Sequence[Any], formal: bool = False) -> Polynomial:
    """Strict transform of a series in (s, t) at the exceptional point along direction.

    With u0 != 0 the substitution is s = e, t = e (w + u1/u0); otherwise
    s = e w, t = e. The result, in (e, w), is divided by e^m. When formal is
    set, terms of order below m are dropped first instead of rejected.
    """
    ring = series.ring
    u0, u1 = (ring.convert(u) for u in direction)
    if ring.is_zero(u0) and ring.is_zero(u1):
        raise LocalAnalysisError("The zero vector is not a direction")
    if formal:
        series = series.truncate_below(m)
    elif series and series.order() < m:
        raise LocalAnalysisError(f"Series has order {series.order()} < {m}")
    acc: dict = {}

    def add(key: tuple, value: Any) -> None:
        acc[key] = acc[key] + value if key in acc else value

    if ring.is_zero(u0):
        for (a, b), c in series.terms.items():
            add((a + b - m, a), c)
    else:
        r = u1 * ring.inverse(u0)
        r_powers = [ring.one]
        for (a, b), c in series.terms.items():
            while len(r_powers) <= b:
                r_powers.append(r_powers[-1] * r)
            for k in range(b + 1):
                # (w + r)^b = sum C(b, k) w^k r^(b - k)
                add((a + b - m, k), c * comb(b, k) * r_powers[b - k])
    terms = {e: c for e, c in acc.items() if not ring.is_zero(c)}
    return Polynomial._raw(ring, terms, 2)


def blowup_strict_transform(
    F: Polynomial, point: Sequence[Any], direction: Optional[Sequence[Any]] = None
) -> tuple[Polynomial, int]:
    """Strict transform of F at the exceptional point over direction, and the multiplicity divided out.

    Without a direction the tangent of a cone L^m is used.
    """
    series = local_equation(F, point)
    m = series.order()
    if direction is None:
        direction = cone_direction(leading_form(series), F.ring)
        if direction is None:
            raise LocalAnalysisError(f"Tangent cone at {point} is not a single line; pass a direction")
    return strict_transform(series, m, direction), m


def classify_singularity(F: Polynomial, point: Sequence[Any]) -> SingularityReport:
    ring = F.ring
    series = local_equation(F, point)
    encoded = [ring.encode(c) for c in chart(point, ring)[2]]
    m = series.order()
    if m == 0:
        return SingularityReport(point=encoded, multiplicity=0, cone_shape="none", kind=SingularityKind.NOT_ON_CURVE)
    cone = leading_form(series)
    if m == 1:
        line = line_of_direction(point, (-cone[0], cone[1]), ring)
        return SingularityReport(
            point=encoded,
            multiplicity=1,
            cone_shape="squarefree",
            kind=SingularityKind.SIMPLE,
            tangent=[ring.encode(c) for c in line],
        )
    if binary_form_is_squarefree(cone, ring):
        kind = SingularityKind.ORDINARY if m <= 4 else SingularityKind.OUTSIDE_TAXONOMY
        return SingularityReport(point=encoded, multiplicity=m, cone_shape="squarefree", kind=kind)
    direction = cone_direction(cone, ring)
    if direction is None:
        logger.debug("Cone at %s is neither squarefree nor a power", encoded)
        return SingularityReport(
            point=encoded, multiplicity=m, cone_shape="other", kind=SingularityKind.OUTSIDE_TAXONOMY
        )
    line = [ring.encode(c) for c in line_of_direction(point, direction, ring)]
    g = strict_transform(series, m, direction)
    m1 = g.order()
    after = binary_form_is_squarefree(leading_form(g), ring) if m1 > 0 else None
    kind = SingularityKind.OUTSIDE_TAXONOMY
    if m == 2 and m1 == 2:
        kind = SingularityKind.TACNODE
    elif m == 2 and m1 == 1:
        kind = SingularityKind.CUSP
    elif m == 3 and m1 == 3:
        kind = SingularityKind.INFINITELY_NEAR_TRIPLE
    notes = []
    if m1 == 0:
        notes.append("strict transform misses the point over the tangent")
    return SingularityReport(
        point=encoded,
        multiplicity=m,
        cone_shape="power",
        kind=kind,
        tangent=line,
        infinitely_near_multiplicity=m1,
        ordinary_after_blowup=after,
        notes=notes,
    )
