"""
Intersection multiplicities of plane curves over GF(p), common points and
Bezout certificates.
"""

from __future__ import annotations

import logging
from typing import Any, Optional, Sequence

from pydantic import BaseModel, Field

from algebra.poly import HomogeneousPoly, Polynomial
from algebra.primefield import PrimeField
from algebra.resultant import resultant
from algebra.univariate import binary_form_gcd, binary_form_roots, gcd, roots_mod_p, trim

from curves.local import chart, leading_form, local_equation, strict_transform

logger = logging.getLogger(__name__)

DEFAULT_DEPTH = 12
SCAN_LIMIT = 400


class NonRationalTangentError(ArithmeticError):
    """Common tangent directions are not defined over the prime field."""


class InfiniteIntersectionError(ArithmeticError):
    """The curves share a component, or the recursion hit its depth cap."""


class IntersectionEntry(BaseModel):
    point: list[int]
    multiplicity: int


class IntersectionReport(BaseModel):
    degrees: tuple[int, int]
    entries: list[IntersectionEntry] = Field(default_factory=list)
    nonrational_degree: int = 0

    @property
    def total(self) -> int:
        return sum(e.multiplicity for e in self.entries)

    @property
    def expected(self) -> int:
        return self.degrees[0] * self.degrees[1]

    @property
    def complete(self) -> bool:
        return self.total == self.expected


def _require_prime_field(F: Polynomial, G: Polynomial) -> PrimeField:
    if F.ring != G.ring:
        raise ValueError(f"Curves over different rings: {F.ring!r} and {G.ring!r}")
    if not isinstance(F.ring, PrimeField):
        raise TypeError("Intersection multiplicities are computed over GF(p); map the curves first")
    return F.ring


def normalize_point(point: Sequence[Any], field: PrimeField) -> tuple[int, ...]:
    return tuple(int(c) for c in chart(point, field)[2])


def _local_multiplicity(f: Polynomial, g: Polynomial, field: PrimeField, depth: int, max_depth: int) -> int:
    if f.is_zero() or g.is_zero():
        raise InfiniteIntersectionError("A local series vanished identically")
    mf, mg = f.order(), g.order()
    if mf == 0 or mg == 0:
        return 0
    if depth >= max_depth:
        raise InfiniteIntersectionError(f"No answer after {max_depth} blow-ups; shared component suspected")
    common = binary_form_gcd(leading_form(f), leading_form(g), field)
    total = mf * mg
    if len(common) <= 1:
        return total
    directions, nonrational = binary_form_roots(common, field)
    if nonrational:
        raise NonRationalTangentError(f"{nonrational} common tangent degrees are irrational over {field.name}")
    for direction, _ in directions:
        u = (field.convert(direction[0]), field.convert(direction[1]))
        total += _local_multiplicity(
            strict_transform(f, mf, u), strict_transform(g, mg, u), field, depth + 1, max_depth
        )
    return total


def intersection_multiplicity(
    F: HomogeneousPoly, G: HomogeneousPoly, point: Sequence[Any], max_depth: int = DEFAULT_DEPTH
) -> int:
    """i_P(F, G) as the sum over infinitely near points of products of multiplicities."""
    field = _require_prime_field(F, G)
    point = tuple(field.convert(c) for c in point)
    return _local_multiplicity(local_equation(F, point), local_equation(G, point), field, 0, max_depth)


def _shear(F: HomogeneousPoly, c: Any, c2: Any) -> HomogeneousPoly:
    ring = F.ring
    x = HomogeneousPoly.linear(ring, (ring.one, c, ring.zero))
    y = HomogeneousPoly.linear(ring, (ring.zero, ring.one, ring.zero))
    z = HomogeneousPoly.linear(ring, (ring.zero, c2, ring.one))
    return F.compose([x, y, z])  # type: ignore[return-value]


def _fiber(F: Polynomial, x0: Any, z0: Any) -> list[Any]:
    """F(x0, y, z0) as a list of coefficients in y, constant first."""
    ring = F.ring
    coeffs: dict[int, Any] = {}
    for (a, b, c), coeff in F.terms.items():
        value = coeff * (x0 ** a) * (z0 ** c)
        coeffs[b] = coeffs[b] + value if b in coeffs else value
    top = max(coeffs, default=-1)
    return [coeffs.get(k, ring.zero) for k in range(top + 1)]


def common_points(F: HomogeneousPoly, G: HomogeneousPoly) -> tuple[list[tuple[int, ...]], int]:
    """GF(p)-points on both curves, and the degree of the intersection left irrational.

    A shear (x, y, z) -> (x + c y, y, z + c' y) moves [0:1:0] off both curves,
    the resultant in y gives the x:z ratios, and each fiber is cut by a gcd.
    """
    field = _require_prime_field(F, G)
    shift = None
    for c in range(field.p):
        for c2 in range(field.p):
            trial = (field.convert(c), field.one, field.convert(c2))
            if not field.is_zero(F.evaluate(trial)) and not field.is_zero(G.evaluate(trial)):
                shift = (trial[0], trial[2])
                break
        if shift is not None:
            break
    if shift is None:
        raise InfiniteIntersectionError("Every point of the line sheaf lies on a curve")
    Fs, Gs = _shear(F, *shift), _shear(G, *shift)
    R = resultant(Fs, Gs, 1)
    if R.is_zero():
        raise InfiniteIntersectionError("The curves share a component")
    n = R.total_degree()
    form = [R.coefficient((a, 0, n - a)) for a in range(n + 1)]
    roots, nonrational = binary_form_roots(form, field)
    points: set[tuple[int, ...]] = set()
    for (x0, z0), _ in roots:
        xv, zv = field.convert(x0), field.convert(z0)
        fiber = gcd(_fiber(Fs, xv, zv), _fiber(Gs, xv, zv), field)
        ys, extra = roots_mod_p(trim(fiber, field), field)
        nonrational += extra
        for y0, _ in ys:
            yv = field.convert(y0)
            original = (xv + shift[0] * yv, yv, zv + shift[1] * yv)
            points.add(normalize_point(original, field))
    logger.debug("Found %d common points, %d irrational degrees", len(points), nonrational)
    return sorted(points), nonrational


def scan_points(F: HomogeneousPoly, G: HomogeneousPoly, limit: int = SCAN_LIMIT) -> list[tuple[int, ...]]:
    """Brute-force common points over a small prime field."""
    field = _require_prime_field(F, G)
    if field.p > limit:
        raise ValueError(f"Scanning P^2(GF({field.p})) is too slow; limit is {limit}")
    found = []
    candidates = [(1, 0, 0)] + [(x, 1, 0) for x in range(field.p)]
    candidates += [(x, y, 1) for x in range(field.p) for y in range(field.p)]
    for point in candidates:
        if F.vanishes_at(point) and G.vanishes_at(point):
            found.append(normalize_point(point, field))
    return sorted(found)


def intersection_table(
    F: HomogeneousPoly,
    G: HomogeneousPoly,
    points: Optional[Sequence[Sequence[Any]]] = None,
    max_depth: int = DEFAULT_DEPTH,
) -> IntersectionReport:
    """Multiplicities at the given points (all common GF(p)-points when none are given)."""
    field = _require_prime_field(F, G)
    nonrational = 0
    if points is None:
        points, nonrational = common_points(F, G)
    report = IntersectionReport(degrees=(F.degree, G.degree), nonrational_degree=nonrational)
    seen = set()
    for point in points:
        key = normalize_point(point, field)
        if key in seen:
            continue
        seen.add(key)
        i = intersection_multiplicity(F, G, key, max_depth)
        report.entries.append(IntersectionEntry(point=list(key), multiplicity=i))
    return report


def bezout_certificate(
    F: HomogeneousPoly, G: HomogeneousPoly, points: Sequence[Sequence[Any]], max_depth: int = DEFAULT_DEPTH
) -> IntersectionReport:
    """Table at the named points; complete means no other intersection can exist."""
    report = intersection_table(F, G, points, max_depth)
    logger.info(
        "Bezout check %dx%d: %d of %d at named points", F.degree, G.degree, report.total, report.expected
    )
    return report
