"""
Ideal quotients, intersections and saturations over GF(p), and the
certificate that a plane curve is smooth away from a finite set.

(I : g^oo) is computed by Rabinowitsch elimination of t from <I, 1 - t g>,
and (I : J^oo) as the intersection of (I : g^oo) over the generators g of J.
"""

from __future__ import annotations

import logging
from typing import Any, Optional, Sequence

from pydantic import BaseModel

from algebra.poly import HomogeneousPoly, Polynomial, partial_derivative
from algebra.primefield import PrimeField

from groebner.ideal import Ideal, eliminate_first, is_unit, polynomial_ring, to_sympy

logger = logging.getLogger(__name__)


def quotient_by_power(ideal: Ideal, g: Polynomial, method: Optional[str] = None) -> Ideal:
    """(I : g^oo)."""
    if g.is_zero():
        raise ValueError("Saturating by the zero polynomial")
    R = polynomial_ring(ideal.field.p, ideal.nvars, elimination=True)
    t = R.gens[0]
    gens = [to_sympy(f, R, shift=1) for f in ideal.generators]
    gens.append(R.one - t * to_sympy(g, R, shift=1))
    return eliminate_first(gens, ideal.field, ideal.nvars, method)


def intersect_ideals(a: Ideal, b: Ideal, method: Optional[str] = None) -> Ideal:
    """A intersected with B, eliminating t from t A + (1 - t) B."""
    if a.field != b.field or a.nvars != b.nvars:
        raise ValueError("Ideals live in different rings")
    R = polynomial_ring(a.field.p, a.nvars, elimination=True)
    t = R.gens[0]
    gens = [t * to_sympy(f, R, shift=1) for f in a.generators]
    gens += [(R.one - t) * to_sympy(f, R, shift=1) for f in b.generators]
    return eliminate_first(gens, a.field, a.nvars, method)


def saturation(ideal: Ideal, by: Ideal, method: Optional[str] = None) -> Ideal:
    """(I : J^oo)."""
    if not by.generators:
        return ideal
    result: Optional[Ideal] = None
    for g in by.generators:
        component = quotient_by_power(ideal, g, method)
        if is_unit(component, method):
            continue
        result = component if result is None else intersect_ideals(result, component, method)
    return result if result is not None else Ideal.unit(ideal.field, ideal.nvars)


def point_ideal(point: Sequence[Any], field: PrimeField) -> Ideal:
    """Linear ideal of one projective point, from the 2 x 2 minors of (x; P)."""
    a, b, c = (field.convert(v) for v in point)
    if all(field.is_zero(v) for v in (a, b, c)):
        raise ValueError("[0:0:0] is not a point")
    forms = [
        HomogeneousPoly.linear(field, (b, -a, field.zero)),
        HomogeneousPoly.linear(field, (c, field.zero, -a)),
        HomogeneousPoly.linear(field, (field.zero, c, -b)),
    ]
    return Ideal(field, 3, forms)


def _normalized(point: Sequence[Any], field: PrimeField) -> tuple:
    coords = [field.convert(v) for v in point]
    pivot = max(k for k, v in enumerate(coords) if not field.is_zero(v))
    inv = field.inverse(coords[pivot])
    return tuple(int(v * inv) for v in coords)


def points_ideal(points: Sequence[Sequence[Any]], field: PrimeField, method: Optional[str] = None) -> Ideal:
    if not points:
        raise ValueError("points_ideal needs at least one point")
    keys = [_normalized(p, field) for p in points]
    if len(set(keys)) != len(keys):
        raise ValueError("points_ideal got duplicate points")
    result = point_ideal(points[0], field)
    for point in points[1:]:
        result = intersect_ideals(result, point_ideal(point, field), method)
    return result


def irrelevant_ideal(field: PrimeField) -> Ideal:
    """(x, y, z)."""
    return Ideal(field, 3, [HomogeneousPoly.monomial(field, tuple(int(i == k) for i in range(3))) for k in range(3)])


def jacobian_ideal(F: HomogeneousPoly) -> Ideal:
    if not isinstance(F.ring, PrimeField):
        raise TypeError("Jacobian ideals are certified over GF(p)")
    return Ideal(F.ring, 3, [partial_derivative(F, v) for v in range(3)])


class SmoothnessCertificate(BaseModel):
    smooth_outside: bool
    excluded: list[list[int]]
    saturated_generators: int


def certify_smooth_outside(
    F: HomogeneousPoly, excluded: Sequence[Sequence[Any]], method: Optional[str] = None
) -> SmoothnessCertificate:
    """Saturate Jac(F) by each excluded point, then by (x, y, z).

    The result is the unit ideal exactly when every singular point of F over
    the algebraic closure is excluded. Saturating point by point agrees with
    saturating by the ideal of the whole set.
    """
    if F.is_zero():
        raise ValueError("The zero form defines no curve")
    field = F.ring
    ideal = jacobian_ideal(F)
    keys = [list(_normalized(p, field)) for p in excluded]
    for point in excluded:
        ideal = saturation(ideal, point_ideal(point, field), method)
        if ideal.generators and is_unit(ideal, method):
            break
        logger.debug("After saturating at %s: %d generators", point, len(ideal.generators))
    ideal = saturation(ideal, irrelevant_ideal(field), method)
    verdict = is_unit(ideal, method)
    return SmoothnessCertificate(smooth_outside=verdict, excluded=keys, saturated_generators=len(ideal.generators))


def base_locus_outside(
    forms: Sequence[HomogeneousPoly], excluded: Sequence[Sequence[Any]], method: Optional[str] = None
) -> bool:
    """True when the forms have no common zero away from the excluded points."""
    ideal = Ideal.generated_by(list(forms))
    for point in excluded:
        ideal = saturation(ideal, point_ideal(point, ideal.field), method)
    ideal = saturation(ideal, irrelevant_ideal(ideal.field), method)
    return is_unit(ideal, method)
