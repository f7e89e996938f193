"""
Groebner bases over GF(p) and the ideal-theoretic certificates built on them.
"""

from .ideal import GroebnerBasis, Ideal, groebner_basis, is_unit, normal_form
from .saturation import (
    SmoothnessCertificate,
    base_locus_outside,
    certify_smooth_outside,
    intersect_ideals,
    jacobian_ideal,
    points_ideal,
    quotient_by_power,
    saturation,
)

__all__ = [
    'GroebnerBasis',
    'Ideal',
    'SmoothnessCertificate',
    'base_locus_outside',
    'certify_smooth_outside',
    'groebner_basis',
    'intersect_ideals',
    'is_unit',
    'jacobian_ideal',
    'normal_form',
    'points_ideal',
    'quotient_by_power',
    'saturation',
]
