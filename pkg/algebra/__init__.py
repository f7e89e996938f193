"""
Exact algebra layer for the Godeaux double-plane toolkit.

Modules:
    tower: the number field Q(alpha, beta, delta) on its 8-element basis
    primefield: GF(p) and its elements
    rings: coefficient-ring adapters (rationals, tower, prime fields)
    hom: modular square roots and embeddings of the tower into GF(p)
    poly: sparse multivariate and homogeneous polynomials
    matrix: fraction-free determinants, ranks, kernels
    univariate: dense univariate polynomials and binary forms
    resultant: Sylvester resultants
    conic: quadratic parametrizations of conics
"""

from .conic import ConicParametrization, compose_with_parametrization
from .hom import (
    PrimeSearchError,
    RationalReduction,
    RingHom,
    TowerEmbeddingError,
    embed_tower,
    find_good_prime,
    sqrt_mod_p,
)
from .poly import HomogeneousPoly, InvalidPointError, Polynomial
from .primefield import PrimeField, PrimeFieldElement
from .rings import QQ_FIELD, TOWER, ring_from_tag
from .tower import ALPHA, BETA, DELTA, TowerElement, tower_inverse, tower_mul

__all__ = [
    'ALPHA',
    'BETA',
    'DELTA',
    'ConicParametrization',
    'HomogeneousPoly',
    'InvalidPointError',
    'Polynomial',
    'PrimeField',
    'PrimeFieldElement',
    'PrimeSearchError',
    'QQ_FIELD',
    'RationalReduction',
    'RingHom',
    'TOWER',
    'TowerElement',
    'TowerEmbeddingError',
    'compose_with_parametrization',
    'embed_tower',
    'find_good_prime',
    'ring_from_tag',
    'sqrt_mod_p',
    'tower_inverse',
    'tower_mul',
]
