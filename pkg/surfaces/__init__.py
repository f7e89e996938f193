"""
Surfaces: divisor classes on blown-up planes, double-cover invariants and
the torsion computation for both double planes.
"""

from .cover import (
    CoverInvariants,
    contractible_branch_curves,
    double_cover_invariants,
    h0_of_class,
    remove_fixed_exceptional_parts,
)
from .lattice import (
    BlowupConfig,
    Center,
    CurveClassTable,
    DivClass,
    LatticeMismatchError,
    canonical_class,
    intersect,
    strict_transform_class,
)
from .pencils import bicanonical_pencil_check, tricanonical_base_points, verify_bicanonical_quadric_relation
from .torsion import (
    BranchComponent,
    InconsistentTorsionError,
    TorsionReport,
    beauville_kernel,
    half_class,
    miyaoka_conclusion,
)

__all__ = [
    'BlowupConfig',
    'BranchComponent',
    'Center',
    'CoverInvariants',
    'CurveClassTable',
    'DivClass',
    'InconsistentTorsionError',
    'LatticeMismatchError',
    'TorsionReport',
    'beauville_kernel',
    'bicanonical_pencil_check',
    'canonical_class',
    'contractible_branch_curves',
    'double_cover_invariants',
    'h0_of_class',
    'half_class',
    'intersect',
    'miyaoka_conclusion',
    'remove_fixed_exceptional_parts',
    'strict_transform_class',
    'tricanonical_base_points',
    'verify_bicanonical_quadric_relation',
]
