"""
Plane curve analysis: local singularities, linear conditions, intersection
multiplicities, genus counts and the Campedelli octic construction.
"""

from .conditions import (
    ConditionMatrix,
    DegenerateSystemError,
    build_condition_rows,
    kernel_via_signed_minors,
    linear_system_basis,
    linear_system_dimension,
)
from .genus import genus_deficit, tangent_lines_not_components
from .intersection import (
    InfiniteIntersectionError,
    NonRationalTangentError,
    common_points,
    intersection_multiplicity,
    scan_points,
)
from .local import blowup_strict_transform, classify_singularity, multiplicity_at, tangent_cone
from .specs import (
    ClusterSpec,
    MissingTangentError,
    PointSpec,
    SingularityKind,
    SingularityReport,
    SingularitySpec,
)

__all__ = [
    'ClusterSpec',
    'ConditionMatrix',
    'DegenerateSystemError',
    'InfiniteIntersectionError',
    'MissingTangentError',
    'NonRationalTangentError',
    'PointSpec',
    'SingularityKind',
    'SingularityReport',
    'SingularitySpec',
    'blowup_strict_transform',
    'build_condition_rows',
    'classify_singularity',
    'common_points',
    'genus_deficit',
    'intersection_multiplicity',
    'kernel_via_signed_minors',
    'linear_system_basis',
    'linear_system_dimension',
    'multiplicity_at',
    'scan_points',
    'tangent_cone',
    'tangent_lines_not_components',
]
