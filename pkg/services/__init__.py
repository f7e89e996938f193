"""
Verification services for the two double planes.

Modules:
    campedelli: checks on the branch octic, conic and torsion of the Campedelli double plane
    oort_peters: checks on the Oort-Peters double plane
    verifier: check registry and the concurrent runner
"""

from .campedelli import CampedelliPipeline
from .oort_peters import OortPetersPipeline
from .pipeline import CheckSpec, Pipeline
from .verifier import UnknownCheckError, build_registry, run_checks, select_checks

__all__ = [
    'CampedelliPipeline',
    'CheckSpec',
    'OortPetersPipeline',
    'Pipeline',
    'UnknownCheckError',
    'build_registry',
    'run_checks',
    'select_checks',
]
