"""
Configuration module for the Godeaux verifier.

Modules:
    settings: GODEAUX_* environment settings and the per-run configuration
    logger: structured logging stamped with the running check
"""

from .logger import StructuredLogger, check_id_var
from .settings import RunConfig, Settings, configure_logging, load_settings

__all__ = [
    'RunConfig',
    'Settings',
    'StructuredLogger',
    'check_id_var',
    'configure_logging',
    'load_settings',
]
