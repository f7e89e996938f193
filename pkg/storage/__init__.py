"""
Storage for curve assets and verification reports.

Usage:
    from storage import AssetStore, load_curve_asset
    from storage.reports import ReportStore, VerificationReport
"""

from .assets import AssetError, AssetStore, CurveAsset, load_curve_asset, serialize_asset
from .reports import CheckOutcome, CheckRecord, ReportStore, VerificationReport

__all__ = [
    'AssetError',
    'AssetStore',
    'CheckOutcome',
    'CheckRecord',
    'CurveAsset',
    'ReportStore',
    'VerificationReport',
    'load_curve_asset',
    'serialize_asset',
]
