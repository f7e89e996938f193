"""
Startup checks for a verification run
Creates the report directory, prints the environment and checks the assets
"""

import os
import sys
from pathlib import Path

from configs.settings import Settings, load_settings
from storage.assets import AssetError, AssetStore

ENVIRONMENT_VARIABLES = {
    'GODEAUX_PRIME': 'Prime for the tower embedding (default: 30047)',
    'GODEAUX_BRANCHES': 'Branch bits for alpha, beta, delta (default: 1,0,1)',
    'GODEAUX_OP_PRIME': 'Prime for the Oort-Peters reduction (default: 10009)',
    'GODEAUX_ASSET_DIR': 'Curve asset directory (default: assets/)',
    'GODEAUX_REPORT_DIR': 'Report directory (default: reports/)',
    'GODEAUX_LOG_LEVEL': 'Log level (default: INFO)',
    'GODEAUX_MAX_WORKERS': 'Concurrent checks (default: 4)',
    'GODEAUX_GROEBNER_METHOD': 'buchberger or f5b (default: buchberger)',
}


def validate_environment():
    """
    Print which settings come from the environment.
    """
    print("=" * 50)
    print("Environment Configuration Check")
    print("=" * 50)

    for var, description in ENVIRONMENT_VARIABLES.items():
        if os.getenv(var):
            print(f"✅ {var}: {os.getenv(var)}")
        else:
            print(f"ℹ️ {var}: Not set - {description}")

    print("=" * 50)


def create_directories(settings: Settings):
    Path(settings.report_dir).mkdir(parents=True, exist_ok=True)
    print(f"✅ Report directory ready: {settings.report_dir}")


def check_assets(settings: Settings) -> AssetStore:
    """
    The asset store, after making sure every shipped asset is present.
    """
    store = AssetStore(settings.asset_dir)
    missing = store.missing()
    if missing:
        raise AssetError(f"Missing assets in {settings.asset_dir}: {', '.join(missing)}")
    return store


def initialize(settings: Settings) -> AssetStore:
    create_directories(settings)
    store = check_assets(settings)
    print(f"✅ {len(store.names())} curve assets found in {settings.asset_dir}")
    return store


if __name__ == '__main__':
    try:
        current = load_settings()
    except ValueError as e:
        print(f"❌ {e}")
        sys.exit(2)
    validate_environment()
    try:
        initialize(current)
    except AssetError as e:
        print(f"❌ {e}")
        sys.exit(2)
