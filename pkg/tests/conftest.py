import random

import pytest

from algebra.hom import DEFAULT_BRANCHES, DEFAULT_PRIME, embed_tower
from algebra.primefield import PrimeField
from configs.settings import REPO_ROOT, Settings
from services.campedelli import CampedelliPipeline
from services.oort_peters import OortPetersPipeline
from storage.assets import AssetStore


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def gf101():
    return PrimeField(101)


@pytest.fixture(scope="session")
def hom():
    return embed_tower(DEFAULT_PRIME, DEFAULT_BRANCHES)


@pytest.fixture(scope="session")
def asset_store():
    return AssetStore(REPO_ROOT / "assets")


@pytest.fixture
def settings(tmp_path):
    return Settings(report_dir=tmp_path / "reports")


# pipelines memoise their stages, so one instance serves a whole session
@pytest.fixture(scope="session")
def campedelli(asset_store):
    return CampedelliPipeline(asset_store)


@pytest.fixture(scope="session")
def oort_peters(asset_store):
    return OortPetersPipeline(asset_store)
