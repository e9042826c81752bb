import json
import pathlib

import pytest
from hypothesis import HealthCheck, settings

from starrad import ScanConfig, SeriesConfig

settings.register_profile(
    "ci",
    deadline=None,
    max_examples=60,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")


@pytest.fixture(scope="session")
def cfg():
    return SeriesConfig()


@pytest.fixture(scope="session")
def scan():
    return ScanConfig()


@pytest.fixture(scope="session")
def golden():
    path = pathlib.Path(__file__).parent / "golden" / "golden.json"
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)["values"]
