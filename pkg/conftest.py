"""Shared pytest fixtures."""
import json
from pathlib import Path

import pytest

from utils.config import reset_config
from utils.formats import parse_ideal

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(autouse=True)
def fresh_config(monkeypatch):
    """Every test starts from default settings and a fresh configuration singleton."""
    for name in (
        "DEGCX_SEED",
        "DEGCX_INSTANCES",
        "DEGCX_COHOMOLOGY_INSTANCES",
        "DEGCX_REGULARITY_INSTANCES",
        "DEGCX_PARITY_INSTANCES",
        "DEGCX_MAX_N",
        "DEGCX_MAX_S",
        "DEGCX_MAX_DEGREE",
        "DEGCX_DEFAULT_N",
        "DEGCX_MAX_LATTICE",
        "DEGCX_LOG_LEVEL",
        "DEGCX_PROGRESS",
    ):
        monkeypatch.delenv(name, raising=False)
    reset_config()
    yield
    reset_config()


@pytest.fixture
def worked_example():
    data = json.loads((FIXTURES / "worked_example.json").read_text())
    data["I"] = parse_ideal(data["I"])
    data["J"] = parse_ideal(data["J"])
    data["gamma"] = tuple(data["gamma"])
    return data


@pytest.fixture
def ideal():
    """Parse ideal text, e.g. ideal("n=4; x1*x2")."""
    return parse_ideal
