from pathlib import Path

import pytest

# Spectral-data fixtures live next to the tests.
# Use `datadir` fixture where possible and use `DATASETS_PATH` in
# `pytest.mark.parametrize()` where you cannot use `datadir`.
from qwalk_bolts.closed_form import BaseSpectralData
from qwalk_bolts.config import NumericConfig
from tests import DATASETS_PATH, reset_seed


@pytest.fixture(scope="session")
def datadir():
    return Path(DATASETS_PATH)


@pytest.fixture
def golay_data(datadir):
    return BaseSpectralData.load(str(datadir / "golay_double_coset.json"))


@pytest.fixture
def config():
    return NumericConfig()


@pytest.fixture(autouse=True)
def _isolate_environment(monkeypatch):
    monkeypatch.delenv("QWALK_TOL", raising=False)
    reset_seed()
