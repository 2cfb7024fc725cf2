
import random

import pytest

from schubCalc import constants as const
from schubCalc.configuration import set_config


@pytest.fixture(autouse=True)
def default_config(monkeypatch, tmp_path):
    "Every test starts on the default configuration, away from any schubcalc.yaml in the working directory"
    monkeypatch.delenv(const.ENV_MAX_N, raising=False)
    monkeypatch.chdir(tmp_path)
    set_config(None)
    yield
    set_config(None)

@pytest.fixture
def rng():
    return random.Random(20240611)
