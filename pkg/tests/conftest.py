from pathlib import Path

import numpy as np
import pytest

PROBLEMS = Path(__file__).resolve().parent.parent / "problems"


@pytest.fixture
def rng():
    return np.random.default_rng(20261018)


@pytest.fixture
def problems_dir():
    return PROBLEMS
