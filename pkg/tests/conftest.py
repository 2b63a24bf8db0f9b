import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from xiprobe.zeros import bundled_zero_table  # noqa: E402


@pytest.fixture(scope="session")
def table():
    return bundled_zero_table()


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)

