import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ribbonpoly import named  # noqa: E402


@pytest.fixture
def annulus():
    return named("loop", twist=0, sign="+")


@pytest.fixture
def mobius():
    return named("loop", twist=1, sign="+")


@pytest.fixture
def bridge():
    return named("path", n=1)
