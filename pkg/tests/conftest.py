import sys

import numpy as np
import pytest
from hypothesis import settings

from spinrt.scalar import ScalarContext

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@pytest.fixture(params=[4, 8], ids=lambda r: f"r{r}")
def ctx(request):
    return ScalarContext(request.param)


@pytest.fixture
def ctx4():
    return ScalarContext(4)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def rel(a, b):
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
