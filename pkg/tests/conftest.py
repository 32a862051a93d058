import random

import pytest
from hypothesis import HealthCheck, settings

from cominrule.poset import build_box_poset

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

# every supported family, at small rank
SPACES = ["Gr:2,4", "Gr:2,5", "Gr:3,6", "Gr:4,7", "QB:3", "QB:4", "LG:2", "LG:3", "LG:4",
          "QD:4", "QD:5", "QD:6", "OG:4", "OG:5", "E6", "E7", "Pmin:2", "Pmin:3", "OGmin:3", "OGmin:4"]


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture(params=SPACES)
def poset(request):
    return build_box_poset(request.param)


# acceptance results, filled in by test_acceptance.py
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, line = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {line}")
