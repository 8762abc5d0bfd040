import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "default", max_examples=25, deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.register_profile("thorough", max_examples=200, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

EIGHT_LINES = """3
# xz(x-z)(x-y)(y-z)(y-2z)(y-3z)(y-4z)
1 0 0
0 0 1
1 0 -1
1 -1 0
0 1 -1
0 1 -2
0 1 -3
0 1 -4
"""


@pytest.fixture(scope="session")
def eight_lines():
    from leflab.arrangement import parse_arrangement

    return parse_arrangement(EIGHT_LINES, name="eight-lines")


@pytest.fixture(scope="session")
def eight_lines_jacobian(eight_lines):
    from leflab.arrangement import jacobian_ideal

    return jacobian_ideal(eight_lines)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
