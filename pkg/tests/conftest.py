import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from qfi import parse_ideal  # noqa: E402

TYPE_0010 = "x1*x2*x4,x1*x2*x5,x3*x4*x5,x1*x4*x5,x2*x3*x5"
TYPE_0022 = "x1*x2*x4,x1*x2*x5,x3*x4*x5,x1*x4*x5"
TYPE_00M1 = "x1*x2,x1*x3,x2*x3,x4*x5,x4*x6,x5*x6,x2*x4,x3*x5"


@pytest.fixture
def ideal_0010():
    return parse_ideal(TYPE_0010, 5)


@pytest.fixture
def ideal_0022():
    return parse_ideal(TYPE_0022, 5)


@pytest.fixture
def ideal_00m1():
    return parse_ideal(TYPE_00M1, 6)


@pytest.fixture
def path_f_ideal():
    return parse_ideal("x1*x2,x1*x3,x3*x4", 4)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
