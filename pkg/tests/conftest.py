import pytest

from e7kr.kr import KRCrystal, build_kr


@pytest.fixture(scope="session")
def kr1():
    return KRCrystal(1)


@pytest.fixture(scope="session")
def kr2():
    return KRCrystal(2)


@pytest.fixture(scope="session")
def kr3():
    return KRCrystal(3)


@pytest.fixture(scope="session")
def graph1(kr1):
    return build_kr(1, kr=kr1)


@pytest.fixture(scope="session")
def graph2(kr2):
    return build_kr(2, kr=kr2)


@pytest.fixture(scope="session")
def graph3(kr3):
    return build_kr(3, kr=kr3)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
