import pytest

from latpath.steps import make_family

# filled by test_acceptance; printed at the end of the run
ACCEPTANCE = {}


@pytest.fixture(scope="session")
def A12():
    return make_family("A", 1, 2)


@pytest.fixture(scope="session")
def B1():
    return make_family("B", 1)


@pytest.fixture(scope="session")
def D11():
    return make_family("D", 1, 1)


@pytest.fixture(scope="session")
def E():
    return make_family("E")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, text = ACCEPTANCE[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {text}")
