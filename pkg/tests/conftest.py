import pytest

from sdgbent.enumeration import enumerate_self_dual
from sdgbent.gbf import GBF


@pytest.fixture(scope="session")
def sd44():
    return enumerate_self_dual(4, 4, "sd").found


@pytest.fixture(scope="session")
def asd44():
    return enumerate_self_dual(4, 4, "asd").found


@pytest.fixture
def f0002():
    return GBF(2, 4, (0, 0, 0, 2))


@pytest.fixture
def g1333():
    return GBF(2, 4, (1, 3, 3, 3))


def pytest_terminal_summary(terminalreporter):
    from tests.acceptance_log import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS, key=lambda k: (int("".join(c for c in k if c.isdigit())), k)):
        ok, detail = RESULTS[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {key}: {detail}")
