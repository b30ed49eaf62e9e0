import pytest

from mnet import mnetwork
from mnet.matrix import Polarity, build_mn_matrix, build_sign_matrix, to_binary, Variant
from mnet.graph import build_mgraph

ACCEPTANCE_RESULTS: list[tuple[str, bool]] = []


@pytest.fixture(scope="session")
def g12():
    return mnetwork(6)


@pytest.fixture(scope="session")
def g8():
    return mnetwork(4)


@pytest.fixture(scope="session")
def g8_even():
    """The n=4 graph built with the even-positive rule."""
    base = build_mn_matrix(4, Variant.TYPE_II)
    return build_mgraph(to_binary(build_sign_matrix(base, Polarity.EVEN_POSITIVE)))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}")
