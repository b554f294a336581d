import pytest

from influence import corpus
from influence.io import load_network, load_script, load_sociogram

ACCEPTANCE_RESULTS = {}


@pytest.fixture(scope="session")
def n1():
    return load_network(corpus.path("n1.json"))


@pytest.fixture(scope="session")
def n2():
    return load_network(corpus.path("n2.json"))


@pytest.fixture(scope="session")
def s1():
    return load_sociogram(corpus.path("s1.json"))


@pytest.fixture(scope="session")
def s2():
    return load_sociogram(corpus.path("s2.json"))


@pytest.fixture(scope="session")
def s3():
    return load_sociogram(corpus.path("s3.json"))


@pytest.fixture(scope="session")
def prop_scripts():
    return {k: load_script(corpus.path(f"prop{k}.proof")) for k in (1, 2, 3)}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}")
