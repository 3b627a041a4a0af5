import pytest

from fuscat import catalog
from fuscat.category_data import BaseEmbedding, FusionRing

CATALOG_IDS = [e.id for e in catalog.builtin_catalog()]
MODULAR_IDS = ["trivial", "fibonacci", "ising", "toric_code"]


@pytest.fixture(params=CATALOG_IDS)
def entry(request):
    return catalog.get_entry(request.param)


@pytest.fixture
def ising():
    return catalog.load("ising").ribbon


@pytest.fixture
def fib():
    return catalog.load("fibonacci").ribbon


@pytest.fixture
def toric():
    return catalog.load("toric_code").ribbon


@pytest.fixture
def rep_z2():
    return catalog.load("rep_z2").ribbon


@pytest.fixture
def svec():
    return catalog.load("svec").ribbon


@pytest.fixture
def rep_z2_into_ising(rep_z2, ising):
    """psi -> eps: fusion-compatible but eps is not transparent in Ising."""
    return BaseEmbedding.from_labels(rep_z2, ising, {"1": "1", "psi": "eps"})


def two_simple_ring(name, entries):
    return FusionRing.from_entries(name, ["1", "x"], "1", entries)


# one line per acceptance criterion in the terminal summary
_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        crit = report.nodeid.split("::")[-1]
        num = crit.split("_")[2]
        prev = _acceptance.get(num, "PASS")
        _acceptance[num] = "FAIL" if report.failed or prev == "FAIL" else "PASS"
    elif "test_acceptance.py" in report.nodeid and report.failed:
        num = report.nodeid.split("::")[-1].split("_")[2]
        _acceptance[num] = "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_acceptance, key=int):
        terminalreporter.write_line(f"criterion {int(num):2d}: {_acceptance[num]}")
