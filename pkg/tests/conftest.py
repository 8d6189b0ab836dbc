from functools import lru_cache

import pytest

from queens_spectra.board import build_graph
from queens_spectra.harness import _exact_scan
from queens_spectra.spectrum import dense_spectrum


@lru_cache(maxsize=None)
def graph(n):
    return build_graph(n)


@lru_cache(maxsize=None)
def spectrum(n):
    return dense_spectrum(graph(n))


@lru_cache(maxsize=None)
def exact_scan(n):
    """((lo, hi), [(lam, cert), ...]) with the default seed."""
    return _exact_scan(n, seed=20240, jobs=1, cross_check=True)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)


@pytest.fixture
def record_criterion():
    def record(line):
        ACCEPTANCE_LINES.append(line)
        print(line)
    return record
