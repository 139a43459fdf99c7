import pathlib

import numpy as np
import pytest

from bgedist import BGE, glass_fibre_sample

REPO_ROOT = pathlib.Path(__file__).resolve().parent.parent

#: (name, ok, detail) tuples collected by the acceptance module.
ACCEPTANCE_RESULTS: list = []


@pytest.fixture(scope="session")
def glass_fibre():
    return glass_fibre_sample()


@pytest.fixture
def rng():
    return np.random.default_rng(20240911)


@pytest.fixture(scope="session")
def parameter_grid():
    """3x3x3x3 grid spanning {0.5, 1, 2.5} per parameter."""
    vals = (0.5, 1.0, 2.5)
    return [BGE(a, b, lam, alpha)
            for a in vals for b in vals for lam in vals for alpha in vals]


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        flag = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{flag}] {name}: {detail}")
