import os
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from fraccut import load_bundled
from fraccut.gf2 import BitMatrix

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", deadline=None, max_examples=25, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

F = Fraction


@pytest.fixture(scope="session")
def hamming():
    return load_bundled("hamming.txt")


@pytest.fixture(scope="session")
def hamming_star():
    return load_bundled("hamming_star.txt")


@pytest.fixture(scope="session")
def golay():
    return load_bundled("golay.alist")


def random_matrix(rng: np.random.Generator, m: int, n: int, max_row_weight: int | None = None) -> BitMatrix:
    """Random m x n matrix with nonzero rows (row weight capped if asked)."""
    rows = []
    cap = max_row_weight or n
    while len(rows) < m:
        w = int(rng.integers(1, cap + 1))
        row = np.zeros(n, dtype=int)
        row[rng.choice(n, size=w, replace=False)] = 1
        rows.append(row)
    return BitMatrix.from_numpy(np.array(rows))


# one pass/fail line per acceptance criterion, printed at the end of the run
_criteria: dict[str, tuple[str, str, str]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    props = dict(report.user_properties)
    label = props.get("criterion", report.nodeid.split("::")[-1])
    detail = props.get("detail", "")
    if report.when == "call" or report.outcome != "passed":
        outcome = "SKIP" if report.skipped else ("PASS" if report.passed else "FAIL")
        if report.when != "call" and outcome == "FAIL":
            detail = f"error during {report.when}"
        _criteria[report.nodeid] = (label, outcome, detail)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome, detail in _criteria.values():
        terminalreporter.write_line(f"{outcome:4}  {label}" + (f"  [{detail}]" if detail else ""))
