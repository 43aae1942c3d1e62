import math
import pathlib

import pytest

GOLDEN_PATH = pathlib.Path(__file__).parent / "golden" / "specfun_golden.txt"

# one line per acceptance criterion, filled in by tests/test_acceptance.py
ACCEPTANCE_VERDICTS: list[str] = []


@pytest.fixture(scope="session")
def acceptance_verdicts():
    return ACCEPTANCE_VERDICTS


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_VERDICTS:
            terminalreporter.write_line(line)


def load_golden():
    """Parse the golden file into (function, nu, x, log_value) tuples."""
    rows = []
    for line in GOLDEN_PATH.read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        name, nu, x, mantissa, exponent = line.split(",")
        log_value = math.log(float(mantissa)) + float(exponent)
        rows.append((name, float(nu), float(x), log_value))
    return rows


@pytest.fixture(scope="session")
def golden_rows():
    return load_golden()
