import numpy as np
import pytest

from seidel_extremal.config import ACCEPTANCE_SEED

_acceptance_lines: list[str] = []


@pytest.fixture
def rng():
    return np.random.default_rng(ACCEPTANCE_SEED)


@pytest.fixture
def record_criterion():
    """Collects one PASS/FAIL line per acceptance criterion for the terminal summary."""

    def record(label: str, passed: bool, detail: str = ""):
        status = "PASS" if passed else "FAIL"
        _acceptance_lines.append(f"[{status}] {label}" + (f"  ({detail})" if detail else ""))
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
