import random

import pytest

_ACCEPTANCE: dict[str, str] = {}


def pytest_runtest_logreport(report):
    """Track acceptance-test outcomes for the terminal summary."""
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call":
        _ACCEPTANCE[report.nodeid] = report.outcome
    elif report.when == "setup" and report.outcome != "passed":
        _ACCEPTANCE[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion."""
    if not _ACCEPTANCE:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for nodeid in sorted(_ACCEPTANCE):
        tag = "PASS" if _ACCEPTANCE[nodeid] == "passed" else "FAIL"
        terminalreporter.write_line(f"[{tag}] {nodeid.split('::')[-1]}")


@pytest.fixture
def rng():
    return random.Random(20260815)
