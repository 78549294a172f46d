import sys
from pathlib import Path

import pytest

from btk import config

sys.path.insert(0, str(Path(__file__).parent))

_acceptance: dict[str, tuple[str, float]] = {}


@pytest.fixture(autouse=True, scope="session")
def _cross_checks_on():
    config.set_oracle(True)
    yield
    config.set_oracle(False)


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py::test_criterion_" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        _acceptance[name] = ("PASS" if report.passed else "FAIL", report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance, key=lambda n: int(n.split("_")[2])):
        verdict, secs = _acceptance[name]
        terminalreporter.write_line(f"{verdict}  {name}  ({secs:.2f} s)")
