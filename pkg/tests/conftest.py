import itertools

import pytest

from sunspec.hypergraph import SunflowerParams

AC_GRID = [(3, 1, 1), (3, 1, 2), (3, 2, 1), (3, 2, 2), (4, 1, 1), (4, 2, 1), (4, 3, 1)]


def small_params(kmax=5, pmax=4):
    return [
        SunflowerParams(k, s, p)
        for k in range(3, kmax + 1)
        for s in range(1, k)
        for p in range(1, pmax + 1)
    ]


@pytest.fixture(params=AC_GRID, ids=lambda t: "S%s" % (t,))
def grid_params(request):
    return SunflowerParams(*request.param)


_ACCEPTANCE: dict[str, tuple[str, float]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_ac" not in report.nodeid:
        return
    name = report.nodeid.split("::test_ac")[1].split("_")[0]
    label = "AC-%s" % name
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _ACCEPTANCE[label] = ("PASS" if report.passed else "FAIL", report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_ACCEPTANCE, key=lambda s: int(s[3:])):
        verdict, secs = _ACCEPTANCE[label]
        terminalreporter.write_line("%-6s %s  (%.2fs)" % (label, verdict, secs))
