"""Collects acceptance outcomes and prints one line per criterion."""

from collections import defaultdict

_CRITERIA: dict[str, int] = {}
_OUTCOMES: dict[int, list[bool]] = defaultdict(list)


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            _CRITERIA[item.nodeid] = mark.args[0]


def pytest_runtest_logreport(report):
    number = _CRITERIA.get(report.nodeid)
    if number is None:
        return
    if report.when == "call" or report.failed:
        _OUTCOMES[number].append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(set(_CRITERIA.values())):
        results = _OUTCOMES.get(number)
        if not results:
            status = "NOT RUN"
        else:
            status = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status}")
