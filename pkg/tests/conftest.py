import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

_criteria: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion checked by this test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, text = mark.args
    entry = _criteria.setdefault(number, {"text": text, "ok": True, "seen": False})
    if report.when == "call":
        entry["seen"] = True
    if report.failed:
        entry["ok"] = False


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        verdict = "PASS" if entry["ok"] and entry["seen"] else "FAIL"
        terminalreporter.write_line(f"criterion {number:>2}: {verdict}  {entry['text']}")
