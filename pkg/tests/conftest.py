"""Collects per-criterion outcomes of the acceptance suite and prints one line each."""

from __future__ import annotations

import pytest

_OUTCOMES: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion a test belongs to")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or (report.when != "call" and not report.failed):
        return
    number, title = marker.args
    entry = _OUTCOMES.setdefault(number, {"title": title, "passed": 0, "failed": []})
    if report.passed:
        entry["passed"] += 1
    elif report.failed:
        msg = str(getattr(report.longrepr, "reprcrash", None) and report.longrepr.reprcrash.message or "")
        first = msg.splitlines()[0] if msg else ""
        entry["failed"].append((item.name, first if len(first) <= 160 else first[:157] + "..."))


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    tr = terminalreporter
    tr.write_sep("=", "acceptance criteria")
    for number in sorted(_OUTCOMES):
        e = _OUTCOMES[number]
        status = "FAIL" if e["failed"] else "PASS"
        total = e["passed"] + len(e["failed"])
        tr.write_line(f"criterion {number:>2}: {status}  {e['title']}  ({e['passed']}/{total} tests)")
        for name, msg in e["failed"]:
            tr.write_line(f"              {name}: {msg}")
