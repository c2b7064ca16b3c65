"""Prints one PASS/FAIL line per acceptance criterion at the end of the run."""

import pytest

_results = {}   # criterion number -> list of (label, passed, seconds)


def pytest_runtest_logreport(report):
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _results.setdefault(props["criterion"], []).append(
            (props.get("label", report.nodeid), report.passed, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(_results):
        parts = _results[num]
        ok = all(p for _, p, _ in parts)
        secs = sum(s for _, _, s in parts)
        detail = "; ".join(f"{label}: {'pass' if p else 'FAIL'}" for label, p, _ in parts)
        tr.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'} ({secs:.1f}s) {detail}")


@pytest.fixture
def criterion(request):
    """Tag a test as (part of) acceptance criterion ``num``."""
    def tag(num, label):
        request.node.user_properties.append(("criterion", num))
        request.node.user_properties.append(("label", label))
    return tag
