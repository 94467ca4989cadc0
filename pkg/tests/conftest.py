import pytest

_RESULTS = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        if hasattr(report, "wasxfail"):
            state = f"expected failure: {report.wasxfail.removeprefix('reason: ')}"
        else:
            state = report.outcome
        _RESULTS.setdefault(marker.args[0], []).append((item.name, state))


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_RESULTS):
        parts = _RESULTS[n]
        bad = [(name, state) for name, state in parts if state != "passed"]
        verdict = "PASS" if not bad else "FAIL"
        terminalreporter.write_line(f"criterion {n}: {verdict} ({len(parts) - len(bad)}/{len(parts)} checks)")
        for name, state in bad:
            terminalreporter.write_line(f"    not met: {name} ({state})")
