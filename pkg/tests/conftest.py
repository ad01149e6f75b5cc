"""Shared fixtures and the acceptance-criteria summary hook.

Tests marked ``@pytest.mark.acceptance(N, "description")`` feed a summary
block printed at the end of the run with one PASS/FAIL line per criterion,
regardless of output capturing.
"""

import pytest


def pytest_configure(config):
    config.addinivalue_line(
        "markers",
        "acceptance(num, description): tags a test as one of the numbered acceptance criteria",
    )
    config._acceptance_results = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    num, description = marker.args
    store = item.session.config._acceptance_results
    if rep.when == "call":
        previous_ok = store.get(num, (True, description))[0]
        store[num] = (previous_ok and rep.passed, description)
    elif rep.failed:  # setup/teardown error counts as a failure
        store[num] = (False, description)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    store = getattr(config, "_acceptance_results", {})
    if not store:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num in sorted(store):
        ok, description = store[num]
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {num}: {verdict} - {description}")
