import pytest

_criteria: dict[int, tuple[str, str, float]] = {}
_setup_secs: dict[str, float] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    num, text = marker.args
    if rep.when == "setup":
        _setup_secs[item.nodeid] = rep.duration
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        secs = rep.duration + (_setup_secs.get(item.nodeid, 0.0) if rep.when == "call" else 0.0)
        _criteria[num] = (text, "PASS" if rep.passed else "FAIL", secs)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        text, status, secs = _criteria[num]
        terminalreporter.write_line(f"[{status}] criterion {num:2d}: {text} ({secs:.2f}s)")
