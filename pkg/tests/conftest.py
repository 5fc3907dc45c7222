import pytest

_results = {}


def pytest_collection_modifyitems(config, items):
    import os
    if os.environ.get("HOOKBIAS_LONG") == "1":
        return
    skip = pytest.mark.skip(reason="long run, set HOOKBIAS_LONG=1")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    if rep.when == "call" or (rep.when == "setup" and rep.skipped):
        if hasattr(rep, "wasxfail"):
            status = "XFAIL (non-blocking)" if rep.skipped else "XPASS"
        elif rep.passed:
            status = "PASS"
        elif rep.skipped:
            status = "SKIP"
        else:
            status = "FAIL"
        _results.setdefault((number, title), []).append((item.name, status))
    elif rep.failed:
        _results.setdefault((number, title), []).append((item.name, "ERROR"))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for (number, title), runs in sorted(_results.items()):
        for name, status in runs:
            tr.write_line(f"criterion {number:>2} {status:<20} {title}  [{name}]")
