import pytest

_results: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or report.when != "call" and not report.failed:
        return
    number, title = mark.args
    entry = _results.setdefault(number, {"title": title, "ok": True, "seconds": 0.0, "failed": []})
    entry["seconds"] += report.duration
    if report.failed:
        entry["ok"] = False
        entry["failed"].append(item.callspec.id if hasattr(item, "callspec") else item.name)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        e = _results[number]
        line = f"{'PASS' if e['ok'] else 'FAIL'}  {number:>2}. {e['title']}  ({e['seconds']:.2f} s)"
        if e["failed"]:
            line += f"  failing: {', '.join(e['failed'])}"
        terminalreporter.write_line(line)
