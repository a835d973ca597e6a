import re

_CRITERION = re.compile(r"test_criterion_(\d+)_(\w+)")
_results: dict[str, tuple[str, bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: end-to-end acceptance criterion")


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    key = m.group(1)
    label = m.group(2).replace("_", " ")
    ok = _results.get(key, (label, True))[1]
    if report.when == "call" or report.failed:
        ok = ok and report.passed
    _results[key] = (label, ok)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_results):
        label, ok = _results[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {int(key):>2}: {label}")
