import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_criteria = {}
_outcomes = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            _criteria[item.nodeid] = mark.args


def pytest_runtest_logreport(report):
    if report.nodeid not in _criteria:
        return
    if report.failed or (report.when == "call" and report.nodeid not in _outcomes):
        _outcomes[report.nodeid] = "FAIL" if report.failed else "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, (number, text) in sorted(_criteria.items(), key=lambda kv: kv[1][0]):
        status = _outcomes.get(nodeid, "NOT RUN")
        terminalreporter.write_line(f"criterion {number:2d}: {status:7s} {text}")
