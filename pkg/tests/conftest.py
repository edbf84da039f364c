import pytest

from maxkcut.graph import Graph, graph_from_edges


@pytest.fixture
def triangle() -> Graph:
    return graph_from_edges([(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def five_cycle() -> Graph:
    return graph_from_edges([(i, (i + 1) % 5) for i in range(5)])


@pytest.fixture
def single_edge() -> Graph:
    return Graph(2, ((0, 1, 1.0),))


# acceptance summary ----------------------------------------------------------

_CRITERIA: dict[str, tuple[str, str, str]] = {}
_NOTES: list[str] = []


@pytest.fixture
def acceptance_note():
    """Lines appended here are printed under the acceptance summary."""
    return _NOTES.append


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(id, title): acceptance criterion")


def pytest_runtest_logreport(report):
    item_marker = getattr(report, "criterion", None)
    if item_marker is None:
        return
    ident, title = item_marker
    outcome = "SKIP" if report.skipped else ("PASS" if report.passed else "FAIL")
    previous = _CRITERIA.get(ident, (title, "PASS", ""))[1]
    if report.when == "call" or report.skipped or report.failed:
        if previous != "FAIL":
            reason = ""
            if report.skipped and isinstance(report.longrepr, tuple):
                reason = report.longrepr[2]
            elif report.failed:
                reason = str(report.longrepr.reprcrash.message if hasattr(report.longrepr, "reprcrash")
                             else report.longrepr).splitlines()[0][:160]
            _CRITERIA[ident] = (title, outcome, reason)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = (str(marker.args[0]), marker.args[1])


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for ident in sorted(_CRITERIA, key=lambda s: (int(s.rstrip("abc")), s)):
        title, outcome, reason = _CRITERIA[ident]
        line = f"criterion {ident:<3} {outcome}  {title}"
        terminalreporter.write_line(line + (f"  [{reason}]" if reason else ""))
    for note in _NOTES:
        terminalreporter.write_line(note)


def pytest_deselected(items):
    for item in items:
        marker = item.get_closest_marker("criterion")
        if marker is not None:
            _CRITERIA.setdefault(str(marker.args[0]), (marker.args[1], "NOT RUN", "deselected"))
