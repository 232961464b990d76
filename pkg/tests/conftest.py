from fractions import Fraction

import pytest

from l1sig.generators import complete_bipartite, shortest_path_metric
from l1sig.metric import FiniteMetric, PointConfig, metric_from_points

_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    number, title = marker.args
    _CRITERIA[number] = ("PASS" if report.passed else "FAIL", title)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        status, title = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number}: {status}  {title}")


@pytest.fixture
def uniform3():
    return FiniteMetric.uniform(3)


@pytest.fixture
def k23():
    return shortest_path_metric(complete_bipartite(2, 3))


@pytest.fixture
def line013():
    return metric_from_points(PointConfig(((0,), (1,), (3,))), 1)


@pytest.fixture
def half():
    return Fraction(1, 2)
