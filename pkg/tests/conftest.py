import pytest

from weightdyn.graph import WeightedGraph


def path_graph(weights, W=10):
    """Undirected path 1-2-...-k with the given edge weights."""
    return WeightedGraph(len(weights) + 1, [(i + 1, i + 2, w) for i, w in enumerate(weights)], W=W)


@pytest.fixture
def triangle():
    return WeightedGraph(3, [(1, 2, 1), (2, 3, 2), (1, 3, 3)], W=5)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            item.user_properties.append(("criterion", mark.args))


def pytest_terminal_summary(terminalreporter):
    rows = []
    for outcome in ("passed", "failed"):
        for report in terminalreporter.getreports(outcome):
            props = dict(report.user_properties)
            if "criterion" in props and report.when == "call":
                number, title = props["criterion"]
                rows.append((number, title, outcome))
    if rows:
        terminalreporter.section("acceptance criteria")
        for number, title, outcome in sorted(rows):
            verdict = "PASS" if outcome == "passed" else "FAIL"
            terminalreporter.write_line(f"criterion {number:>2}: {verdict}  {title}")
