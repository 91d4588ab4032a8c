import pytest
from hypothesis import strategies as st

from abelwalls import Character, Surface

entries = st.integers(min_value=-100, max_value=100)
characters = st.builds(Character, entries, entries, entries)
nonzero_characters = characters.filter(lambda u: not u.is_zero)
surfaces = st.builds(Surface, st.integers(min_value=1, max_value=10))

_acceptance_results = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(label): acceptance criterion with a one-line label")


@pytest.fixture(autouse=True)
def _acceptance_label(request):
    marker = request.node.get_closest_marker("acceptance")
    if marker:
        request.node.user_properties.append(("acceptance", marker.args[0]))


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    label = dict(report.user_properties).get("acceptance")
    if label:
        _acceptance_results.append((label, report.passed, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed, duration in _acceptance_results:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {label}  ({duration:.2f}s)")
