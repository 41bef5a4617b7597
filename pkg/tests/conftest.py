import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from roughdm.relation import BinaryRelation

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def reflexive_relations(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    succ = [draw(st.integers(0, (1 << n) - 1)) | (1 << x) for x in range(n)]
    return BinaryRelation(n, tuple(succ))


@st.composite
def any_relations(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    return BinaryRelation(n, tuple(draw(st.integers(0, (1 << n) - 1)) for _ in range(n)))


# -- acceptance summary: one line per criterion ------------------------------------------

_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by a test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        status = "PASS" if rep.passed else "FAIL"
        prev = _CRITERIA.get(number)
        if prev is None or prev[0] == "PASS":
            _CRITERIA[number] = (status, title)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        status, title = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number}: {status}  {title}")
