import numpy as np
import pytest
from msrd.fields import make_extension, make_field

_criteria: dict[int, list[tuple[str, str, str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        number, title = mark.args
        _criteria.setdefault(number, []).append((item.name, title, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        rows = _criteria[number]
        ok = all(o == "passed" for _, _, o in rows)
        title = rows[0][1]
        terminalreporter.write_line(
            f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}  ({len(rows)} checks)"
        )


@pytest.fixture
def rng():
    return np.random.default_rng(20261015)


@pytest.fixture(scope="session")
def F2():
    return make_field(2)


@pytest.fixture(scope="session")
def F3():
    return make_field(3)


@pytest.fixture(scope="session")
def F4():
    return make_field(4)


SMALL_EXTENSIONS = [(2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (4, 2), (5, 2), (9, 2)]


@pytest.fixture(scope="session", params=SMALL_EXTENSIONS, ids=lambda p: f"GF({p[0]}^{p[1]})")
def ext(request):
    q, n = request.param
    return make_extension(make_field(q), n)
