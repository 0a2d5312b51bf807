import pytest

from corpus import CORPUS, MAXIMUM


@pytest.fixture(params=sorted(MAXIMUM), ids=str)
def maximum_family(request):
    return MAXIMUM[request.param]


@pytest.fixture(params=sorted(CORPUS), ids=str)
def any_family(request):
    return CORPUS[request.param]


def pytest_terminal_summary(terminalreporter):
    module = __import__("sys").modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        status, title = results[number]
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {title}")
