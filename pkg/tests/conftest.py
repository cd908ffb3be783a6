import pytest

ACCEPTANCE_LINES = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.call_passed = rep.passed


@pytest.fixture
def criterion(request):
    """Record a one-line PASS/FAIL verdict for an acceptance criterion.

    Tests may put a short ``note`` into the yielded dict.
    """
    number, title = request.node.get_closest_marker("criterion").args
    details = {}
    yield details
    verdict = "PASS" if getattr(request.node, "call_passed", False) else "FAIL"
    note = f"  ({details['note']})" if "note" in details else ""
    ACCEPTANCE_LINES[number] = f"[{verdict}] {number:>2}. {title}{note}"


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])
