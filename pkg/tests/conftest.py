import pytest

_CRITERIA: list[tuple[str, bool, float]] = []


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion; printed in the terminal summary."""
    import time

    start = time.perf_counter()
    outcome = {"name": request.node.name}

    def set_name(name):
        outcome["name"] = name

    yield set_name
    failed = request.node.rep_call.failed if hasattr(request.node, "rep_call") else True
    _CRITERIA.append((outcome["name"], not failed, time.perf_counter() - start))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    rep = (yield).get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, secs in _CRITERIA:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  ({secs:.2f}s)")
