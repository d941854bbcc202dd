import pytest

_criteria_results = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call":
        return
    name = item.name
    if not name.startswith("test_criterion_"):
        return
    try:
        num = int(name.split("_")[2])
    except ValueError:
        return
    doc = (item.function.__doc__ or "").strip().splitlines()
    desc = doc[0] if doc else name
    status = "PASS" if report.passed else ("SKIP" if report.skipped else "FAIL")
    _criteria_results[num] = (status, desc)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _criteria_results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria_results):
        status, desc = _criteria_results[num]
        terminalreporter.write_line(f"criterion {num:02d} {status} {desc}")
