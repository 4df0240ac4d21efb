_criteria = {}


def pytest_collection_modifyitems(items):
    for item in items:
        if item.module.__name__.endswith("test_acceptance") and item.name.startswith("test_criterion_"):
            doc = (item.function.__doc__ or "").strip()
            _criteria[item.nodeid] = [item.name[len("test_criterion_"):], doc, None]


def pytest_runtest_logreport(report):
    entry = _criteria.get(report.nodeid)
    if entry is None:
        return
    if report.when == "call" or report.failed:
        if entry[2] != "FAIL":
            entry[2] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    ran = [e for e in _criteria.values() if e[2] is not None]
    if not ran:
        return
    terminalreporter.section("acceptance criteria")
    for key, doc, status in ran:
        terminalreporter.write_line(f"[{status}] criterion {key}: {doc}")
