import re

_criteria = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _criteria.append(report)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for report in sorted(_criteria, key=lambda r: r.nodeid):
        number = int(re.search(r"test_criterion_(\d+)", report.nodeid).group(1))
        props = dict(report.user_properties)
        label = props.pop("label", report.nodeid)
        status = "PASS" if report.passed else "FAIL"
        details = "; ".join(f"{k}: {v}" for k, v in props.items())
        tr.write_line(f"{status}  criterion {number:2d}  {label}  [{details}]")
