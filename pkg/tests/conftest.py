import re

_CRITERION = re.compile(r"test_criterion_(\d+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion, after the test run."""
    outcomes = {}
    for status, label in (("passed", "PASS"), ("failed", "FAIL"), ("error", "FAIL")):
        for rep in terminalreporter.stats.get(status, []):
            m = _CRITERION.search(getattr(rep, "nodeid", ""))
            if m and getattr(rep, "when", "call") == "call":
                outcomes[int(m.group(1))] = label
    if not outcomes:
        return
    terminalreporter.write_line("")
    for n in sorted(outcomes):
        terminalreporter.write_line(f"ACCEPTANCE {n}: {outcomes[n]}")
