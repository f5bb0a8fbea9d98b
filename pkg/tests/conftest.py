import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One PASS/FAIL line per acceptance criterion at the end of the run."""
    results = []
    for outcome in ("passed", "failed"):
        for report in terminalreporter.stats.get(outcome, []):
            if getattr(report, "when", None) != "call":
                continue
            if "test_acceptance.py" not in report.nodeid:
                continue
            name = report.nodeid.split("::")[-1]
            results.append((name, outcome == "passed"))
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok in sorted(results):
        terminalreporter.write_line(f"{name}: {'PASS' if ok else 'FAIL'}")
