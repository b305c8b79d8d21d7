"""Shared test plumbing: the acceptance scoreboard.

Acceptance tests record one entry each; the terminal summary prints a
single pass/fail line per criterion so the verdicts are readable
without digging through the pytest output.
"""

ACCEPTANCE_RESULTS = []


def record_acceptance(name, passed, seconds, budget=None):
    ACCEPTANCE_RESULTS.append((name, bool(passed), seconds, budget))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for name, passed, seconds, budget in ACCEPTANCE_RESULTS:
        verdict = "PASS" if passed else "FAIL"
        timing = f"{seconds:.2f}s"
        if budget is not None:
            timing += f" of {budget:.0f}s"
        terminalreporter.write_line(
            f"ACCEPTANCE {name}: {verdict} ({timing})")
