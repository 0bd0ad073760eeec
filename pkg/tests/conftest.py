import re


def pytest_terminal_summary(terminalreporter):
    """One visible pass/fail line per acceptance criterion."""
    results = {}
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            m = re.search(r"test_criterion_(\d+)", getattr(rep, "nodeid", ""))
            if m and getattr(rep, "when", "call") in ("call", "setup"):
                n = int(m.group(1))
                results[n] = results.get(n, True) and outcome == "passed"
    if results:
        terminalreporter.write_sep("-", "acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(
                f"criterion {n}: {'PASS' if results[n] else 'FAIL'}"
            )
