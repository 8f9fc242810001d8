"""Shared test plumbing: acceptance-criterion bookkeeping.

Criterion tests register a single pass/fail verdict each; the terminal
summary hook prints one line per criterion after the run, outside pytest's
output capture, so the verdict list is always visible.
"""

CRITERIA: dict = {}


def record_criterion(number: int, label: str, ok: bool) -> None:
    CRITERIA[number] = (label, bool(ok))


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for number in sorted(CRITERIA):
        label, ok = CRITERIA[number]
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d}  {verdict}  {label}")
