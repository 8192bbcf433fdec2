import pytest

# criterion number -> (title, passed, seconds, note); filled by test_acceptance.py
ACCEPTANCE: dict = {}


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE, key=lambda c: (int(c.rstrip("ab")), c)):
        title, passed, seconds, note = ACCEPTANCE[n]
        line = f"criterion {n:>3} {'PASS' if passed else 'FAIL'} {seconds:7.1f}s  {title}"
        terminalreporter.write_line(line + (f"  [{note}]" if note else ""))
