import pytest

_ACCEPTANCE = {}


@pytest.fixture
def verdict(request):
    """Record a PASS/FAIL line for an acceptance criterion, then assert it."""
    def record(number, ok, detail=""):
        _ACCEPTANCE[number] = (bool(ok), detail)
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'} {detail}".rstrip()
        print(line)
        assert ok, line
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        ok, detail = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'} {detail}".rstrip())
