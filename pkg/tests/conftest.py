import pytest

_ACCEPTANCE = []


@pytest.fixture
def record():
    """Log one acceptance line; the lines are echoed at the end of the run."""
    def _record(tag, passed, detail):
        line = f"{tag:<5} {'PASS' if passed else 'FAIL'}  {detail}"
        _ACCEPTANCE.append(line)
        print(line)
        return passed
    return _record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
