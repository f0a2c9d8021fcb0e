import pytest

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance(request):
    """Call with (passed, detail) to record one criterion's pass/fail line."""
    label = request.node.get_closest_marker("criterion").args[0]

    def record(passed: bool, detail: str = ""):
        line = f"criterion {label}: {'PASS' if passed else 'FAIL'}" + (f"  ({detail})" if detail else "")
        _ACCEPTANCE_LINES.append(line)
        print(line)
        assert passed, line

    return record


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
