import pytest
from hypothesis import settings

# fixed example generation so repeated runs see the same inputs
settings.register_profile("repro", derandomize=True)
settings.load_profile("repro")

_CRITERIA: list[str] = []


@pytest.fixture
def criterion():
    """Record one acceptance criterion as a PASS/FAIL line, then assert it."""

    def report(number: int, title: str, results: dict[str, bool]) -> None:
        failed = [name for name, ok in results.items() if not ok]
        status = "FAIL" if failed else "PASS"
        line = f"criterion {number} {status}: {title}"
        if failed:
            line += f" (failed: {', '.join(failed)})"
        _CRITERIA.append(line)
        print(line)
        assert not failed, line

    return report


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_CRITERIA):
            terminalreporter.write_line(line)
