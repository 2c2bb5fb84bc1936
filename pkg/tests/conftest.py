import pytest

_ACCEPTANCE: list[str] = []


class Acceptance:
    """Records one PASS/FAIL line per criterion and fails the test on FAIL."""

    def __call__(self, number: int, ok: bool, detail: str) -> None:
        line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
        _ACCEPTANCE.append(line)
        print(line)
        assert ok, line


@pytest.fixture
def acceptance():
    return Acceptance()


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
