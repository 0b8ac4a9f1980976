import pytest

from steinberg import PrimePower

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def record():
    def _record(n: int, passed: bool, detail: str):
        ACCEPTANCE[n] = (passed, detail)

    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        passed, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if passed else 'FAIL'}  {detail}")


@pytest.fixture(params=[2, 3, 4, 5, 7, 8, 9, 11, 13, 25], ids=lambda q: f"q{q}")
def pp(request):
    return PrimePower.from_q(request.param)
