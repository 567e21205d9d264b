import pytest

from lcprof.field import make_field
from lcprof.sequence import parse_sequence

EXAMPLE_TEXT = "0,2,0,2,1,1,0,1,0,1,2,0,1,1,1,0,1,0,2,2,0,2,1,1,0,1,0"

# criterion number -> list of (label, passed, detail)
_CRITERIA: dict[int, list] = {}


@pytest.fixture(scope="session")
def gf2():
    return make_field(2)


@pytest.fixture(scope="session")
def gf3():
    return make_field(3)


@pytest.fixture(scope="session")
def gf4():
    return make_field(2, 2, [1, 1, 1])


@pytest.fixture(scope="session")
def example(gf3):
    return parse_sequence(EXAMPLE_TEXT, gf3, 3)


@pytest.fixture
def record_criterion():
    def record(number: int, label: str, passed: bool, detail: str = ""):
        _CRITERIA.setdefault(number, []).append((label, passed, detail))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        entries = _CRITERIA[number]
        failed = [e for e in entries if not e[1]]
        status = "PASS" if not failed else "FAIL"
        if failed:
            detail = "; ".join(f"{label}: {d}" for label, _, d in failed)
        else:
            detail = ", ".join(label for label, _, _ in entries)
        terminalreporter.write_line(f"criterion {number}: {status} ({detail})")
