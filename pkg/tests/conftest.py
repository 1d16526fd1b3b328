import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from zdiam.corpus import load_default_corpus  # noqa: E402

_ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def corpus():
    return load_default_corpus()


@pytest.fixture
def record_acceptance():
    def record(criterion: str, ok: bool, detail: str = "") -> None:
        _ACCEPTANCE[criterion] = (ok, detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_ACCEPTANCE, key=lambda k: int(k.split()[0])):
        ok, detail = _ACCEPTANCE[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key}  {detail}")
