import sys
from pathlib import Path

import pytest

HERE = Path(__file__).resolve().parent
ROOT = HERE.parent
CORPUS = ROOT / "corpus"

if str(HERE) not in sys.path:
    sys.path.insert(0, str(HERE))

from acceptance_report import LINES as ACCEPTANCE_LINES  # noqa: E402


@pytest.fixture
def corpus_dir():
    return CORPUS


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES, key=lambda s: (int(s.rstrip("abcdef")), s)):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
