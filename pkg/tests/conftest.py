import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from engelkit import Permutation, default_corpus, from_label  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


def perm(text: str, degree: int) -> Permutation:
    return Permutation.parse(text, degree)


@pytest.fixture(scope="session")
def corpus():
    return default_corpus()


@pytest.fixture(scope="session")
def S3():
    return from_label("S3")


@pytest.fixture(scope="session")
def S4():
    return from_label("S4")


@pytest.fixture(scope="session")
def A4():
    return from_label("A4")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
