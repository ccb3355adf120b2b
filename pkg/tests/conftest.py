"""
Shared fixtures for the FoLP reasoner tests.
"""

from pathlib import Path

import pytest

from folp_reasoner.textio import parse_dl_file, parse_program_file

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def corpus_path(name: str) -> str:
    return str(CORPUS / name)


@pytest.fixture
def corpus():
    return CORPUS


@pytest.fixture
def happy():
    return parse_program_file(corpus_path("happy.folp"))


@pytest.fixture
def example1():
    return parse_program_file(corpus_path("example1.folp"))


@pytest.fixture
def example6():
    return parse_program_file(corpus_path("example6.folp"))


@pytest.fixture
def father_kb():
    return parse_dl_file(corpus_path("father.dl"))


@pytest.fixture
def father_rules():
    return parse_program_file(corpus_path("father-rules.folp"))


@pytest.fixture
def load():
    """Parse a corpus program by file name."""

    def _load(name: str):
        return parse_program_file(corpus_path(name))

    return _load
