"""
Shared fixtures: the four bundled tables over ``{x, y, z}`` plus helpers for building tables by label.
"""

import logging
from pathlib import Path

import pytest

import choice_tools
from choice_tools import ChoiceCorrespondence, Universe, load_fixture

# directory holding the bundled dataset files
FIXTURE_DIR = Path(choice_tools.__file__).parent / "fixtures"


@pytest.fixture(autouse=True)
def restore_root_logger():
    # the command line reconfigures the root logger, so put it back after every test
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


@pytest.fixture(scope="session")
def xyz():
    return Universe(("x", "y", "z"))


@pytest.fixture(scope="session")
def make_table(xyz):
    """Build a correspondence over ``{x, y, z}`` from ``{"xy": "x", ...}`` with every nonsingleton menu given."""

    def _make(rows: dict[str, str]) -> ChoiceCorrespondence:
        mapping = {xyz.menu(*menu): xyz.menu(*choice) for menu, choice in rows.items()}
        return ChoiceCorrespondence.from_mapping(xyz.n, mapping)

    return _make


@pytest.fixture(scope="session")
def lemma1():
    return load_fixture("lemma1").correspondence


@pytest.fixture(scope="session")
def example1():
    return load_fixture("example1").correspondence


@pytest.fixture(scope="session")
def example2():
    return load_fixture("example2").correspondence


@pytest.fixture(scope="session")
def example3():
    return load_fixture("example3").correspondence


@pytest.fixture(scope="session")
def fixture_dir():
    return FIXTURE_DIR
