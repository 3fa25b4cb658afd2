from __future__ import annotations

from pathlib import Path

import pytest

from colored_circle.trees import DirectedLabeledTree, parse_tree

DATA = Path(__file__).parent / "data"


@pytest.fixture
def sample_tree() -> DirectedLabeledTree:
    return parse_tree((DATA / "sample.tree").read_text())


@pytest.fixture
def sample_path() -> Path:
    return DATA / "sample.tree"


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for key in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[key])
