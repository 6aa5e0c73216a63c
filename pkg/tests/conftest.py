import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from minorbounds.corpus import Filter, enumerate_graphs


def _flag(name: str) -> bool:
    return os.environ.get(name, "") not in ("", "0")


RUN_N9 = _flag("MINORBOUNDS_N9")
RUN_LINKLESS_N8 = _flag("MINORBOUNDS_LINKLESS_N8")


@pytest.fixture(scope="session")
def graphs_by_n():
    """All isomorphism classes for n = 1..7, keyed by n."""
    return {n: list(enumerate_graphs(n)) for n in range(1, 8)}


@pytest.fixture(scope="session")
def graphs_n8():
    return list(enumerate_graphs(8))


@pytest.fixture(scope="session")
def trifree_by_n():
    """Triangle-free classes for n = 1..9."""
    tf = Filter("triangle-free")
    return {n: list(enumerate_graphs(n, [tf])) for n in range(1, 10)}
