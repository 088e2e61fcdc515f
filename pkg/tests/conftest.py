"""Shared fixtures: the worked example instances under ``instances/``."""

from pathlib import Path

import pytest

from rhstool.core.graph import Graph
from rhstool.core.instance import load_graph_instance, load_hypergraph_instance

INSTANCES = Path(__file__).resolve().parent.parent / 'instances'


@pytest.fixture
def instances_dir():
    """Directory holding the example instance files."""
    return INSTANCES


@pytest.fixture
def ex1():
    """Five edges over a, b, c, d; minimum rhs weight 4."""
    return load_hypergraph_instance(INSTANCES / 'ex1.hg').hypergraph


@pytest.fixture
def ex2_instance():
    """EX2 with its correspondence; index 5 has an empty preimage."""
    return load_hypergraph_instance(INSTANCES / 'ex2.hg')


@pytest.fixture
def ex2(ex2_instance):
    return ex2_instance.hypergraph


@pytest.fixture
def ex2_tau(ex2_instance):
    return ex2_instance.tau


@pytest.fixture
def tight3():
    return load_hypergraph_instance(INSTANCES / 'tight3.hg').hypergraph


@pytest.fixture
def p3_instance():
    """Path a - b - c with b assigned 2."""
    return load_graph_instance(INSTANCES / 'p3.gr')


@pytest.fixture
def split_instance():
    return load_graph_instance(INSTANCES / 'split.gr')


@pytest.fixture
def bounded_instance():
    return load_graph_instance(INSTANCES / 'bounded.gr')


@pytest.fixture
def triangle():
    return Graph.build(['a', 'b', 'c'], [('a', 'b'), ('a', 'c'), ('b', 'c')])


@pytest.fixture
def single_edge():
    return Graph.build(['u', 'v'], [('u', 'v')])


@pytest.fixture
def write_instance(tmp_path):
    """Write instance text to a temporary file and return its path."""

    def _write(text: str, name: str = 'instance.hg') -> Path:
        path = tmp_path / name
        path.write_text(text)
        return path

    return _write
