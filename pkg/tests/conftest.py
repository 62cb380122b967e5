import itertools

import pytest

from swarm_wilson.config import make_config
from swarm_wilson.graph import Graph
from swarm_wilson.wgformat import load_fixture


def cfg(g, pairs):
    """Configuration from a graph (or fixture name) and a {vertex: label} dict."""
    if isinstance(g, str):
        g = load_fixture(g)
    return make_config(g, sorted(pairs.items()))


def robots(g, vertices):
    """Label ``vertices`` 1, 2, ... in increasing vertex order."""
    return cfg(g, {v: i for i, v in enumerate(sorted(vertices), start=1)})


def saturated(g):
    if isinstance(g, str):
        g = load_fixture(g)
    return robots(g, g.vertices)


def connected_supports(g, k):
    return [frozenset(s) for s in itertools.combinations(g.vertices, k) if g.is_connected_subset(s)]


def cycle_graph(n):
    return Graph.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)], f"C{n}")


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)], f"P{n}")


# the configuration f_t drawn for the 12-vertex example graph
G12_FT = {1: 1, 2: 2, 7: 3, 8: 4, 11: 5}


@pytest.fixture
def g12_ft():
    return cfg("G12", G12_FT)
