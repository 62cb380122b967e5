import itertools
import random

import pytest

from swarm_wilson.errors import Disconnected, DuplicateEdge, NotAdjacent, SelfLoop, VertexOutOfRange
from swarm_wilson.graph import (
    Graph,
    articulation_points,
    biconnected_components,
    block_internal_edges,
    block_tree,
    direction_component,
    edge_blocks,
    find_bridges,
    spanning_tree,
    tree_leaves,
    tree_path,
)
from swarm_wilson.verify import atlas_graphs
from swarm_wilson.wgformat import FIXTURE_NAMES, load_fixture, load_graph


def test_parse_p3():
    g = load_graph("graph P3\nvertices 3\nedge 1 2\nedge 2 3\nend\n")
    assert g.vertex_count == 3
    assert len(g.edges) == 2


def test_bowtie_fixture():
    g = load_fixture("BOWTIE")
    assert (g.vertex_count, len(g.edges)) == (5, 6)


def test_self_loop_rejected():
    with pytest.raises(SelfLoop):
        load_graph("vertices 3\nedge 1 1\nedge 1 2\nedge 2 3\n")
    with pytest.raises(SelfLoop):
        Graph.from_edges(2, [(1, 2), (2, 2)])


def test_construction_errors():
    with pytest.raises(DuplicateEdge):
        Graph.from_edges(3, [(1, 2), (2, 1), (2, 3)])
    with pytest.raises(VertexOutOfRange):
        Graph.from_edges(3, [(1, 2), (2, 4)])
    with pytest.raises(Disconnected):
        Graph.from_edges(4, [(1, 2), (3, 4)])


def test_bridges():
    assert find_bridges(load_fixture("C5")) == set()
    assert find_bridges(load_fixture("P5")) == {(1, 2), (2, 3), (3, 4), (4, 5)}
    assert find_bridges(load_fixture("PENDANT4")) == {(3, 4)}


def test_edge_blocks():
    p = edge_blocks(load_fixture("BOWTIE"))
    assert p.blocks == (frozenset({1, 2, 3, 4, 5}),)
    p = edge_blocks(load_fixture("P3"))
    assert p.blocks == (frozenset({1}), frozenset({2}), frozenset({3}))
    assert p.bridges == {(1, 2), (2, 3)}
    p = edge_blocks(load_fixture("PENDANT4"))
    assert p.blocks == (frozenset({1, 2, 3}), frozenset({4}))
    assert p.bridges == {(3, 4)}


def test_block_tree():
    t = block_tree(load_fixture("PENDANT4"))
    assert len(t.nodes) == 2
    assert t.edges == ((0, 1, (3, 4)),)
    t = block_tree(load_fixture("C5"))
    assert len(t.nodes) == 1 and t.edges == ()
    t = block_tree(load_fixture("P5"))
    assert len(t.nodes) == 5
    assert [(a, b) for a, b, _ in t.edges] == [(0, 1), (1, 2), (2, 3), (3, 4)]


def test_biconnected_components():
    g = load_fixture("BOWTIE")
    assert biconnected_components(g, g.vertices) == [frozenset({1, 2, 3}), frozenset({3, 4, 5})]
    g = load_fixture("THETA5")
    assert biconnected_components(g, g.vertices) == [frozenset({1, 2, 3, 4, 5})]
    assert biconnected_components(load_fixture("P3"), {2}) == [frozenset({2})]
    assert articulation_points(load_fixture("BOWTIE")) == {3}


def test_direction_component():
    assert direction_component(load_fixture("P5"), 3, 4) == {4, 5}
    assert direction_component(load_fixture("C5"), 1, 2) == {2, 3, 4, 5}
    assert direction_component(load_fixture("SPIDER"), 1, 2) == {2, 3}
    with pytest.raises(NotAdjacent):
        direction_component(load_fixture("P5"), 1, 3)


def _brute_bridges(g):
    out = set()
    for e in g.edges:
        adj = {v: [w for w in g.neighbors(v) if (min(v, w), max(v, w)) != e] for v in g.vertices}
        seen, stack = {1}, [1]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) < g.vertex_count:
            out.add(e)
    return out


def _random_connected(rng, n):
    edges = {(rng.randint(1, v - 1), v) for v in range(2, n + 1)}
    for u, v in itertools.combinations(range(1, n + 1), 2):
        if rng.random() < 0.2:
            edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


def _all_test_graphs():
    yield from atlas_graphs(7)
    rng = random.Random(11)
    for _ in range(300):
        yield _random_connected(rng, 8)
    for name in FIXTURE_NAMES:
        yield load_fixture(name)


def test_bridges_match_definition():
    for g in _all_test_graphs():
        assert find_bridges(g) == _brute_bridges(g), sorted(g.edges)


def test_block_edge_accounting_and_tree_shape():
    for g in _all_test_graphs():
        p = edge_blocks(g)
        internal = sum(len(block_internal_edges(g, b)) for b in p.blocks)
        assert len(p.bridges) + internal == len(g.edges)
        t = block_tree(g, p)
        assert len(t.nodes) == len(p.blocks)
        assert len(t.edges) == len(p.bridges) == len(t.nodes) - 1
        seen, stack = {0}, [0]
        while stack:
            for w in t.neighbors(stack.pop()):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        assert len(seen) == len(t.nodes)


def test_non_cut_pivot_sees_everything():
    for g in atlas_graphs(6):
        cuts = articulation_points(g)
        for v in g.vertices:
            if v in cuts:
                continue
            for u in g.neighbors(v):
                assert direction_component(g, v, u) == frozenset(g.vertices) - {v}


def test_spanning_tree_helpers():
    g = load_fixture("SPIDER")
    tree = spanning_tree(g, {1, 2, 3, 4})
    assert set(tree) == {1, 2, 3, 4}
    assert sorted(tree_leaves(tree)) == [3, 4]
    assert tree_path(tree, 3, 4) == [3, 2, 1, 4]
