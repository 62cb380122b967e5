import random

import pytest

from conftest import cfg, connected_supports, cycle_graph, robots, saturated
from swarm_wilson.config import make_config
from swarm_wilson.errors import GraphMismatch, LabelCountMismatch, NotSaturated, Saturated
from swarm_wilson.moves import apply_sequence
from swarm_wilson.oracle import explore, label_group_from_space, oracle_label_group
from swarm_wilson.perm import Factor, Kind, VertexPermutation, compose, contains, order, orbits
from swarm_wilson.planner import relocate
from swarm_wilson.verify import atlas_graphs
from swarm_wilson.wgformat import load_fixture
from swarm_wilson.wilson import (
    analyze_nonsaturated,
    analyze_saturated,
    compute_c_sets,
    decide_reachable,
    exchange_analysis,
    merge_c_sets,
    weakness,
    wilson_group,
)


def _sat(name):
    g = load_fixture(name)
    return analyze_saturated(g, saturated(g))


def test_saturated_classification():
    d = _sat("C5")
    assert d.factors == (Factor(Kind.CYCLIC, (1, 2, 3, 4, 5)),) and order(d) == 5
    d = _sat("P5")
    assert d.factors == () and d.fixed == {1, 2, 3, 4, 5} and order(d) == 1
    assert str(_sat("BOWTIE")) == "Alt{1,2,3,4,5}" and order(_sat("BOWTIE")) == 60
    assert str(_sat("TRI_SQ")) == "Sym{1,2,3,4,5,6}" and order(_sat("TRI_SQ")) == 720
    assert str(_sat("THETA5")) == "Sym{1,2,3,4,5}" and order(_sat("THETA5")) == 120
    d = _sat("PENDANT4")
    assert d.factors == (Factor(Kind.CYCLIC, (1, 2, 3)),) and d.fixed == {4} and order(d) == 3


def test_saturation_guards():
    g = load_fixture("P5")
    with pytest.raises(NotSaturated):
        analyze_saturated(g, robots(g, {1, 2}))
    with pytest.raises(Saturated):
        analyze_nonsaturated(g, saturated(g))


def test_weakness():
    for name, expected in (("BOWTIE", (True, True)), ("TRI_SQ", (True, False))):
        g = load_fixture(name)
        assert weakness(g, frozenset(g.vertices)) == expected
    g = load_fixture("THETA5")
    assert weakness(g, frozenset(g.vertices))[0] is False


def test_nonsaturated_examples():
    d = analyze_nonsaturated(load_fixture("P5"), robots("P5", {1, 2, 3}))
    assert order(d) == 2 and d.label_order() == 1
    d = wilson_group(load_fixture("STAR4"), robots("STAR4", {1, 2}))
    assert str(d) == "Sym{1,2} * Sym{∅:3,4}" and d.label_order() == 2
    d = wilson_group(load_fixture("SPIDER"), robots("SPIDER", {1, 2, 3}))
    assert str(d) == "Sym{1,2,3} * Sym{∅:4,5,6,7}" and d.label_order() == 6
    d = wilson_group(load_fixture("THETA5_PENDANT"), robots("THETA5_PENDANT", {1, 2, 3, 4, 5}))
    assert str(d) == "Sym{1,2,3,4,5} * Sym{∅:6}"


def test_c_sets():
    g = load_fixture("SPIDER")
    assert compute_c_sets(g, robots(g, {1, 2, 3})) == [(0, frozenset({1, 2, 3}))]
    g = load_fixture("P5")
    assert compute_c_sets(g, robots(g, {1, 2, 3})) == []
    assert exchange_analysis(g, robots(g, {1, 2, 3})) is None
    g = load_fixture("PENDANT4")
    assert compute_c_sets(g, robots(g, {1, 2, 3})) == [(0, frozenset({1, 2, 3}))]
    assert str(wilson_group(g, robots(g, {1, 2, 3}))) == "Sym{1,2,3} * Sym{∅:4}"


def test_merge():
    m = merge_c_sets([("a", {1, 2}), ("b", {2, 3})])
    assert [s for _, s in m.merged] == [{1, 2, 3}]
    m = merge_c_sets([("a", {1, 2}), ("b", {3, 4})])
    assert [s for _, s in m.merged] == [{1, 2}, {3, 4}]
    assert merge_c_sets([]).merged == ()


def test_orbits():
    assert orbits(_sat("PENDANT4")) == [{1, 2, 3}, {4}]
    assert orbits(_sat("C5")) == [{1, 2, 3, 4, 5}]
    d = wilson_group(load_fixture("P5"), robots("P5", {1, 2, 3}))
    assert orbits(d) == [{1}, {2}, {3}, {4, 5}]


def test_cycle_with_one_gap_rotates_the_arc():
    # a lone robot-free vertex on a cycle lets the arc shuffle round it
    g = cycle_graph(6)
    c = robots(g, {1, 2, 3, 4, 6})
    d = wilson_group(g, c)
    assert str(d) == "Cyclic[1>2>3>4>6] * Sym{∅:5}"
    assert d.label_order() == len(oracle_label_group(c)) == 5


def test_decide_examples():
    p5 = robots("P5", {1, 2, 3})
    ok, pi = decide_reachable(p5, cfg("P5", {3: 1, 4: 2, 5: 3}))
    assert ok and pi.is_identity()
    assert decide_reachable(p5, cfg("P5", {1: 2, 2: 1, 3: 3})) == (False, None)
    ok, _ = decide_reachable(cfg("FIG3_H", {2: 1, 4: 2, 5: 3}), cfg("FIG3_H", {3: 3, 4: 1, 6: 2}))
    assert ok
    with pytest.raises(GraphMismatch):
        decide_reachable(p5, robots("C5", {1, 2, 3}))
    with pytest.raises(LabelCountMismatch):
        decide_reachable(p5, robots("P5", {1, 2}))


def test_decide_self_is_identity():
    for name in ("SPIDER", "G12", "BOWTIE"):
        g = load_fixture(name)
        c = robots(g, list(g.vertices)[:4])
        assert decide_reachable(c, c) == (True, VertexPermutation(()))


def _every_config(max_n):
    for g in atlas_graphs(max_n):
        for k in range(1, g.vertex_count + 1):
            for s in connected_supports(g, k):
                yield robots(g, s)


def test_analyzer_matches_oracle_small_graphs():
    for c in _every_config(5):
        d = wilson_group(c.graph, c)
        group = oracle_label_group(c)
        assert d.label_order() == len(group), (sorted(c.graph.edges), sorted(c.support))
        assert all(contains(d, p) for p in group)


def test_orbits_are_preserved_by_oracle_movements():
    for c in _every_config(5):
        parts = orbits(wilson_group(c.graph, c))
        for p in oracle_label_group(c):
            for part in parts:
                assert {p(v) for v in part if v in c.support} <= part


def test_conjugation_closure():
    rng = random.Random(20)
    graphs = [g for g in atlas_graphs(6) if g.vertex_count >= 5]
    checked = 0
    while checked < 150:
        g = rng.choice(graphs)
        k = rng.randint(2, g.vertex_count - 1)
        supports = connected_supports(g, k)
        f0 = robots(g, rng.choice(supports))
        target = rng.choice(supports)
        f1, sigma = apply_sequence(relocate(f0, target))
        d0 = wilson_group(g, f0)
        d1 = wilson_group(g, f1)
        for phi in label_group_from_space(explore(f1)):
            assert contains(d1, phi)
            moved = compose(compose(sigma, phi), sigma.inverse())
            assert contains(d0, moved)
        checked += 1


def test_random_relabelings_agree():
    rng = random.Random(4)
    g = load_fixture("SPIDER")
    for _ in range(20):
        s = sorted(rng.choice(connected_supports(g, 4)))
        c = make_config(g, list(zip(s, rng.sample(range(1, 5), 4))))
        assert wilson_group(g, c).label_order() == len(oracle_label_group(c))
