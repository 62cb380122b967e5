import itertools
import random

import pytest

from conftest import connected_supports, robots, saturated
from swarm_wilson.config import make_config
from swarm_wilson.errors import BadSupport, NotInGroup
from swarm_wilson.moves import ElementaryMove, apply_sequence
from swarm_wilson.oracle import oracle_label_group
from swarm_wilson.perm import VertexPermutation
from swarm_wilson.planner import realize, relocate
from swarm_wilson.verify import atlas_graphs
from swarm_wilson.wgformat import load_fixture

path, cycle = ElementaryMove.path, ElementaryMove.cycle


def test_p5_slide():
    plan = relocate(robots("P5", {1, 2, 3}), {3, 4, 5})
    assert list(plan.moves) == [path(4, 3, 2, 1), path(5, 4, 3, 2)]


def test_same_support_is_empty():
    c = robots("SPIDER", {1, 2, 3})
    assert relocate(c, {1, 2, 3}).moves == ()


def test_spider_relocation_replays():
    plan = relocate(robots("SPIDER", {1, 2, 3}), {1, 4, 5})
    final, _ = apply_sequence(plan)
    assert final.support == {1, 4, 5}


def test_bad_targets():
    c = robots("P5", {1, 2, 3})
    with pytest.raises(BadSupport):
        relocate(c, {1, 2})
    with pytest.raises(BadSupport):
        relocate(c, {1, 2, 4})
    with pytest.raises(BadSupport):
        relocate(c, {4, 5, 6})


def test_realize_examples():
    c5 = saturated("C5")
    plan = realize(c5, VertexPermutation.cycle(1, 2, 3, 4, 5))
    assert len(plan) == 1 and plan.moves[0].kind.value == "cycle"
    with pytest.raises(NotInGroup):
        realize(robots("P5", {1, 2, 3}), VertexPermutation.cycle(1, 2))
    star = robots("STAR4", {1, 2})
    plan = realize(star, VertexPermutation.cycle(1, 2))
    assert list(plan.moves) == [path(3, 1, 2), path(4, 1, 3), path(2, 1, 4)]
    final, _ = apply_sequence(plan)
    assert final.mapping == {1: 2, 2: 1}


def test_realize_agrees_with_oracle():
    c = robots("PENDANT4", {1, 2, 3})
    group = oracle_label_group(c)
    for image in itertools.permutations((1, 2, 3)):
        pi = VertexPermutation.from_mapping(dict(zip((1, 2, 3), image)))
        if pi in group:
            final, _ = apply_sequence(realize(c, pi))
            assert all(final.label(v) == c.label(pi(v)) for v in c.support)
        else:
            with pytest.raises(NotInGroup):
                realize(c, pi)
    c = robots("P5", {2, 3, 4})
    for pi in (VertexPermutation.cycle(2, 3), VertexPermutation.cycle(2, 4, 3)):
        with pytest.raises(NotInGroup):
            realize(c, pi)


def test_relocate_total_small_graphs():
    for g in atlas_graphs(5):
        for k in range(1, g.vertex_count + 1):
            supports = connected_supports(g, k)
            for a, b in itertools.product(supports, repeat=2):
                plan = relocate(robots(g, a), b)
                final, _ = apply_sequence(plan)
                assert final.support == b
                assert len(plan) <= k * g.vertex_count


def test_relocate_with_scrambled_labels():
    rng = random.Random(9)
    g = load_fixture("G12")
    for _ in range(60):
        k = rng.randint(1, 11)
        a, b = rng.choice(connected_supports(g, k)), rng.choice(connected_supports(g, k))
        f0 = make_config(g, list(zip(sorted(a), rng.sample(range(1, k + 1), k))))
        final, _ = apply_sequence(relocate(f0, b))
        assert final.support == b
