"""Constructive relocation of a swarm onto another connected support, and
realisation of label permutations as explicit move sequences."""

from __future__ import annotations

from .config import Configuration
from .errors import BadSupport, NotInGroup
from .graph import bfs_distances, spanning_tree, tree_leaves, tree_path
from .moves import ElementaryMove, MoveKind, MoveSequence, _apply_unchecked, act
from .oracle import shortest_plan
from .perm import VertexPermutation


def relocate(f0: Configuration, target_support) -> MoveSequence:
    """Slide the swarm of ``f0`` onto ``target_support`` (labels end wherever they end).

    Two phases. While the supports are disjoint, a shortest path between them is
    walked one vertex at a time, each step dropping a leaf of a spanning tree of
    the current support. Once they meet, the largest common component is grown
    by one vertex per step until the supports coincide.
    """
    g = f0.graph
    target = frozenset(target_support)
    if len(target) != f0.k:
        raise BadSupport(f"target support has {len(target)} vertices, swarm has {f0.k}")
    if not all(1 <= v <= g.vertex_count for v in target):
        raise BadSupport("target support has vertices outside the graph")
    if not g.is_connected_subset(target):
        raise BadSupport(f"target support {sorted(target)} is not connected")

    moves: list[ElementaryMove] = []
    c = f0
    bound = f0.k * g.vertex_count

    while not (c.support & target):
        move = _geodesic_step(c, target)
        moves.append(move)
        c = _apply_unchecked(c, move)
    while c.support != target:
        move = _overlap_step(c, target)
        moves.append(move)
        c = _apply_unchecked(c, move)
    assert len(moves) <= max(bound, 1)
    return MoveSequence(f0, tuple(moves))


def _geodesic_step(c: Configuration, target: frozenset) -> ElementaryMove:
    g = c.graph
    support = c.support
    dist = bfs_distances(g, target)
    # endpoint in the current support closest to the target, smallest id on ties
    x0 = min(support, key=lambda v: (dist[v], v))
    x1 = min(w for w in g.neighbors(x0) if dist[w] == dist[x0] - 1)
    tree = spanning_tree(g, support)
    if len(support) == 1:
        return ElementaryMove((x1, x0), MoveKind.PATH)
    y = min(v for v in tree_leaves(tree) if v != x0)
    return ElementaryMove((x1,) + tuple(tree_path(tree, x0, y)), MoveKind.PATH)


def _overlap_step(c: Configuration, target: frozenset) -> ElementaryMove:
    g = c.graph
    support = c.support
    common = support & target
    core = _largest_component(g, common)
    tree_t = spanning_tree(g, support, core)
    tree_s = spanning_tree(g, target, core)
    y = min(v for v in tree_leaves(tree_t) if v not in core)
    # an edge of the target tree leaving the core; its outer end is empty
    x, y2 = min((v, p) for v, p in tree_s.items() if p is not None and p in core and v not in core)
    return ElementaryMove((x,) + tuple(tree_path(tree_t, y2, y)), MoveKind.PATH)


def _largest_component(g, vertices) -> frozenset:
    rest = set(vertices)
    best: frozenset = frozenset()
    while rest:
        start = min(rest)
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if w in rest and w not in comp:
                    comp.add(w)
                    stack.append(w)
        rest -= comp
        if len(comp) > len(best):
            best = frozenset(comp)
    return best


def realize(f0: Configuration, pi: VertexPermutation, max_states: int | None = None) -> MoveSequence:
    """A shortest valid sequence taking ``f0`` to ``f0 o pi``.

    Raises :class:`NotInGroup` when no such sequence exists.
    """
    if not pi.support <= f0.support:
        raise NotInGroup(f"{pi} moves vertices outside the occupied set")
    target = act(f0, pi)
    plan = shortest_plan(f0, target, max_states)
    if plan is None:
        raise NotInGroup(f"{pi} is not a valid movement of the occupied set")
    return plan
