"""Symbolic Wilson group of a configuration and the reachability decision built on it.

Saturated configurations split into one factor per edge-block: trivial for a
singleton, cyclic for a bare cycle, alternating for a weak block whose cycles
are all odd, symmetric otherwise. Non-saturated configurations give a product
of symmetric groups on the exchange sets, times the symmetric group on the
empty vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import Configuration, empties_in_direction, is_saturated
from .errors import GraphMismatch, LabelCountMismatch, NotSaturated, Saturated
from .graph import (
    Graph,
    biconnected_components,
    block_internal_edges,
    edge_blocks,
    norm_edge,
)
from .moves import apply_sequence
from .perm import (
    Factor,
    GroupDescriptor,
    Kind,
    VertexPermutation,
    contains,
    orbits,  # noqa: F401  (re-exported)
)


# ------------------------------------------------------------- saturated

def weakness(g: Graph, block) -> tuple[bool, bool]:
    """``(is_weak, all_odd)`` for a non-singleton edge-block: weak means every
    biconnected piece of the block is a simple cycle."""
    is_weak = True
    all_odd = True
    for comp in biconnected_components(g, block):
        m = len(block_internal_edges(g, comp))
        if len(comp) < 3 or m != len(comp):
            is_weak = False
            break
        if len(comp) % 2 == 0:
            all_odd = False
    return is_weak, is_weak and all_odd


def _is_cycle_block(g: Graph, block) -> bool:
    return len(block) >= 3 and len(block_internal_edges(g, block)) == len(block) and \
        all(sum(1 for w in g.neighbors(v) if w in block) == 2 for v in block)


def _rotation(g: Graph, block) -> tuple:
    block = set(block)
    start = min(block)
    order = [start]
    prev, cur = start, min(w for w in g.neighbors(start) if w in block)
    while cur != start:
        order.append(cur)
        prev, cur = cur, next(w for w in g.neighbors(cur) if w in block and w != prev)
    return tuple(order)


def _canonical_rotation(order) -> tuple:
    """Start a cyclic order at its minimum vertex, keeping its direction."""
    i = order.index(min(order))
    return tuple(order[i:]) + tuple(order[:i])


def analyze_saturated(g: Graph, c: Configuration) -> GroupDescriptor:
    if not is_saturated(c):
        raise NotSaturated(f"{c.k} labels on {g.vertex_count} vertices")
    p = edge_blocks(g)
    factors = []
    fixed = set()
    for block in p.blocks:
        if len(block) == 1:
            fixed |= block
        elif _is_cycle_block(g, block):
            factors.append(Factor(Kind.CYCLIC, _rotation(g, block)))
        else:
            _, all_odd = weakness(g, block)
            kind = Kind.ALTERNATING if all_odd else Kind.SYMMETRIC
            factors.append(Factor(kind, tuple(sorted(block))))
    return GroupDescriptor.build(factors, fixed, ())


# --------------------------------------------------------- non-saturated

@dataclass(frozen=True)
class ExchangeAnalysis:
    centers: tuple  # (block index, C-set) per contributing class
    merged: tuple   # (merged id, union of overlapping C-sets)


def _bridge_walk(g: Graph, bridges, occupied, start: int, came_from: int):
    """Yield ``(x, hops)`` for vertices reachable from ``came_from`` through
    ``start`` along bridges only. ``hops`` counts the occupied vertices on the
    way from ``start`` to ``x`` inclusive: empty vertices in front of the swarm
    can be closed up by sliding it forward, so they do not add distance."""
    stack = [(start, came_from, int(start in occupied))]
    while stack:
        v, prev, d = stack.pop()
        yield v, d
        for w in g.neighbors(v):
            if w != prev and norm_edge(v, w) in bridges:
                stack.append((w, v, d + (w in occupied)))


def compute_c_sets(g: Graph, c: Configuration) -> list[tuple[int, frozenset]]:
    """Exchange set of every edge-block class.

    A cyclic block starts from its own occupied vertices and absorbs an occupied
    vertex ``r`` steps behind a bridge ``v1 v2`` when at least ``r`` empty
    vertices lie on the block side of ``v2``. A singleton class ``{v}`` of degree
    at least 3 absorbs an occupied vertex ``d`` steps behind a neighbour ``u``
    when at least ``d + 1`` empties lie on the far side of ``u``, and absorbs
    ``v`` itself when two of its branches hold an empty vertex. Steps are
    counted over occupied vertices only (see :func:`_bridge_walk`).
    """
    p = edge_blocks(g)
    bridges = p.bridges
    occupied = c.support
    out = []
    for index, block in enumerate(p.blocks):
        cset: set[int] = set()
        if len(block) > 1:
            cset |= block & occupied
            for v1 in sorted(block):
                for v2 in g.neighbors(v1):
                    if norm_edge(v1, v2) not in bridges:
                        continue
                    _, room = empties_in_direction(c, v2, v1)
                    for x, r in _bridge_walk(g, bridges, occupied, v2, v1):
                        if x in occupied and r <= room:
                            cset.add(x)
        else:
            (v,) = block
            if g.degree(v) < 3:
                continue
            branches_with_room = 0
            for u in g.neighbors(v):
                _, room = empties_in_direction(c, u, v)
                for x, d in _bridge_walk(g, bridges, occupied, u, v):
                    if x in occupied and room >= d + 1:
                        cset.add(x)
                if empties_in_direction(c, v, u)[1] > 0:
                    branches_with_room += 1
            if v in occupied and branches_with_room >= 2:
                cset.add(v)
        if len(cset) > 1:
            out.append((index, frozenset(cset)))
    return out


def merge_c_sets(sets) -> ExchangeAnalysis:
    """Union overlapping C-sets (transitive closure); merged sets are disjoint."""
    groups: list[set] = []
    for _, s in sets:
        s = set(s)
        hits = [grp for grp in groups if grp & s]
        for grp in hits:
            s |= grp
            groups.remove(grp)
        groups.append(s)
    merged = sorted((frozenset(grp) for grp in groups), key=min)
    return ExchangeAnalysis(tuple(sets), tuple(enumerate(merged)))


def analyze_nonsaturated(g: Graph, c: Configuration) -> GroupDescriptor:
    return _analyze_nonsaturated(g, c)[0]


def _analyze_nonsaturated(g: Graph, c: Configuration):
    if is_saturated(c):
        raise Saturated("configuration has no empty vertex")
    occupied = c.support
    empty = c.empties
    if g.is_cycle() and len(empty) == 1:
        # one gap: stepping robots into it one by one walks it round the cycle,
        # which rotates the labels one place along the arc
        (gap,) = empty
        arc = _rotation(g, g.vertices)
        i = arc.index(gap)
        arc = arc[i + 1:] + arc[:i]
        kind = Kind.CYCLIC if len(arc) >= 3 else Kind.SYMMETRIC
        return GroupDescriptor.build([Factor(kind, _canonical_rotation(arc))], (), empty), None
    if g.is_cycle() or g.is_path():
        return GroupDescriptor.build((), occupied, empty), None
    if len(edge_blocks(g).blocks) == 1:
        return GroupDescriptor.build([Factor(Kind.SYMMETRIC, tuple(sorted(occupied)))], (), empty), None
    analysis = merge_c_sets(compute_c_sets(g, c))
    factors = [Factor(Kind.SYMMETRIC, tuple(sorted(s))) for _, s in analysis.merged]
    covered = set().union(*(s for _, s in analysis.merged)) if analysis.merged else set()
    return GroupDescriptor.build(factors, occupied - covered, empty), analysis


def wilson_group(g: Graph, c: Configuration) -> GroupDescriptor:
    if is_saturated(c):
        return analyze_saturated(g, c)
    return analyze_nonsaturated(g, c)


def exchange_analysis(g: Graph, c: Configuration) -> ExchangeAnalysis | None:
    """The C-set computation behind a non-saturated descriptor (``None`` when a
    special case short-circuits it or the configuration is saturated)."""
    if is_saturated(c):
        return None
    return _analyze_nonsaturated(g, c)[1]


# ---------------------------------------------------------- reachability

def decide_reachable(f0: Configuration, target: Configuration):
    """Whether ``target`` is reachable from ``f0``; returns ``(answer, witness)``.

    ``f0`` is first slid onto the target support; the residual permutation
    ``pi`` with ``target = f1 o pi`` must lie in the Wilson group at the target.
    The witness is ``pi`` when reachable, else ``None``.
    """
    from .planner import relocate

    if f0.graph != target.graph:
        raise GraphMismatch("configurations live on different graphs")
    if f0.k != target.k:
        raise LabelCountMismatch(f"label counts differ: {f0.k} vs {target.k}")
    f1, _ = apply_sequence(relocate(f0, target.support))
    where = {lab: v for v, lab in f1.labels}
    pi = VertexPermutation.from_mapping({v: where[lab] for v, lab in target.labels})
    group = wilson_group(target.graph, target)
    if contains(group, pi):
        return True, pi
    return False, None
