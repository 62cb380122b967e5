"""Exhaustive breadth-first search over labelled configurations.

This is the ground truth the symbolic analyzer is checked against. States are
tuples indexed by vertex (slot 0 unused) holding the label or 0 for empty, so
empty vertices carry no identity.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

from .config import Configuration
from .errors import BudgetExceeded, GraphMismatch, LabelCountMismatch
from .graph import Graph
from .moves import ElementaryMove, MoveKind, MoveSequence, moves_for_support
from .perm import VertexPermutation

DEFAULT_MAX_STATES = 2_000_000


def default_max_states() -> int:
    raw = os.environ.get("SWARM_WILSON_MAX_STATES")
    return int(raw) if raw else DEFAULT_MAX_STATES


def encode(c: Configuration) -> tuple:
    state = [0] * (c.graph.vertex_count + 1)
    for v, lab in c.labels:
        state[v] = lab
    return tuple(state)


def decode(g: Graph, state: tuple) -> Configuration:
    return Configuration.trusted(g, {v: lab for v, lab in enumerate(state) if lab})


def _mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@lru_cache(maxsize=65536)
def _compiled_moves(g: Graph, mask: int) -> tuple:
    """(move, source-index tuple, successor mask) for every valid move at ``mask``."""
    support = frozenset(v for v in g.vertices if mask >> v & 1)
    out = []
    n = g.vertex_count
    for m in moves_for_support(g, support):
        src = list(range(n + 1))
        vs = m.vertices
        for i, v in enumerate(vs):
            src[v] = vs[(i + 1) % len(vs)]
        if m.kind is MoveKind.PATH:
            new_mask = (mask | 1 << vs[0]) & ~(1 << vs[-1])
        else:
            new_mask = mask
        out.append((m, tuple(src), new_mask))
    return tuple(out)


@dataclass
class StateSpace:
    """Everything reachable from ``source``; ``parents`` maps a state to the
    (previous state, move) that first reached it in BFS order."""

    source: Configuration
    parents: dict = field(repr=False)
    max_states: int = DEFAULT_MAX_STATES

    @property
    def graph(self) -> Graph:
        return self.source.graph

    @property
    def states(self):
        return self.parents.keys()

    def __len__(self):
        return len(self.parents)

    def __contains__(self, c: Configuration) -> bool:
        return encode(c) in self.parents

    def configurations(self) -> list[Configuration]:
        return [decode(self.graph, s) for s in sorted(self.parents)]

    def transitions(self, state: tuple) -> list[tuple[ElementaryMove, tuple]]:
        mask = _mask(v for v, lab in enumerate(state) if lab)
        return [(m, tuple(state[i] for i in src))
                for m, src, _ in _compiled_moves(self.graph, mask)]

    def path_to(self, state: tuple) -> list[ElementaryMove]:
        moves = []
        while True:
            prev = self.parents[state]
            if prev is None:
                break
            state, m = prev
            moves.append(m)
        moves.reverse()
        return moves


def _bfs(f0: Configuration, max_states: int, goal: tuple | None = None):
    g = f0.graph
    start = encode(f0)
    parents = {start: None}
    if goal == start:
        return parents, True
    queue = deque([(start, _mask(f0.support))])
    while queue:
        state, mask = queue.popleft()
        for m, src, new_mask in _compiled_moves(g, mask):
            nxt = tuple([state[i] for i in src])
            if nxt in parents:
                continue
            parents[nxt] = (state, m)
            if nxt == goal:
                return parents, True
            if len(parents) > max_states:
                raise BudgetExceeded(len(parents))
            queue.append((nxt, new_mask))
    return parents, False


def explore(f0: Configuration, max_states: int | None = None) -> StateSpace:
    if max_states is None:
        max_states = default_max_states()
    parents, _ = _bfs(f0, max_states)
    return StateSpace(f0, parents, max_states)


def label_group_from_space(space: StateSpace) -> set[VertexPermutation]:
    f0 = space.source
    where = {lab: v for v, lab in f0.labels}
    support = sorted(f0.support)
    out = set()
    for s in space.states:
        if all(s[v] for v in support):
            out.add(VertexPermutation.from_mapping({v: where[s[v]] for v in support}))
    return out


def label_groups_by_support(space: StateSpace) -> dict:
    """Label group at every support reached by ``space``, keyed by support.

    Each group is taken relative to the first state BFS found on that support;
    every connected support of the right size is reachable, so one exploration
    covers them all.
    """
    reference: dict = {}
    groups: dict = {}
    for s in space.states:  # dict order is BFS discovery order
        support = frozenset(v for v, lab in enumerate(s) if lab)
        ref = reference.get(support)
        if ref is None:
            ref = reference[support] = {lab: v for v, lab in enumerate(s) if lab}
            groups[support] = set()
        groups[support].add(VertexPermutation.from_mapping(
            {v: ref[lab] for v, lab in enumerate(s) if lab}))
    return groups


def oracle_label_group(f0: Configuration, max_states: int | None = None) -> set[VertexPermutation]:
    """Permutations ``pi`` of the occupied set with ``f0 o pi`` reachable from ``f0``."""
    return label_group_from_space(explore(f0, max_states))


def shortest_plan(f0: Configuration, target: Configuration,
                  max_states: int | None = None) -> MoveSequence | None:
    """A minimum-length valid sequence from ``f0`` to ``target``; ``None`` if unreachable."""
    if f0.graph != target.graph:
        raise GraphMismatch("configurations live on different graphs")
    if f0.k != target.k:
        raise LabelCountMismatch(f"label counts differ: {f0.k} vs {target.k}")
    if max_states is None:
        max_states = default_max_states()
    goal = encode(target)
    parents, found = _bfs(f0, max_states, goal)
    if not found:
        return None
    space = StateSpace(f0, parents, max_states)
    return MoveSequence(f0, tuple(space.path_to(goal)))
