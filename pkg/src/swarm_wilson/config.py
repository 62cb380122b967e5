"""Labelled connected configurations of robots on a graph."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import (
    DisconnectedSupport,
    DuplicateLabel,
    DuplicateVertex,
    GraphMismatch,
    LabelGap,
    VertexOutOfRange,
)
from .graph import Graph, direction_component


@dataclass(frozen=True)
class Configuration:
    """Injective labelling of some vertices by ``1..k``; unlabelled vertices are empty.

    Build through :func:`make_config` (validating) or :meth:`trusted` (no checks,
    used on hot paths where validity is already known).
    """

    graph: Graph
    labels: tuple  # sorted (vertex, label) pairs
    _map: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_map", dict(self.labels))

    @classmethod
    def trusted(cls, graph: Graph, mapping: dict) -> "Configuration":
        return cls(graph, tuple(sorted(mapping.items())))

    @property
    def k(self) -> int:
        return len(self.labels)

    @property
    def mapping(self) -> dict:
        return dict(self._map)

    def label(self, v: int):
        """Label at ``v``, or ``None`` when ``v`` is empty."""
        return self._map.get(v)

    @property
    def support(self) -> frozenset:
        return frozenset(self._map)

    @property
    def empties(self) -> frozenset:
        return frozenset(v for v in self.graph.vertices if v not in self._map)

    def vertex_of(self, label: int) -> int:
        for v, lab in self.labels:
            if lab == label:
                return v
        raise KeyError(label)

    def weight(self) -> dict[int, int]:
        return {v: int(v in self._map) for v in self.graph.vertices}

    def __str__(self):
        row = " ".join(str(self._map.get(v, "-")) for v in self.graph.vertices)
        return f"[{row}]"


def make_config(g: Graph, assignments: Iterable[tuple[int, int]]) -> Configuration:
    mapping: dict[int, int] = {}
    used: dict[int, int] = {}
    for v, lab in assignments:
        if not 1 <= v <= g.vertex_count:
            raise VertexOutOfRange(f"vertex {v} outside 1..{g.vertex_count}", vertex=v)
        if v in mapping:
            raise DuplicateVertex(f"vertex {v} occupied twice", vertex=v)
        if lab in used:
            raise DuplicateLabel(f"label {lab} used at {used[lab]} and {v}", label=lab)
        mapping[v] = lab
        used[lab] = v
    if not mapping:
        raise LabelGap("configuration has no labels")
    k = len(mapping)
    if set(used) != set(range(1, k + 1)):
        missing = sorted(set(range(1, k + 1)) - set(used))
        raise LabelGap(f"labels must be exactly 1..{k}; missing {missing}", missing=missing)
    if not g.is_connected_subset(mapping):
        raise DisconnectedSupport(
            f"occupied vertices {sorted(mapping)} do not induce a connected subgraph",
            vertices=sorted(mapping),
        )
    return Configuration.trusted(g, mapping)


def is_similar(a: Configuration, b: Configuration) -> bool:
    if a.graph != b.graph:
        raise GraphMismatch("configurations live on different graphs")
    return a.support == b.support


def is_saturated(c: Configuration) -> bool:
    return c.k == c.graph.vertex_count


def empties_in_direction(c: Configuration, pivot: int, toward: int) -> tuple[frozenset, int]:
    """Empty vertices in the direction of ``toward`` seen from ``pivot``, and their count."""
    comp = direction_component(c.graph, pivot, toward)
    empty = frozenset(v for v in comp if c.label(v) is None)
    return empty, len(empty)
