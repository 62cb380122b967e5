"""Simple undirected graphs on vertices 1..n and their edge-connectivity structure."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .errors import (
    Disconnected,
    DuplicateEdge,
    NotAdjacent,
    SelfLoop,
    VertexOutOfRange,
)

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Connected simple graph with vertex ids ``1..vertex_count``.

    ``edges`` holds normalized pairs ``(u, v)`` with ``u < v``.
    """

    vertex_count: int
    edges: frozenset
    name: str = field(default="G", compare=False)
    adj: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.vertex_count
        if n < 1:
            raise VertexOutOfRange(f"graph needs at least one vertex, got {n}")
        nbrs: list[list[int]] = [[] for _ in range(n + 1)]
        for u, v in self.edges:
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}", vertex=u)
            for w in (u, v):
                if not 1 <= w <= n:
                    raise VertexOutOfRange(f"vertex {w} outside 1..{n}", vertex=w)
            if u > v:
                raise ValueError("edges must be normalized; use Graph.from_edges")
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "adj", tuple(tuple(sorted(a)) for a in nbrs))
        reached = _reach(self.adj, 1, frozenset())
        if len(reached) != n:
            missing = sorted(set(range(1, n + 1)) - reached)
            raise Disconnected(f"graph is disconnected; unreachable from 1: {missing}",
                               vertices=missing)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], name: str = "G") -> "Graph":
        seen: set[Edge] = set()
        for u, v in edges:
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}", vertex=u)
            e = norm_edge(u, v)
            if e in seen:
                raise DuplicateEdge(f"duplicate edge {e[0]}-{e[1]}", edge=e)
            seen.add(e)
        return cls(n, frozenset(seen), name)

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def is_connected_subset(self, vertices) -> bool:
        vs = set(vertices)
        if not vs:
            return False
        start = min(vs)
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in self.adj[x]:
                if y in vs and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(vs)

    def is_cycle(self) -> bool:
        n = self.vertex_count
        return n >= 3 and len(self.edges) == n and all(len(a) == 2 for a in self.adj[1:])

    def is_path(self) -> bool:
        return len(self.edges) == self.vertex_count - 1 and all(len(a) <= 2 for a in self.adj[1:])

    def is_tree(self) -> bool:
        return len(self.edges) == self.vertex_count - 1


def _reach(adj, start: int, removed: frozenset) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen and y not in removed:
                seen.add(y)
                stack.append(y)
    return seen


# ---------------------------------------------------------------- bridges

def find_bridges(g: Graph) -> set[Edge]:
    """Bridges of ``g`` via an iterative lowpoint DFS."""
    n = g.vertex_count
    pre = [0] * (n + 1)
    low = [0] * (n + 1)
    counter = 0
    bridges: set[Edge] = set()
    for root in g.vertices:
        if pre[root]:
            continue
        counter += 1
        pre[root] = low[root] = counter
        # frames: (vertex, parent, iterator over neighbours)
        stack = [(root, 0, iter(g.adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if not pre[w]:
                    counter += 1
                    pre[w] = low[w] = counter
                    stack.append((w, v, iter(g.adj[w])))
                    advanced = True
                    break
                if w != parent:
                    low[v] = min(low[v], pre[w])
            if advanced:
                continue
            stack.pop()
            if parent:
                low[parent] = min(low[parent], low[v])
                if low[v] > pre[parent]:
                    bridges.add(norm_edge(parent, v))
    return bridges


@dataclass(frozen=True)
class EdgeBlockPartition:
    blocks: tuple  # tuple of frozensets, ordered by minimum vertex
    bridges: frozenset
    block_of: dict = field(compare=False)

    def block_containing(self, v: int) -> frozenset:
        return self.blocks[self.block_of[v]]

    def is_trivial(self, index: int) -> bool:
        return len(self.blocks[index]) == 1


def edge_blocks(g: Graph) -> EdgeBlockPartition:
    """Partition vertices into 2-edge-connected classes (edge-blocks)."""
    bridges = find_bridges(g)
    block_of: dict[int, int] = {}
    blocks: list[frozenset] = []
    for v in g.vertices:
        if v in block_of:
            continue
        comp = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if y not in comp and norm_edge(x, y) not in bridges:
                    comp.add(y)
                    stack.append(y)
        for x in comp:
            block_of[x] = len(blocks)
        blocks.append(frozenset(comp))
    return EdgeBlockPartition(tuple(blocks), frozenset(bridges), block_of)


def block_internal_edges(g: Graph, block) -> list[Edge]:
    return sorted(e for e in g.edges if e[0] in block and e[1] in block)


@dataclass(frozen=True)
class BlockTree:
    nodes: tuple
    edges: tuple  # (block_a, block_b, bridge) with block_a < block_b

    def neighbors(self, node: int) -> list[int]:
        out = []
        for a, b, _ in self.edges:
            if a == node:
                out.append(b)
            elif b == node:
                out.append(a)
        return sorted(out)


def block_tree(g: Graph, p: EdgeBlockPartition | None = None) -> BlockTree:
    """Contract every edge-block to a node; tree edges carry their bridge."""
    if p is None:
        p = edge_blocks(g)
    tree_edges = []
    for u, v in sorted(p.bridges):
        a, b = p.block_of[u], p.block_of[v]
        if a > b:
            a, b = b, a
        tree_edges.append((a, b, (u, v)))
    tree_edges.sort()
    return BlockTree(tuple(range(len(p.blocks))), tuple(tree_edges))


# ------------------------------------------------------ biconnectivity

def biconnected_components(g: Graph, block) -> list[frozenset]:
    """Vertex-biconnected components of the subgraph induced by ``block``.

    Isolated vertices come back as singletons. Output is sorted by minimum vertex.
    """
    vs = set(block)
    if len(vs) == 1:
        return [frozenset(vs)]
    adj = {v: [w for w in g.adj[v] if w in vs] for v in vs}
    pre: dict[int, int] = {}
    low: dict[int, int] = {}
    counter = 0
    comps: list[frozenset] = []
    for root in sorted(vs):
        if root in pre:
            continue
        if not adj[root]:
            comps.append(frozenset([root]))
            continue
        counter += 1
        pre[root] = low[root] = counter
        edge_stack: list[Edge] = []
        stack = [(root, 0, iter(adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w not in pre:
                    counter += 1
                    pre[w] = low[w] = counter
                    edge_stack.append((v, w))
                    stack.append((w, v, iter(adj[w])))
                    advanced = True
                    break
                if w != parent and pre[w] < pre[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], pre[w])
            if advanced:
                continue
            stack.pop()
            if parent:
                low[parent] = min(low[parent], low[v])
                if low[v] >= pre[parent]:
                    comp = set()
                    while True:
                        a, b = edge_stack.pop()
                        comp.update((a, b))
                        if (a, b) == (parent, v):
                            break
                    comps.append(frozenset(comp))
    return sorted(comps, key=min)


def articulation_points(g: Graph) -> set[int]:
    comps = biconnected_components(g, g.vertices)
    count: dict[int, int] = {}
    for c in comps:
        for v in c:
            count[v] = count.get(v, 0) + 1
    return {v for v, c in count.items() if c > 1}


# ------------------------------------------------------------ directions

def direction_component(g: Graph, pivot: int, toward: int) -> frozenset:
    """Vertices of the component of ``g - pivot`` that contains ``toward``."""
    if not g.has_edge(pivot, toward):
        raise NotAdjacent(f"{toward} is not adjacent to {pivot}", pivot=pivot, toward=toward)
    return frozenset(_reach(g.adj, toward, frozenset([pivot])))


# ------------------------------------------------------- trees and paths

def spanning_tree(g: Graph, vertices, core=None) -> dict[int, int | None]:
    """BFS spanning tree of ``g[vertices]`` as a parent map.

    If ``core`` is given (a connected subset), the tree restricted to ``core`` is
    itself a spanning tree of ``g[core]``: the search exhausts ``core`` before
    leaving it. The root is the smallest vertex of ``core`` (or of ``vertices``).
    """
    vs = set(vertices)
    inner = set(core) if core else vs
    root = min(inner)
    parent: dict[int, int | None] = {root: None}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if y in inner and y not in parent:
                parent[y] = x
                queue.append(y)
    if inner is not vs:
        queue = deque(sorted(parent))
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if y in vs and y not in parent:
                    parent[y] = x
                    queue.append(y)
    if len(parent) != len(vs):
        raise Disconnected("vertex set does not induce a connected subgraph")
    return parent


def tree_leaves(parent: dict[int, int | None]) -> list[int]:
    """Leaves (degree <= 1 in the tree), sorted."""
    deg = {v: 0 for v in parent}
    for v, p in parent.items():
        if p is not None:
            deg[v] += 1
            deg[p] += 1
    return sorted(v for v, d in deg.items() if d <= 1)


def tree_path(parent: dict[int, int | None], a: int, b: int) -> list[int]:
    """Vertex path from ``a`` to ``b`` inside the tree given by ``parent``."""
    def up(x):
        chain = []
        while x is not None:
            chain.append(x)
            x = parent[x]
        return chain

    ua, ub = up(a), up(b)
    in_b = {x: i for i, x in enumerate(ub)}
    for i, x in enumerate(ua):
        if x in in_b:
            return ua[: i + 1] + list(reversed(ub[: in_b[x]]))
    raise ValueError("vertices are in different trees")


def bfs_distances(g: Graph, sources, allowed=None) -> dict[int, int]:
    dist = {s: 0 for s in sources}
    queue = deque(sorted(dist))
    while queue:
        x = queue.popleft()
        for y in g.adj[x]:
            if y not in dist and (allowed is None or y in allowed):
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist
