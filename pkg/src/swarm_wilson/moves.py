"""Elementary movements (rotations along occupied cycles, slides along paths) and
valid sequences of them."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .config import Configuration
from .errors import InvalidStep, MalformedMove, SwarmError
from .graph import Graph
from .perm import VertexPermutation, compose, identity


class MoveKind(enum.Enum):
    CYCLE = "cycle"
    PATH = "path"


@dataclass(frozen=True)
class ElementaryMove:
    vertices: tuple
    kind: MoveKind

    def __lt__(self, other):
        return (self.vertices, self.kind.value) < (other.vertices, other.kind.value)

    @classmethod
    def path(cls, *vertices: int) -> "ElementaryMove":
        return cls(tuple(vertices), MoveKind.PATH)

    @classmethod
    def cycle(cls, *vertices: int) -> "ElementaryMove":
        return cls(tuple(vertices), MoveKind.CYCLE)

    def reversed(self) -> "ElementaryMove":
        return ElementaryMove(tuple(reversed(self.vertices)), self.kind)

    def __str__(self):
        return f"{self.kind.value} " + " ".join(map(str, self.vertices))

    def __repr__(self):
        return f"{self.kind.name}{self.vertices}"


def induced_permutation(m: ElementaryMove) -> VertexPermutation:
    return VertexPermutation.cycle(*m.vertices)


def check_move(c: Configuration, m: ElementaryMove) -> None:
    """Raise :class:`MalformedMove` unless ``m`` is an r-cycle or r-path of ``c``."""
    vs = m.vertices
    g = c.graph
    r = len(vs)
    if len(set(vs)) != r:
        raise MalformedMove(f"{m}: repeated vertex")
    if any(not 1 <= v <= g.vertex_count for v in vs):
        raise MalformedMove(f"{m}: vertex out of range")
    if m.kind is MoveKind.CYCLE:
        if r < 3:
            raise MalformedMove(f"{m}: a cycle needs at least 3 vertices")
        if not g.has_edge(vs[-1], vs[0]):
            raise MalformedMove(f"{m}: {vs[-1]} and {vs[0]} are not adjacent")
        if any(c.label(v) is None for v in vs):
            raise MalformedMove(f"{m}: every cycle vertex must be occupied")
    else:
        if r < 2:
            raise MalformedMove(f"{m}: a path needs at least 2 vertices")
        if c.label(vs[0]) is not None or any(c.label(v) is None for v in vs[1:]):
            raise MalformedMove(f"{m}: only the first path vertex may be empty")
    for a, b in zip(vs, vs[1:]):
        if not g.has_edge(a, b):
            raise MalformedMove(f"{m}: {a} and {b} are not adjacent")


def apply_move(c: Configuration, m: ElementaryMove) -> Configuration:
    """``c o sigma_m``: the label now at ``v`` is the one previously at ``sigma_m(v)``.

    The result may have a disconnected support; see :func:`is_valid`.
    """
    check_move(c, m)
    return _apply_unchecked(c, m)


def _apply_unchecked(c: Configuration, m: ElementaryMove) -> Configuration:
    vs = m.vertices
    mapping = c.mapping
    old = [mapping.get(v) for v in vs]
    r = len(vs)
    for i, v in enumerate(vs):
        lab = old[(i + 1) % r]
        if lab is None:
            mapping.pop(v, None)
        else:
            mapping[v] = lab
    return Configuration.trusted(c.graph, mapping)


def is_valid(c: Configuration, m: ElementaryMove) -> bool:
    check_move(c, m)
    if m.kind is MoveKind.CYCLE:
        return True
    support = (c.support | {m.vertices[0]}) - {m.vertices[-1]}
    return c.graph.is_connected_subset(support)


def enumerate_moves(c: Configuration) -> list[ElementaryMove]:
    """All valid elementary moves of ``c`` (empty-vertex permutations excluded),
    sorted lexicographically by vertex list."""
    return list(moves_for_support(c.graph, c.support))


@lru_cache(maxsize=65536)
def moves_for_support(g: Graph, support: frozenset) -> tuple:
    """Valid moves depend only on the occupied set, so they are cached per support."""
    moves = [ElementaryMove(cyc, MoveKind.CYCLE) for cyc in _occupied_cycles(g, support)]
    moves.extend(ElementaryMove(p, MoveKind.PATH) for p in _valid_paths(g, support))
    moves.sort()
    return tuple(moves)


def _occupied_cycles(g: Graph, support: frozenset):
    """Every simple cycle of g[support] in both orientations, starting at its minimum."""
    adj = g.adj
    for s in sorted(support):
        path = [s]
        on_path = {s}

        def extend(v):
            for w in adj[v]:
                if w == s and len(path) >= 3:
                    yield tuple(path)
                elif w > s and w in support and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    yield from extend(w)
                    path.pop()
                    on_path.discard(w)

        yield from extend(s)


def _valid_paths(g: Graph, support: frozenset):
    adj = g.adj
    connected_cache: dict = {}

    def valid(first, last):
        key = (first, last)
        ok = connected_cache.get(key)
        if ok is None:
            ok = g.is_connected_subset((support | {first}) - {last})
            connected_cache[key] = ok
        return ok

    for e in sorted(set(g.vertices) - support):
        if not any(w in support for w in adj[e]):
            continue
        path = [e]
        on_path = {e}

        def extend(v):
            for w in adj[v]:
                if w in support and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    if valid(e, w):
                        yield tuple(path)
                    yield from extend(w)
                    path.pop()
                    on_path.discard(w)

        yield from extend(e)


@dataclass(frozen=True)
class MoveSequence:
    source: Configuration
    moves: tuple = ()

    def __len__(self):
        return len(self.moves)

    def reversed(self) -> "MoveSequence":
        final, _ = apply_sequence(self)
        return MoveSequence(final, tuple(m.reversed() for m in reversed(self.moves)))

    def configurations(self) -> list[Configuration]:
        out = [self.source]
        for m in self.moves:
            out.append(_apply_unchecked(out[-1], m))
        return out


def apply_sequence(s: MoveSequence) -> tuple[Configuration, VertexPermutation]:
    """Replay ``s`` move by move; returns the final configuration and the
    composite movement ``sigma_1 o sigma_2 o ... o sigma_t``.

    Raises :class:`InvalidStep` (1-based index) at the first malformed or
    connectivity-breaking move.
    """
    c = s.source
    sigma = identity()
    for i, m in enumerate(s.moves, start=1):
        try:
            ok = is_valid(c, m)
        except SwarmError as exc:
            raise InvalidStep(i, str(exc)) from exc
        if not ok:
            raise InvalidStep(i, f"{m} disconnects the occupied set")
        c = _apply_unchecked(c, m)
        sigma = compose(sigma, induced_permutation(m))
    return c, sigma


def act(c: Configuration, sigma: VertexPermutation) -> Configuration:
    """``c o sigma`` for an arbitrary vertex permutation (no validity check)."""
    mapping = {}
    for v in c.graph.vertices:
        lab = c.label(sigma(v))
        if lab is not None:
            mapping[v] = lab
    return Configuration.trusted(c.graph, mapping)
