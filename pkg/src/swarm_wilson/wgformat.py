"""Reading and writing ``.wg`` instance files and plan files.

An instance file::

    graph <name>
    vertices <n>
    edge <u> <v>              # repeated
    config                    # optional section
    occupy <vertex> <label>   # repeated
    end

A plan file is a ``plan <graph-name>`` header followed by one
``path v1 ... vr`` or ``cycle v1 ... vr`` line per move.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .config import Configuration, make_config
from .errors import DuplicateEdge, MalformedLine, SelfLoop, SwarmError, VertexOutOfRange
from .graph import Graph, norm_edge
from .moves import ElementaryMove, MoveKind


@dataclass
class Instance:
    graph: Graph
    assignments: list | None  # None when the file has no config section
    config_line: int = 0

    @property
    def config(self) -> Configuration | None:
        if self.assignments is None:
            return None
        return make_config(self.graph, self.assignments)


def _strip(line: str) -> list[str]:
    return line.split("#", 1)[0].split()


def _ints(tokens, lineno, count=None):
    try:
        vals = [int(t) for t in tokens]
    except ValueError:
        raise MalformedLine(f"line {lineno}: expected integers, got {' '.join(tokens)!r}",
                            line=lineno) from None
    if count is not None and len(vals) != count:
        raise MalformedLine(f"line {lineno}: expected {count} integers", line=lineno)
    return vals


def parse_instance(text: str) -> Instance:
    name = "G"
    n = None
    edges: list[tuple[int, int]] = []
    seen: set = set()
    assignments = None
    config_line = 0
    section = "graph"
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tok = _strip(raw)
        if not tok:
            continue
        head, rest = tok[0], tok[1:]
        if section == "done":
            raise MalformedLine(f"line {lineno}: content after 'end'", line=lineno)
        if head == "graph" and section == "graph" and n is None and not edges:
            if len(rest) != 1:
                raise MalformedLine(f"line {lineno}: 'graph' takes one name", line=lineno)
            name = rest[0]
        elif head == "vertices" and section == "graph" and n is None:
            (n,) = _ints(rest, lineno, 1)
            if n < 1:
                raise MalformedLine(f"line {lineno}: vertex count must be positive", line=lineno)
        elif head == "edge" and section == "graph":
            if n is None:
                raise MalformedLine(f"line {lineno}: 'edge' before 'vertices'", line=lineno)
            u, v = _ints(rest, lineno, 2)
            if u == v:
                raise SelfLoop(f"line {lineno}: self-loop at vertex {u}", line=lineno, vertex=u)
            for w in (u, v):
                if not 1 <= w <= n:
                    raise VertexOutOfRange(f"line {lineno}: vertex {w} outside 1..{n}",
                                           line=lineno, vertex=w)
            if norm_edge(u, v) in seen:
                raise DuplicateEdge(f"line {lineno}: duplicate edge {u}-{v}", line=lineno)
            seen.add(norm_edge(u, v))
            edges.append((u, v))
        elif head == "config" and section == "graph" and not rest:
            section = "config"
            assignments = []
            config_line = lineno
        elif head == "occupy" and section == "config":
            assignments.append(tuple(_ints(rest, lineno, 2)))
        elif head == "end" and not rest:
            section = "done"
        else:
            raise MalformedLine(f"line {lineno}: unexpected {raw.strip()!r}", line=lineno)
    if n is None:
        raise MalformedLine("missing 'vertices' line", line=0)
    g = Graph.from_edges(n, edges, name)
    return Instance(g, assignments, config_line)


def load_graph(text: str) -> Graph:
    return parse_instance(text).graph


def load_instance_file(path) -> Instance:
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())


def dump_instance(g: Graph, c: Configuration | None = None) -> str:
    lines = [f"graph {g.name}", f"vertices {g.vertex_count}"]
    lines += [f"edge {u} {v}" for u, v in g.sorted_edges()]
    if c is not None:
        lines.append("config")
        lines += [f"occupy {v} {lab}" for v, lab in c.labels]
    lines.append("end")
    return "\n".join(lines) + "\n"


def dump_plan(graph_name: str, moves) -> str:
    return "".join([f"plan {graph_name}\n"] + [f"{m}\n" for m in moves])


def parse_plan(text: str) -> tuple[str, list[ElementaryMove]]:
    name = None
    moves = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tok = _strip(raw)
        if not tok:
            continue
        head, rest = tok[0], tok[1:]
        if head == "plan" and name is None and len(rest) == 1:
            name = rest[0]
        elif head in ("path", "cycle") and name is not None:
            moves.append(ElementaryMove(tuple(_ints(rest, lineno)), MoveKind(head)))
        else:
            raise MalformedLine(f"line {lineno}: unexpected {raw.strip()!r}", line=lineno)
    if name is None:
        raise MalformedLine("missing 'plan' header", line=0)
    return name, moves


FIXTURE_NAMES = (
    "P3", "P5", "C5", "STAR4", "SPIDER", "BOWTIE", "TRI_SQ", "THETA5", "PENDANT4",
    "G12", "FIG3_H", "THETA5_PENDANT", "TRI_SQ_PENDANT",
)


def load_fixture(name: str) -> Graph:
    """One of the shipped named graphs, e.g. ``load_fixture("BOWTIE")``."""
    if name not in FIXTURE_NAMES:
        raise SwarmError(f"unknown fixture {name!r}")
    text = resources.files("swarm_wilson").joinpath(f"fixtures/{name}.wg").read_text()
    return load_graph(text)
