"""Analyzer-versus-oracle harness: instance families and per-instance comparison."""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .config import make_config
from .errors import BudgetExceeded
from .graph import Graph
from .oracle import explore, label_groups_by_support
from .perm import contains
from .wgformat import load_fixture
from .wilson import wilson_group

FAMILIES = ("exhaustive-saturated", "fixtures", "random-cacti", "random-unicyclic")

# graphs whose every connected support (saturated or not) is checked
CURATED = ("P3", "P5", "C5", "STAR4", "SPIDER", "PENDANT4", "THETA5_PENDANT", "TRI_SQ_PENDANT")
SATURATED_ONLY = ("BOWTIE", "TRI_SQ", "THETA5")


@dataclass(frozen=True)
class Task:
    name: str
    graph: Graph
    k: int


@dataclass(frozen=True)
class Row:
    name: str
    k: int
    supports: int
    predicted: tuple  # label-group orders, one per distinct value
    oracle: tuple
    status: str  # MATCH, MISMATCH or SKIPPED
    detail: str = ""

    def format(self) -> str:
        pred = ",".join(map(str, self.predicted)) or "-"
        orc = ",".join(map(str, self.oracle)) or "-"
        line = f"{self.name:<28} k={self.k:<2} supports={self.supports:<4} " \
               f"predicted={pred:<8} oracle={orc:<8} {self.status}"
        return line + (f"  {self.detail}" if self.detail else "")


def connected_supports(g: Graph, k: int):
    for s in itertools.combinations(g.vertices, k):
        if g.is_connected_subset(s):
            yield frozenset(s)


def check_task(task: Task, max_states: int | None = None) -> Row:
    """Compare predicted and brute-force label groups on every connected
    ``k``-support of ``task.graph`` (one exploration serves all of them)."""
    g, k = task.graph, task.k
    start = next(connected_supports(g, k))
    f0 = make_config(g, [(v, i) for i, v in enumerate(sorted(start), start=1)])
    try:
        space = explore(f0, max_states)
    except BudgetExceeded as exc:
        return Row(task.name, k, 0, (), (), "SKIPPED", f"budget exceeded at {exc.visited} states")
    groups = label_groups_by_support(space)
    predicted, observed, bad = set(), set(), []
    for support in sorted(connected_supports(g, k), key=sorted):
        elements = groups.get(support)
        c = make_config(g, [(v, i) for i, v in enumerate(sorted(support), start=1)])
        d = wilson_group(g, c)
        predicted.add(d.label_order())
        if elements is None:
            bad.append(sorted(support))
            continue
        observed.add(len(elements))
        if d.label_order() != len(elements) or not all(contains(d, p) for p in elements):
            bad.append(sorted(support))
    n_sup = sum(1 for _ in connected_supports(g, k))
    status = "MISMATCH" if bad else "MATCH"
    detail = "supports " + " ".join("{" + ",".join(map(str, b)) + "}" for b in bad[:4]) if bad else ""
    return Row(task.name, k, n_sup, tuple(sorted(predicted)), tuple(sorted(observed)), status, detail)


# ------------------------------------------------------------- families

def atlas_graphs(max_n: int):
    """Every connected graph on 1..max_n vertices up to isomorphism (max_n <= 7)."""
    import networkx as nx

    if max_n > 7:
        raise ValueError("the graph atlas only covers graphs with at most 7 vertices")
    for index, h in enumerate(nx.graph_atlas_g()):
        n = h.number_of_nodes()
        if n == 0 or n > max_n or not nx.is_connected(h):
            continue
        yield Graph.from_edges(n, [(u + 1, v + 1) for u, v in h.edges()], f"atlas{index}")


def random_cactus(rng: random.Random, n: int, name: str) -> Graph:
    """Grow a cactus by hanging pendant edges or fresh cycles off existing vertices."""
    edges = []
    count = 1
    while count < n:
        at = rng.randint(1, count)
        room = n - count
        if room >= 2 and rng.random() < 0.6:
            length = rng.randint(3, min(5, room + 1))
            cyc = [at] + list(range(count + 1, count + length))
            edges += [(cyc[i], cyc[(i + 1) % length]) for i in range(length)]
            count += length - 1
        else:
            count += 1
            edges.append((at, count))
    return Graph.from_edges(n, edges, name)


def random_unicyclic(rng: random.Random, n: int, name: str) -> Graph:
    length = rng.randint(3, n)
    edges = [(i, i % length + 1) for i in range(1, length + 1)]
    for v in range(length + 1, n + 1):
        edges.append((rng.randint(1, v - 1), v))
    return Graph.from_edges(n, edges, name)


def family_tasks(family: str, max_n: int, seed: int, count: int = 12) -> list[Task]:
    if family == "exhaustive-saturated":
        return [Task(g.name, g, g.vertex_count) for g in atlas_graphs(max_n)]
    if family == "fixtures":
        tasks = []
        for name in CURATED:
            g = load_fixture(name)
            tasks += [Task(name, g, k) for k in range(1, g.vertex_count + 1)]
        for name in SATURATED_ONLY:
            g = load_fixture(name)
            tasks.append(Task(name, g, g.vertex_count))
        return tasks
    if family in ("random-cacti", "random-unicyclic"):
        rng = random.Random(seed)
        build = random_cactus if family == "random-cacti" else random_unicyclic
        tasks = []
        for i in range(count):
            n = rng.randint(3, max_n)
            g = build(rng, n, f"{family.split('-')[1]}{i}")
            tasks += [Task(g.name, g, k) for k in range(1, n + 1)]
        return tasks
    raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def run_family(family: str, max_n: int, seed: int, threads: int = 1,
               max_states: int | None = None, count: int = 12) -> list[Row]:
    tasks = family_tasks(family, max_n, seed, count)
    if threads <= 1:
        return [check_task(t, max_states) for t in tasks]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(check_task, tasks, itertools.repeat(max_states), chunksize=4))
