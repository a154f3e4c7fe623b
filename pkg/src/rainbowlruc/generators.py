"""Graph families, arrival orders, and the edge-list file format."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Optional, TextIO

from .errors import (
    BadParameters,
    Disconnected,
    DisconnectedPrefix,
    DuplicateEdge,
    ParseError,
    SelfLoop,
)
from .graph import Graph, Label

FAMILY_NAMES = ("path", "tree", "star", "cycle", "wheel", "complete", "complete_bipartite")

_MIN_N = {"path": 2, "star": 2, "cycle": 3, "wheel": 4, "complete": 2, "tree": 2}


@dataclass(frozen=True)
class Family:
    name: str
    n: int = 0
    p: int = 0
    q: int = 0
    seed: Optional[int] = None

    def __post_init__(self):
        if self.name not in FAMILY_NAMES:
            raise BadParameters(f"unknown family {self.name!r}")
        if self.name == "complete_bipartite":
            if self.p < 1 or self.q < 1:
                raise BadParameters("complete_bipartite needs p, q >= 1")
        elif self.n < _MIN_N[self.name]:
            raise BadParameters(f"{self.name} needs n >= {_MIN_N[self.name]}")

    @property
    def order(self) -> int:
        return self.p + self.q if self.name == "complete_bipartite" else self.n

    def __str__(self):
        if self.name == "complete_bipartite":
            return f"complete_bipartite(p={self.p},q={self.q})"
        return f"{self.name}(n={self.n})"


@dataclass
class EdgeStream:
    edges: list[tuple[Label, Label]]
    family: Optional[str] = None
    strategy: str = "natural"
    seed: Optional[int] = None
    params: dict = field(default_factory=dict)

    def __iter__(self) -> Iterator[tuple[Label, Label]]:
        return iter(self.edges)

    def __len__(self):
        return len(self.edges)

    def graph(self) -> Graph:
        return Graph(self.edges)


def _family_edges(fam: Family) -> list[tuple[int, int]]:
    n = fam.n
    if fam.name == "path":
        return [(i, i + 1) for i in range(1, n)]
    if fam.name == "star":
        return [(1, i) for i in range(2, n + 1)]
    if fam.name == "cycle":
        return [(i, i + 1) for i in range(1, n)] + [(n, 1)]
    if fam.name == "wheel":
        spokes = [(1, i) for i in range(2, n + 1)]
        rim = [(i, i + 1) for i in range(2, n)] + [(n, 2)]
        return spokes + rim
    if fam.name == "complete":
        return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    if fam.name == "complete_bipartite":
        left = range(1, fam.p + 1)
        right = range(fam.p + 1, fam.p + fam.q + 1)
        return [(a, b) for a in left for b in right]
    # tree
    return _random_tree_edges(n, 0 if fam.seed is None else fam.seed)


def make_graph(fam: Family) -> Graph:
    """The family's graph with vertex labels 1..n (hub of a wheel is 1)."""
    return Graph(_family_edges(fam))


def _random_tree_edges(n: int, seed: int) -> list[tuple[int, int]]:
    rng = random.Random(seed)
    return [(rng.randint(1, i), i + 1) for i in range(1, n)]


def make_random_tree(n: int, seed: int) -> Graph:
    """Vertex i+1 attaches to a uniform pick among 1..i."""
    if n < 2:
        raise BadParameters("a tree needs n >= 2")
    return Graph(_random_tree_edges(n, seed))


def make_random_connected(n: int, extra: int, seed: int) -> Graph:
    """Random tree on n vertices plus up to ``extra`` distinct non-tree edges."""
    rng = random.Random(seed)
    edges = _random_tree_edges(n, rng.randrange(2**32))
    present = {frozenset(e) for e in edges}
    missing = [
        (a, b)
        for a in range(1, n + 1)
        for b in range(a + 1, n + 1)
        if frozenset((a, b)) not in present
    ]
    edges += rng.sample(missing, min(extra, len(missing)))
    return Graph(edges)


def order_adversarial(fam: Family) -> EdgeStream:
    """Worst-case arrival order: spanning path or spokes first."""
    n = fam.n
    name = fam.name
    if name in ("cycle", "wheel", "path", "star"):
        # natural family order already puts the path / spokes first
        edges = _family_edges(fam)
    elif name == "complete":
        head = [(i, i + 1) for i in range(1, n)]
        tail = [(i, j) for i in range(1, n + 1) for j in range(i + 2, n + 1)]
        edges = head + tail
    elif name == "tree":
        edges = _dfs_order(make_graph(fam))
    else:
        raise BadParameters(f"no adversarial order for {name}")
    return EdgeStream(list(edges), name, "adversarial", fam.seed, _params(fam))


def _dfs_order(g: Graph) -> list[tuple[Label, Label]]:
    start = g.index(1)
    seen = {start}
    out = []

    def visit(v):
        for x in sorted(g.adjacency[v], key=g.label):
            if x not in seen:
                seen.add(x)
                out.append((g.label(v), g.label(x)))
                visit(x)

    visit(start)
    return out


def order_natural(fam: Family) -> EdgeStream:
    return EdgeStream(_family_edges(fam), fam.name, "natural", fam.seed, _params(fam))


def order_random_connected(g: Graph, seed: int) -> EdgeStream:
    """Connectivity-preserving permutation drawn uniformly from the frontier."""
    if g.m == 0 or not g.is_connected():
        raise Disconnected("graph is not connected")
    rng = random.Random(seed)
    placed = [False] * g.n
    used = [False] * g.m
    first = rng.randrange(g.m)
    order = [first]
    used[first] = True
    a, b = g.edges[first]
    placed[a] = placed[b] = True
    frontier = set()

    def grow(v):
        for x in g.adjacency[v]:
            eid = g.edge_id(v, x)
            if not used[eid]:
                frontier.add(eid)

    grow(a)
    grow(b)
    while frontier:
        eid = rng.choice(sorted(frontier))
        frontier.discard(eid)
        used[eid] = True
        order.append(eid)
        for v in g.edges[eid]:
            if not placed[v]:
                placed[v] = True
                grow(v)
    labelled = g.labelled_edges()
    return EdgeStream([labelled[e] for e in order], None, "random", seed)


def _params(fam: Family) -> dict:
    if fam.name == "complete_bipartite":
        return {"p": fam.p, "q": fam.q}
    return {"n": fam.n}


def make_stream(fam: Family, order: str = "adversarial", seed: int = 0) -> EdgeStream:
    if order == "adversarial":
        return order_adversarial(fam)
    if order == "natural":
        return order_natural(fam)
    if order == "random":
        stream = order_random_connected(make_graph(fam), seed)
        stream.family, stream.params = fam.name, _params(fam)
        return stream
    raise BadParameters(f"unknown order strategy {order!r}")


def parse_edge_lines(lines: Iterable[str]) -> Iterator[tuple[int, str, str]]:
    """Yield ``(line_number, u, v)`` for each edge line; comments and blanks skipped."""
    for lineno, raw in enumerate(lines, 1):
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        parts = text.split()
        if len(parts) != 2:
            raise ParseError(f"expected two labels, got {len(parts)}", line=lineno)
        yield lineno, parts[0], parts[1]


def read_stream(fh: TextIO) -> EdgeStream:
    """Parse and validate an edge-list stream (no duplicates, connected prefixes)."""
    g = Graph()
    edges = []
    for lineno, u, v in parse_edge_lines(fh):
        if u == v:
            raise SelfLoop(f"self-loop on vertex {u!r}", line=lineno)
        if g.m and not (g.has_label(u) or g.has_label(v)):
            raise DisconnectedPrefix(f"edge ({u}, {v}) touches no arrived vertex", line=lineno)
        try:
            g.add_edge(u, v)
        except DuplicateEdge:
            raise DuplicateEdge(f"duplicate edge ({u}, {v})", line=lineno) from None
        edges.append((u, v))
    return EdgeStream(edges, strategy="file")


def stream_from_file(path) -> EdgeStream:
    with open(Path(path)) as fh:
        return read_stream(fh)


def format_edge_list(stream: Iterable[tuple[Label, Label]]) -> str:
    return "".join(f"{u} {v}\n" for u, v in stream)
