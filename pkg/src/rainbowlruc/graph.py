"""Simple undirected graphs over dense vertex indices.

Vertices come into existence only through edges.  Each external label is
mapped to the next free index on first appearance, so indices are
contiguous ``0..n-1`` in arrival order.
"""

from __future__ import annotations

from collections import deque
from typing import Hashable, Iterable, NamedTuple

from .errors import Disconnected, DuplicateEdge, SelfLoop, UnknownVertex

Label = Hashable


class Edge(NamedTuple):
    """An edge stored canonically, ``u < v`` (dense indices)."""

    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> "Edge":
        if a == b:
            raise SelfLoop(f"self-loop on vertex {a}")
        return cls(a, b) if a < b else cls(b, a)


class Graph:
    def __init__(self, edges: Iterable[tuple[Label, Label]] = ()):
        self.labels: list[Label] = []
        self._index: dict[Label, int] = {}
        self.adjacency: list[set[int]] = []
        self.edges: list[Edge] = []
        self._edge_index: dict[Edge, int] = {}
        for u, v in edges:
            self.add_edge(u, v)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def m(self) -> int:
        return len(self.edges)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def has_label(self, label: Label) -> bool:
        return label in self._index

    def index(self, label: Label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {label!r}") from None

    def label(self, index: int) -> Label:
        return self.labels[index]

    def _intern(self, label: Label) -> int:
        idx = self._index.get(label)
        if idx is None:
            idx = len(self.labels)
            self._index[label] = idx
            self.labels.append(label)
            self.adjacency.append(set())
        return idx

    def add_edge(self, u: Label, v: Label) -> Edge:
        """Insert edge ``{u, v}``, allocating indices for new labels."""
        if u == v:
            raise SelfLoop(f"self-loop on vertex {u!r}")
        iu, iv = self._index.get(u), self._index.get(v)
        if iu is not None and iv is not None and iv in self.adjacency[iu]:
            raise DuplicateEdge(f"duplicate edge ({u!r}, {v!r})")
        iu, iv = self._intern(u), self._intern(v)
        edge = Edge.of(iu, iv)
        self.adjacency[iu].add(iv)
        self.adjacency[iv].add(iu)
        self._edge_index[edge] = len(self.edges)
        self.edges.append(edge)
        return edge

    def has_edge(self, a: int, b: int) -> bool:
        return b in self.adjacency[a]

    def edge_id(self, a: int, b: int) -> int:
        """Position of edge ``{a, b}`` in insertion order."""
        return self._edge_index[Edge.of(a, b)]

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise UnknownVertex(f"unknown vertex index {v}")
        return len(self.adjacency[v])

    def adjacent_edge_count(self, u: Label, v: Label) -> int:
        """Edges sharing an endpoint with ``{u, v}``, excluding that edge.

        One endpoint may be absent from the graph (an arriving edge that
        introduces a vertex); it contributes nothing.
        """
        known = [self._index[x] for x in (u, v) if x in self._index]
        if not known:
            raise UnknownVertex(f"neither {u!r} nor {v!r} is in the graph")
        count = sum(len(self.adjacency[x]) for x in known)
        if len(known) == 2 and self.has_edge(*known):
            count -= 2
        return count

    def labelled_edges(self) -> list[tuple[Label, Label]]:
        return [(self.labels[e.u], self.labels[e.v]) for e in self.edges]

    def distances_from(self, source: int) -> list[int]:
        dist = [-1] * self.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            x = queue.popleft()
            for y in self.adjacency[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return min(self.distances_from(0)) >= 0

    def diameter(self) -> int:
        if self.n < 2:
            raise Disconnected("diameter needs at least two vertices")
        best = 0
        for s in range(self.n):
            dist = self.distances_from(s)
            if min(dist) < 0:
                raise Disconnected("graph is not connected")
            best = max(best, max(dist))
        return best

    def copy(self) -> "Graph":
        return Graph(self.labelled_edges())

    def relabel(self, mapping: dict) -> "Graph":
        return Graph((mapping[a], mapping[b]) for a, b in self.labelled_edges())
