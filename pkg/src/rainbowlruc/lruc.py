"""Online LRUC colorer: a streaming state machine over arriving edges."""

from __future__ import annotations

import enum
from collections import OrderedDict
from dataclasses import dataclass
from typing import Iterable

from .errors import DisconnectedPrefix, DuplicateEdge, EmptyStream, SelfLoop
from .graph import Graph, Label


class CaseTag(str, enum.Enum):
    FIRST_EDGE = "FirstEdge"
    FRESH_ADJ_ONE = "FreshAdjOne"
    FRESH_PENDANT = "FreshPendant"
    REUSE_LRU = "ReuseLru"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Coloring:
    """Edge colors aligned with ``graph.edges`` (ordinals start at 1)."""

    graph: Graph
    colors: tuple[int, ...]

    @property
    def colors_used(self) -> int:
        return len(set(self.colors))

    def color_of(self, u: Label, v: Label) -> int:
        g = self.graph
        return self.colors[g.edge_id(g.index(u), g.index(v))]

    def to_json(self) -> dict:
        edges = [
            {"u": u, "v": v, "color": c}
            for (u, v), c in zip(self.graph.labelled_edges(), self.colors)
        ]
        return {"edges": edges, "colors_used": self.colors_used}


class RecencyQueue:
    """Allocated colors ordered by last use, oldest first."""

    def __init__(self):
        self._order: OrderedDict[int, None] = OrderedDict()

    def __len__(self):
        return len(self._order)

    def __iter__(self):
        return iter(self._order)

    def touch(self, color: int) -> None:
        self._order[color] = None
        self._order.move_to_end(color)

    def oldest(self) -> int:
        return next(iter(self._order))


class LrucState:
    def __init__(self):
        self.partial = Graph()
        self.colors: list[int] = []
        self.queue = RecencyQueue()
        self.next_ordinal = 1

    @property
    def colors_used(self) -> int:
        return self.next_ordinal - 1

    def _allocate(self) -> int:
        color = self.next_ordinal
        self.next_ordinal += 1
        return color

    def observe_edge(self, u: Label, v: Label) -> tuple[int, CaseTag]:
        """Color the arriving edge ``{u, v}`` irrevocably."""
        g = self.partial
        if u == v:
            raise SelfLoop(f"self-loop on vertex {u!r}")
        known_u, known_v = g.has_label(u), g.has_label(v)
        if g.m and not (known_u or known_v):
            raise DisconnectedPrefix(f"edge ({u!r}, {v!r}) touches no arrived vertex")
        if known_u and known_v and g.has_edge(g.index(u), g.index(v)):
            raise DuplicateEdge(f"duplicate edge ({u!r}, {v!r})")

        if g.m == 0:
            g.add_edge(u, v)
            color, case = self._allocate(), CaseTag.FIRST_EDGE
        else:
            before = g.adjacent_edge_count(u, v)
            edge = g.add_edge(u, v)
            if before == 1:
                # a single shared edge means one endpoint is new
                assert not (known_u and known_v)
                color, case = self._allocate(), CaseTag.FRESH_ADJ_ONE
            elif min(g.degree(edge.u), g.degree(edge.v)) == 1:
                color, case = self._allocate(), CaseTag.FRESH_PENDANT
            else:
                color, case = self.queue.oldest(), CaseTag.REUSE_LRU
        self.queue.touch(color)
        self.colors.append(color)
        return color, case

    def finish(self) -> Coloring:
        if self.partial.m == 0:
            raise EmptyStream("no edges observed")
        return Coloring(self.partial.copy(), tuple(self.colors))


def new_colorer() -> LrucState:
    return LrucState()


def color_stream(edges: Iterable[tuple[Label, Label]]):
    """Run LRUC over ``edges``; return the coloring and the per-edge trace."""
    state = LrucState()
    trace = []
    for u, v in edges:
        color, case = state.observe_edge(u, v)
        trace.append((u, v, color, case))
    return state.finish(), trace
