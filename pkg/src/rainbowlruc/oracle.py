"""Offline rainbow-connectivity checks and the exact rainbow connection number.

Rainbow reachability is explored over ``(vertex, used-color bitmask)``
states.  A walk whose colors are pairwise distinct shortcuts to a simple
path whose colors are a subset, so state search is exact.
"""

from __future__ import annotations

import math
import time
from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import BadParameters, BudgetExceeded, Disconnected, IncompleteColoring
from .graph import Graph, Label
from .lruc import Coloring

DEFAULT_MAX_EDGES = 16
DEFAULT_MAX_SECONDS = 300.0


@dataclass(frozen=True)
class SearchBudget:
    max_edges: int = DEFAULT_MAX_EDGES
    max_seconds: Optional[float] = DEFAULT_MAX_SECONDS


@dataclass(frozen=True)
class RcResult:
    rc: int
    witness: Coloring
    nodes: int = 0

    def to_json(self) -> dict:
        return {"rc": self.rc, "witness": self.witness.to_json()}


def _colors_of(g: Graph, coloring) -> Sequence[int]:
    colors = coloring.colors if isinstance(coloring, Coloring) else coloring
    if len(colors) != g.m or any(c is None for c in colors):
        raise IncompleteColoring(f"coloring covers {len(colors)} of {g.m} edges")
    return colors


def _bits(colors: Sequence[int]) -> list[int]:
    # map arbitrary color ids onto compact bit positions
    slot = {c: i for i, c in enumerate(sorted(set(colors)))}
    return [1 << slot[c] for c in colors]


def _incidence(g: Graph) -> list[list[tuple[int, int]]]:
    inc: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for eid, (a, b) in enumerate(g.edges):
        inc[a].append((b, eid))
        inc[b].append((a, eid))
    for row in inc:
        row.sort()
    return inc


def _reach(inc, bits, source: int, k: int, full: int) -> int:
    """Bitmask of vertices reachable from ``source`` by a possibly-rainbow path.

    ``bits[e] == 0`` marks an uncolored edge; it may take any color not
    already on the path, so a path with fixed colors S and w free edges
    is feasible iff |S| + w <= k.
    """
    seen = 1 << source
    best = {(source, 0): 0}
    stack = [(source, 0, 0)]
    while stack:
        v, mask, w = stack.pop()
        for x, eid in inc[v]:
            b = bits[eid]
            if b:
                if mask & b:
                    continue
                nm, nw = mask | b, w
            else:
                nm, nw = mask, w + 1
            if nw and nm.bit_count() + nw > k:
                continue
            key = (x, nm)
            old = best.get(key)
            if old is not None and old <= nw:
                continue
            best[key] = nw
            seen |= 1 << x
            if seen == full:
                return seen
            stack.append((x, nm, nw))
    return seen


def first_failing_pair(g: Graph, coloring) -> Optional[tuple[Label, Label]]:
    """The first vertex pair (in index order) lacking a rainbow path."""
    bits = _bits(_colors_of(g, coloring))
    inc = _incidence(g)
    full = (1 << g.n) - 1
    for s in range(g.n):
        seen = _reach(inc, bits, s, g.m, full)
        if seen != full:
            t = next(t for t in range(s + 1, g.n) if not seen >> t & 1)
            return g.label(s), g.label(t)
    return None


def is_rainbow_connected(g: Graph, coloring) -> bool:
    return first_failing_pair(g, coloring) is None


def rainbow_witness(g: Graph, coloring, u: Label, v: Label) -> Optional[list[Label]]:
    """Shortest rainbow path from ``u`` to ``v`` as a label list, or None."""
    bits = _bits(_colors_of(g, coloring))
    src, dst = g.index(u), g.index(v)
    if src == dst:
        raise BadParameters("witness endpoints must differ")
    inc = _incidence(g)
    parent = {(src, 0): None}
    queue = deque([(src, 0)])
    while queue:
        state = queue.popleft()
        x, mask = state
        if x == dst:
            path = []
            while state is not None:
                path.append(g.label(state[0]))
                state = parent[state]
            return path[::-1]
        for y, eid in inc[x]:
            b = bits[eid]
            if mask & b:
                continue
            nxt = (y, mask | b)
            if nxt not in parent:
                parent[nxt] = state
                queue.append(nxt)
    return None


class _Search:
    def __init__(self, g: Graph, budget: SearchBudget):
        self.g = g
        self.inc = _incidence(g)
        self.full = (1 << g.n) - 1
        self.deadline = (
            None if budget.max_seconds is None else time.monotonic() + budget.max_seconds
        )
        self.nodes = 0

    def feasible(self, bits, k: int) -> bool:
        for s in range(self.g.n):
            if _reach(self.inc, bits, s, k, self.full) != self.full:
                return False
        return True

    def solve(self, k: int) -> Optional[list[int]]:
        m = self.g.m
        bits = [0] * m
        colors = [0] * m

        def dfs(i: int, used: int) -> bool:
            self.nodes += 1
            if self.deadline is not None and time.monotonic() > self.deadline:
                raise BudgetExceeded("search time limit reached")
            if not self.feasible(bits, k):
                return False
            if i == m:
                return True
            # color j may appear only once colors 1..j-1 are in use
            for c in range(1, min(used + 1, k) + 1):
                colors[i], bits[i] = c, 1 << (c - 1)
                if dfs(i + 1, max(used, c)):
                    return True
            colors[i], bits[i] = 0, 0
            return False

        return list(colors) if dfs(0, 0) else None


def find_coloring(g: Graph, k: int, budget: SearchBudget = SearchBudget()) -> Optional[Coloring]:
    """First rainbow coloring with at most ``k`` colors in search order, or None."""
    if g.m > budget.max_edges:
        raise BudgetExceeded(f"{g.m} edges exceeds budget of {budget.max_edges}")
    found = _Search(g, budget).solve(k)
    return None if found is None else Coloring(g, tuple(found))


def rc_exact(g: Graph, budget: SearchBudget = SearchBudget()) -> RcResult:
    """Minimum number of colors making ``g`` rainbow connected.

    Tries k = max(1, diameter), k+1, ... and returns the first coloring
    found in edge-index order with ascending color trials.
    """
    if g.m == 0:
        raise Disconnected("graph has no edges")
    if not g.is_connected():
        raise Disconnected("graph is not connected")
    if g.m > budget.max_edges:
        raise BudgetExceeded(f"{g.m} edges exceeds budget of {budget.max_edges}")
    search = _Search(g, budget)
    for k in range(max(1, g.diameter()), g.m + 1):
        found = search.solve(k)
        if found is not None:
            return RcResult(k, Coloring(g, tuple(found)), search.nodes)
    raise AssertionError("all-distinct coloring is always rainbow")  # pragma: no cover


def _simple_paths(g: Graph, s: int, t: int) -> list[list[int]]:
    """All simple s-t paths as lists of edge ids."""
    out = []

    def walk(v, visited, eids):
        if v == t:
            out.append(list(eids))
            return
        for x in g.adjacency[v]:
            if not visited >> x & 1:
                eids.append(g.edge_id(v, x))
                walk(x, visited | 1 << x, eids)
                eids.pop()

    walk(s, 1 << s, [])
    return out


def rc_naive(g: Graph, max_edges: int = 8, chunk: int = 1 << 18) -> int:
    """Reference rc by enumerating every k^m coloring for k = 1, 2, ...

    No pruning, no symmetry breaking, no distance bound: every simple path
    between every pair is listed and each coloring is tested against them.
    """
    m = g.m
    if m > max_edges:
        raise BudgetExceeded(f"naive enumeration limited to {max_edges} edges")
    paths = [_simple_paths(g, s, t) for s in range(g.n) for t in range(s + 1, g.n)]
    # far pairs reject the most colorings; test them first
    paths.sort(key=lambda ps: -min(map(len, ps)))
    for k in range(1, m + 1):
        total = k**m
        weights = k ** np.arange(m - 1, -1, -1, dtype=np.int64)
        for start in range(0, total, chunk):
            idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
            cols = ((idx[:, None] // weights[None, :]) % k).astype(np.int8)
            for pair_paths in paths:
                pair_ok = np.zeros(len(cols), dtype=bool)
                for p in pair_paths:
                    sub = np.sort(cols[:, p], axis=1)
                    pair_ok |= np.all(sub[:, 1:] != sub[:, :-1], axis=1)
                # keep only colorings that still satisfy every pair seen so far
                cols = cols[pair_ok]
                if not len(cols):
                    break
            if len(cols):
                return k
    raise AssertionError("all-distinct coloring is always rainbow")  # pragma: no cover


FAMILIES = ("path", "tree", "star", "cycle", "wheel", "complete", "complete_bipartite")


def rc_closed_form(family: str, n: int = 0, p: int = 0, q: int = 0, m: int = 0) -> Optional[int]:
    """Known rc value for a graph family, or None where none is claimed.

    Trees (including paths and stars) need one color per edge; ``tree``
    accepts either ``m`` or ``n``.
    """
    if family not in FAMILIES:
        raise BadParameters(f"unknown family {family!r}")
    if family == "tree":
        size = m or n - 1
        return size if size >= 1 else None
    if family in ("path", "star"):
        return n - 1 if n >= 2 else None
    if family == "cycle":
        return math.ceil(n / 2) if n >= 4 else None
    if family == "wheel":
        return 3 if n >= 8 else None
    if family == "complete":
        return 1 if n >= 2 else None
    small, large = sorted((p, q))
    # two colors suffice only while the larger side fits 2^small patterns
    if small >= 2 and large <= 2**small:
        return 2
    return None

