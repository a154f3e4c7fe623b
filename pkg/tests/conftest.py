import itertools

import pytest

from rainbowlruc.graph import Graph


def brute_rainbow_pairs(g: Graph, colors):
    """Set of unordered index pairs joined by some rainbow simple path.

    Enumerates vertex sequences directly; independent of the state search.
    """
    ok = set()
    for length in range(1, g.n):
        for seq in itertools.permutations(range(g.n), length + 1):
            if (seq[0], seq[-1]) in ok or seq[0] > seq[-1]:
                continue
            steps = list(zip(seq, seq[1:]))
            if not all(g.has_edge(a, b) for a, b in steps):
                continue
            used = [colors[g.edge_id(a, b)] for a, b in steps]
            if len(set(used)) == len(used):
                ok.add((seq[0], seq[-1]))
    return ok


def brute_is_rainbow(g: Graph, colors) -> bool:
    return len(brute_rainbow_pairs(g, colors)) == g.n * (g.n - 1) // 2


@pytest.fixture
def path3():
    return Graph([("a", "b"), ("b", "c")])


@pytest.fixture
def c4():
    return Graph([(1, 2), (2, 3), (3, 4), (4, 1)])


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion(request):
    """Record a one-line pass/fail verdict for an acceptance criterion."""

    def record(label: str, ok: bool, detail: str = ""):
        line = f"[{'PASS' if ok else 'FAIL'}] {label}" + (f" ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
