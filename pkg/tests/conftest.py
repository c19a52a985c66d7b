import itertools

import networkx as nx
import pytest

from ngbounds.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    from_edge_list,
    path_graph,
    star_graph,
)
from ngbounds.iso import enumerate_graphs

K1 = empty_graph(1)
K2 = complete_graph(2)
K2_K1 = from_edge_list(3, [(0, 1)])
P3 = path_graph(3)
C4 = cycle_graph(4)
C5 = cycle_graph(5)
TWO_K2 = from_edge_list(4, [(0, 1), (2, 3)])
K13 = star_graph(3)
K4 = complete_graph(4)


def paley(q: int) -> Graph:
    squares = {(x * x) % q for x in range(1, q)}
    return from_edge_list(q, [(i, j) for j in range(q) for i in range(j) if (j - i) % q in squares])


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def naive_gamma_at_least(g: Graph, t: int) -> bool:
    """No vertex set of size < t dominates g, checked with plain loops."""
    for size in range(t):
        for combo in itertools.combinations(range(g.n), size):
            chosen = set(combo)
            if all(v in chosen or any(g.has_edge(v, c) for c in chosen) for v in range(g.n)):
                return False
    return True


def corpus(max_iso: int = 6, max_labeled: int = 5) -> list[Graph]:
    gs = [g for n in range(1, max_labeled + 1) for g in enumerate_graphs(n, up_to_iso=False)]
    gs += [g for n in range(max_labeled + 1, max_iso + 1) for g in enumerate_graphs(n)]
    return gs


def iso_corpus(max_n: int) -> list[Graph]:
    return [g for n in range(1, max_n + 1) for g in enumerate_graphs(n)]


@pytest.fixture(scope="session")
def iso_le6():
    return iso_corpus(6)


@pytest.fixture(scope="session")
def iso_le7():
    return iso_corpus(7)


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance():
    """Record one PASS/FAIL line per acceptance criterion; echoed in the terminal summary."""
    def record(number: int, ok: bool, detail: str) -> bool:
        line = f"acceptance {number}: {'PASS' if ok else 'FAIL'} - {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
