import itertools

import numpy as np
import pytest
from hypothesis import strategies as st

from kbdynamics.canon import graph_from_code, orbit_table
from kbdynamics.graph import Graph, from_edge_list, is_connected

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def labeled(n):
    for code in range(1 << (n * (n - 1) // 2)):
        yield graph_from_code(n, code)


def connected_labeled(n):
    return (g for g in labeled(n) if is_connected(g))


def class_reps(n):
    """One labeled graph per isomorphism class on n vertices."""
    return [graph_from_code(n, int(c)) for c in np.unique(orbit_table(n))]


def connected_class_reps(n):
    return [g for g in class_reps(n) if is_connected(g)]


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def connected_graphs(draw, min_n=1, max_n=8):
    # random spanning tree plus extra edges
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    pairs = list(itertools.combinations(range(n), 2))
    extra = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges |= {e for e, keep in zip(pairs, extra) if keep}
    perm = draw(st.permutations(range(n)))
    return from_edge_list(n, [(perm[u], perm[v]) for u, v in edges])


@pytest.fixture(scope="session")
def reps7():
    return connected_class_reps(7)


def named(name: str) -> Graph:
    from kbdynamics import graph as G
    from kbdynamics import patterns as P
    table = {
        "K1": lambda: G.complete(1),
        "K2": lambda: G.complete(2),
        "K3": lambda: G.complete(3),
        "K4": lambda: G.complete(4),
        "K5": lambda: G.complete(5),
        "P3": lambda: G.path(3),
        "P4": lambda: G.path(4),
        "C4": lambda: G.cycle(4),
        "C5": lambda: G.cycle(5),
        "C7": lambda: G.cycle(7),
        "gem": P.gem,
        "rocket": P.rocket,
        "butterfly": P.butterfly,
        "K13": lambda: G.complete_bipartite(1, 3),
        "K33": lambda: G.complete_bipartite(3, 3),
        "octahedron": lambda: G.from_edge_list(
            6, [(i, j) for i in range(6) for j in range(i + 1, 6) if j - i != 3]),
    }
    return table[name]()
