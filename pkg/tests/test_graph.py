import itertools
import json
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kbdynamics.graph import (
    Graph,
    GraphFormatError,
    are_isomorphic,
    complete,
    cycle,
    delete_vertex,
    false_twin_classes,
    from_edge_list,
    induced_subgraph,
    is_connected,
    is_twin_free,
    isomorphic,
    parse_edge_list,
    parse_graph6,
    path,
    relabel,
    to_edge_list,
    to_graph6,
    twin_reduce,
)
from kbdynamics.kb import kb
from kbdynamics.patterns import gem

from conftest import graphs, labeled, named
from oracles import brute_false_twin_classes, brute_iso

REFERENCE = json.loads((Path(__file__).parent / "data" / "graph6_reference.json").read_text())


def assert_simple(g: Graph):
    for i in range(g.n):
        assert not g.has_edge(i, i)
        assert g.rows[i] >> g.n == 0
        for j in range(g.n):
            assert g.has_edge(i, j) == g.has_edge(j, i)


def test_from_edge_list_p3():
    g = from_edge_list(3, [(0, 1), (1, 2)])
    assert g.edges() == [(0, 1), (1, 2)]
    assert g.degrees() == [1, 2, 1]


def test_from_edge_list_c5_and_duplicates():
    g = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 0)])
    assert g.m == 5
    assert g.degrees() == [2] * 5
    assert g.rows == cycle(5).rows


@pytest.mark.parametrize("n,edges", [(2, [(0, 0)]), (2, [(0, 2)]), (3, [(-1, 1)])])
def test_from_edge_list_rejects(n, edges):
    with pytest.raises(ValueError):
        from_edge_list(n, edges)


def test_from_rows_validates():
    with pytest.raises(ValueError):
        Graph.from_rows([0b10, 0])
    with pytest.raises(ValueError):
        Graph.from_rows([0b1])


@pytest.mark.parametrize("code,expected", [
    ("A_", complete(2)),
    ("Bw", complete(3)),
    ("Bg", path(3)),
    ("Dhc", cycle(5)),
])
def test_graph6_examples(code, expected):
    assert parse_graph6(code).rows == expected.rows
    assert to_graph6(expected) == code


def test_graph6_header_and_whitespace():
    assert parse_graph6(">>graph6<<Bw\n").rows == complete(3).rows


@pytest.mark.parametrize("bad", ["", "B", "Bw_", "B\x7f", "~??", "A " + "_"])
def test_graph6_malformed(bad):
    with pytest.raises(GraphFormatError):
        parse_graph6(bad)


@pytest.mark.parametrize("rec", REFERENCE, ids=[f"n{r['n']}" for r in REFERENCE])
def test_graph6_matches_reference_records(rec):
    g = from_edge_list(rec["n"], rec["edges"])
    assert to_graph6(g) == rec["graph6"]
    assert parse_graph6(rec["graph6"]).rows == g.rows


def test_graph6_against_networkx_live():
    nx = pytest.importorskip("networkx")
    for n in (0, 1, 8, 63, 70):
        for seed in range(3):
            h = nx.gnp_random_graph(n, 0.4, seed=seed)
            code = nx.to_graph6_bytes(h, header=False).decode().strip()
            g = from_edge_list(n, h.edges())
            assert to_graph6(g) == code
            back = nx.from_graph6_bytes(to_graph6(g).encode())
            assert sorted(map(sorted, back.edges())) == sorted(map(list, g.edges()))


@pytest.mark.parametrize("n", range(0, 7))
def test_graph6_round_trip_exhaustive(n):
    for g in labeled(n) if n else [Graph(0, ())]:
        assert parse_graph6(to_graph6(g)).rows == g.rows


@pytest.mark.slow
def test_graph6_round_trip_exhaustive_n7():
    for g in labeled(7):
        assert parse_graph6(to_graph6(g)).rows == g.rows


def test_edge_list_format_round_trip():
    g = named("gem")
    assert parse_edge_list(to_edge_list(g)).rows == g.rows
    with pytest.raises(GraphFormatError) as err:
        parse_edge_list("3 2\n0 1\n1 x\n")
    assert err.value.line == 3
    with pytest.raises(GraphFormatError):
        parse_edge_list("3 2\n0 1\n")


def test_is_connected():
    assert is_connected(cycle(5))
    assert not is_connected(from_edge_list(4, [(0, 1), (2, 3)]))
    assert is_connected(complete(1))
    with pytest.raises(ValueError):
        is_connected(Graph(0, ()))


@pytest.mark.parametrize("name,expected", [
    ("K13", [[0], [1, 2, 3]]),
    ("C5", [[0], [1], [2], [3], [4]]),
    ("C4", [[0, 2], [1, 3]]),
])
def test_false_twin_classes(name, expected):
    assert false_twin_classes(named(name)) == expected


@pytest.mark.parametrize("name,reduced", [("K13", "K2"), ("K33", "K2"), ("gem", "gem")])
def test_twin_reduce_examples(name, reduced):
    tr = twin_reduce(named(name))
    assert tr.reduced.rows == named(reduced).rows
    assert len(tr.classes) == tr.reduced.n


def test_gem_has_no_twins_by_pairwise_check():
    g = gem()
    for u, v in itertools.combinations(range(5), 2):
        assert g.rows[u] != g.rows[v]


def test_twin_reduce_large_graph():
    g = from_edge_list(200, [(0, v) for v in range(1, 200)] + [(1, 2)])
    tr = twin_reduce(g)
    assert tr.representatives == (0, 1, 2, 3)
    assert tr.reduced.edges() == [(0, 1), (0, 2), (0, 3), (1, 2)]


def test_induced_subgraph():
    assert induced_subgraph(cycle(5), [0, 1, 2]).rows == path(3).rows
    assert induced_subgraph(complete(5), [4, 1, 3]).rows == complete(3).rows
    g = named("rocket")
    assert induced_subgraph(g, range(g.n)).rows == g.rows
    with pytest.raises(ValueError):
        induced_subgraph(g, [0, 5])


def test_are_isomorphic_examples():
    c5 = cycle(5)
    for perm in itertools.permutations(range(5)):
        assert are_isomorphic(c5, relabel(c5, perm))
    assert not are_isomorphic(path(4), named("K13"))
    assert are_isomorphic(kb(complete(4)).graph, named("octahedron"))


def test_are_isomorphic_tier_limit():
    with pytest.raises(ValueError, match="iso tier exceeded"):
        are_isomorphic(cycle(11), cycle(11))


def test_isomorphic_agrees_with_permutation_scan():
    reps = list(labeled(4))
    for g, h in itertools.combinations(reps[::3], 2):
        assert isomorphic(g, h) == brute_iso(g, h)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=7), st.randoms())
def test_isomorphic_relabel_property(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert isomorphic(g, relabel(g, perm))


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=6), graphs(max_n=6))
def test_isomorphic_matches_brute(g, h):
    if g.n == h.n:
        assert isomorphic(g, h) == brute_iso(g, h)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=9), st.data())
def test_constructors_keep_graph_simple(g, data):
    assert_simple(g)
    sub = data.draw(st.lists(st.sampled_from(range(g.n)), unique=True)) if g.n else []
    assert_simple(induced_subgraph(g, sub))
    assert_simple(twin_reduce(g).reduced)
    assert_simple(parse_graph6(to_graph6(g)))


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=9))
def test_twin_reduce_idempotent(g):
    tr = twin_reduce(g)
    assert is_twin_free(tr.reduced)
    again = twin_reduce(tr.reduced)
    assert all(len(c) == 1 for c in again.classes)
    assert again.reduced.rows == tr.reduced.rows
    assert tr.representatives == tuple(c[0] for c in tr.classes)


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=7))
def test_twin_classes_match_swap_automorphism(g):
    classes = false_twin_classes(g)
    assert classes == brute_false_twin_classes(g)
    block = {v: i for i, c in enumerate(classes) for v in c}
    for u, v in itertools.combinations(range(g.n), 2):
        perm = list(range(g.n))
        perm[u], perm[v] = v, u
        swap_is_aut = relabel(g, perm).rows == g.rows
        # adjacent vertices can be swapped by an automorphism yet are never false twins
        if not g.has_edge(u, v):
            assert (block[u] == block[v]) == swap_is_aut
        else:
            assert block[u] != block[v]


def test_delete_vertex():
    g = delete_vertex(cycle(5), 2)
    assert g.edges() == [(0, 1), (0, 3), (2, 3)]
    assert isomorphic(g, path(4))
