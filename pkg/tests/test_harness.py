import pytest

from kbdynamics.canon import code_of, graph_from_code, orbit_table
from kbdynamics.graph import cycle, is_connected, isomorphic, relabel, to_graph6
from kbdynamics.harness import RunReport, enumerate_labeled_graphs, exhaustive_verify, verify_graph
from kbdynamics.outcomes import Behavior
from kbdynamics.patterns import butterfly, gem


@pytest.mark.parametrize("n,total,connected", [(1, 1, 1), (2, 2, 1), (3, 8, 4), (4, 64, 38)])
def test_enumerate_labeled_graphs_counts(n, total, connected):
    gs = list(enumerate_labeled_graphs(n))
    assert len(gs) == total
    assert len({g.rows for g in gs}) == total
    assert sum(is_connected(g) for g in gs) == connected


def test_enumerate_labeled_graphs_limits():
    with pytest.raises(ValueError):
        next(enumerate_labeled_graphs(8))
    with pytest.raises(ValueError):
        next(enumerate_labeled_graphs(0))


def test_code_round_trip():
    for code in range(1 << 10):
        assert code_of(graph_from_code(5, code)) == code


def test_orbit_table_respects_isomorphism():
    table = orbit_table(5)
    g = gem()
    perm = [3, 0, 4, 1, 2]
    assert table[code_of(g)] == table[code_of(relabel(g, perm))]
    assert table[code_of(g)] != table[code_of(butterfly())]
    rep = graph_from_code(5, int(table[code_of(g)]))
    assert isomorphic(rep, g)


def test_verify_three():
    r = exhaustive_verify(3)
    assert r.ok and r.scanned == 6
    assert r.per_n[3]["connected"] == 4
    assert r.outcomes == {"converges": 6}


def _canon_g6(g):
    return to_graph6(graph_from_code(g.n, int(orbit_table(g.n)[code_of(g)])))


def test_verify_five_lists_gem_and_butterfly_divergent():
    r = exhaustive_verify(5)
    assert r.ok, r.violations[:3]
    assert r.classes[5][_canon_g6(gem())] == "diverges"
    assert r.classes[5][_canon_g6(butterfly())] == "diverges"
    assert r.classes[5][_canon_g6(cycle(5))] == "diverges"
    assert r.per_n[5]["classes"] == 21
    assert r.per_n[4].get("diverges", 0) == 0


def test_chunking_and_jobs_do_not_change_report():
    a = exhaustive_verify(5).to_dict(timings=False)
    b = exhaustive_verify(5, chunk=97).to_dict(timings=False)
    c = exhaustive_verify(5, jobs=2, chunk=256).to_dict(timings=False)
    assert a == b == c


def test_violation_is_recorded_not_raised():
    report = RunReport()
    g = cycle(5)
    # a wrong cached oracle verdict must show up as data
    verify_graph(g, 1, Behavior.converges("K1", 1), report)
    props = {v["property"] for v in report.violations}
    assert "decider_agreement" in props
    assert not report.ok


def test_report_merge_is_commutative():
    parts = [exhaustive_verify(n) for n in (3, 4)]
    ab = RunReport().merge(parts[0]).merge(parts[1]).finish().to_dict(timings=False)
    ba = RunReport().merge(parts[1]).merge(parts[0]).finish().to_dict(timings=False)
    assert ab == ba
