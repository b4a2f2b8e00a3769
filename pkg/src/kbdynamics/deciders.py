"""Deciding convergence or divergence of a graph under iterated KB.

``decide_quartic`` follows the characterisation through Tw(KB(G)); it gives up
on enumeration the moment a vertex lies in five bicliques.
``decide_linear`` first collapses false twins: a twin-free graph on thirteen or
more vertices always diverges, and anything smaller is settled by the quartic
route in constant time.
"""

from __future__ import annotations

from .bicliques import Aborted, enumerate_bicliques
from .graph import Graph, is_complete, is_connected, isomorphic, twin_reduce
from .kb import Converged, intersection_graph, kb_power, limit_name, oracle_classify
from .outcomes import Behavior

TWIN_FREE_DIVERGENCE_ORDER = 13
MAX_BICLIQUES_PER_VERTEX = 4
METHODS = ("linear", "quartic", "oracle")


class DisconnectedGraphError(ValueError):
    pass


def _require_connected(g: Graph) -> None:
    if g.n == 0 or not is_connected(g):
        raise DisconnectedGraphError("behavior is only defined for connected graphs")


def decide_quartic(g: Graph) -> Behavior:
    _require_connected(g)
    if g.n == 1:
        return Behavior.converges("K1", 0)
    fam = enumerate_bicliques(g, abort_per_vertex=MAX_BICLIQUES_PER_VERTEX)
    if isinstance(fam, Aborted):
        # five bicliques through one vertex form a K5 in KB(G)
        return Behavior.diverges()
    kbg = intersection_graph(fam)
    tw = twin_reduce(kbg).reduced
    if tw.n > 4:
        return Behavior.diverges()
    if not is_complete(tw):
        raise AssertionError(f"Tw(KB(G)) on {tw.n} vertices is not complete")
    return _converging_tail(g, kbg)


def _converging_tail(g: Graph, kbg: Graph) -> Behavior:
    if g.n == kbg.n and isomorphic(g, kbg):
        return Behavior.converges(limit_name(g), 0)
    # every iterate of a convergent graph has at most six vertices
    out = kb_power(kbg, 4, max(kbg.n, 64)).outcome
    if not isinstance(out, Converged):
        raise AssertionError(f"KB(G) did not stabilise: {out}")
    return Behavior.converges(out.limit, out.at_step + 1)


def decide_linear(g: Graph) -> Behavior:
    _require_connected(g)
    h = twin_reduce(g).reduced
    if h.n >= TWIN_FREE_DIVERGENCE_ORDER:
        return Behavior.diverges()
    b = decide_quartic(h)
    # KB(G) = KB(H), so only a step-0 fixpoint can differ between G and H
    if b.converged and b.steps == 0 and h.n != g.n:
        return Behavior.converges(b.limit, 1)
    return b


def decide(g: Graph, method: str = "linear") -> Behavior:
    if method == "linear":
        return decide_linear(g)
    if method == "quartic":
        return decide_quartic(g)
    if method == "oracle":
        _require_connected(g)
        return oracle_classify(g)
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
