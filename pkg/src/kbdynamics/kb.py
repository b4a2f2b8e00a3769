"""The biclique operator KB, its iterates, and classification by simulation."""

from __future__ import annotations

from dataclasses import dataclass, field

from .bicliques import Aborted, BicliqueFamily, enumerate_bicliques
from .graph import Graph, complete, is_connected, isomorphic, to_graph6
from .outcomes import Behavior

# Iterates up to this order are kept in trajectory records.
KEEP_GRAPH_MAX = 16

# Any graph with this many bicliques diverges; used by the oracle shortcut.
DIVERGENT_BICLIQUE_COUNT = 7

_K3 = complete(3)


@dataclass(frozen=True)
class KBResult:
    graph: Graph
    family: BicliqueFamily


def intersection_graph(f: BicliqueFamily | list[int]) -> Graph:
    """Intersection graph of a family; vertex ``i`` is member ``i``."""
    masks = f.masks() if isinstance(f, BicliqueFamily) else list(f)
    k = len(masks)
    rows = [0] * k
    for i in range(k):
        mi = masks[i]
        r = rows[i]
        for j in range(i + 1, k):
            if mi & masks[j]:
                r |= 1 << j
                rows[j] |= 1 << i
        rows[i] = r
    return Graph(k, tuple(rows))


def kb(g: Graph) -> KBResult:
    family = enumerate_bicliques(g)
    return KBResult(intersection_graph(family), family)


@dataclass(frozen=True)
class StepRecord:
    step: int
    vertices: int
    bicliques: int | None  # biclique count of this iterate, None if not computed
    graph: Graph | None


@dataclass(frozen=True)
class Converged:
    limit: str
    at_step: int


@dataclass(frozen=True)
class BudgetExceeded:
    which: str  # "vertices" or "steps"
    at_step: int


@dataclass(frozen=True)
class ShortcutDiverges:
    """An iterate reached the biclique count that forces divergence."""

    at_step: int
    bicliques: int


@dataclass
class Trajectory:
    steps: list[StepRecord] = field(default_factory=list)
    outcome: Converged | BudgetExceeded | ShortcutDiverges | None = None


def limit_name(g: Graph) -> str:
    if g.n == 1:
        return "K1"
    if g.n == 3 and isomorphic(g, _K3):
        return "K3"
    return to_graph6(g)


def kb_power(g: Graph, k: int, vertex_budget: int) -> Trajectory:
    """Apply KB up to ``k`` times, stopping at a fixpoint or when an iterate
    would have more than ``vertex_budget`` vertices.

    By convention K1 is its own image (it has no bicliques).
    """
    return iterate_kb(g, k, vertex_budget, None)


def iterate_kb(g: Graph, k: int, vertex_budget: int, diverge_at: int | None = None) -> Trajectory:
    """:func:`kb_power` that also stops once an iterate has ``diverge_at`` bicliques."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if vertex_budget < g.n:
        raise ValueError("vertex budget below the input order")
    traj = Trajectory()
    cur = g
    for step in range(k + 1):
        keep = cur if cur.n <= KEEP_GRAPH_MAX else None
        if cur.n == 1:
            traj.steps.append(StepRecord(step, 1, 0, keep))
            if step < k:
                traj.steps.append(StepRecord(step + 1, 1, None, keep))
                traj.outcome = Converged("K1", step)
            else:
                traj.outcome = BudgetExceeded("steps", step)
            return traj
        if step == k:
            traj.steps.append(StepRecord(step, cur.n, None, keep))
            traj.outcome = BudgetExceeded("steps", step)
            return traj
        cap = vertex_budget
        if diverge_at is not None:
            cap = min(cap, diverge_at - 1)
        fam = enumerate_bicliques(cur, abort_total=cap)
        if isinstance(fam, Aborted):
            traj.steps.append(StepRecord(step, cur.n, None, keep))
            if diverge_at is not None and fam.count >= diverge_at:
                traj.outcome = ShortcutDiverges(step, fam.count)
            else:
                traj.outcome = BudgetExceeded("vertices", step + 1)
            return traj
        traj.steps.append(StepRecord(step, cur.n, len(fam), keep))
        nxt = intersection_graph(fam)
        if nxt.n == cur.n and isomorphic(cur, nxt):
            traj.steps.append(StepRecord(step + 1, nxt.n, len(fam), nxt if nxt.n <= KEEP_GRAPH_MAX else None))
            traj.outcome = Converged(limit_name(cur), step)
            return traj
        cur = nxt
    raise AssertionError("unreachable")


def oracle_classify(
    g: Graph,
    max_steps: int = 8,
    vertex_budget: int = 200,
    shortcut: bool = True,
) -> Behavior:
    """Classify ``g`` by iterating KB directly.

    Exceeding ``vertex_budget`` counts as divergence.  With ``shortcut`` on,
    an iterate with seven or more bicliques also counts as divergence.
    """
    if not is_connected(g):
        raise ValueError("behavior is only defined for connected graphs")
    traj = iterate_kb(g, max_steps, max(vertex_budget, g.n),
                    DIVERGENT_BICLIQUE_COUNT if shortcut else None)
    out = traj.outcome
    if isinstance(out, Converged):
        return Behavior.converges(out.limit, out.at_step)
    if isinstance(out, ShortcutDiverges):
        return Behavior.diverges()
    if isinstance(out, BudgetExceeded) and out.which == "vertices":
        return Behavior.diverges()
    return Behavior.indeterminate()
