"""Exhaustive verification over every labeled connected graph up to seven vertices."""

from __future__ import annotations

import math
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .bicliques import enumerate_bicliques, per_vertex_incidence
from .canon import MAX_TABLE_ORDER, graph_from_code, orbit_table
from .deciders import decide_linear, decide_quartic
from .graph import (
    Graph,
    delete_vertex,
    from_edge_list,
    false_twin_classes,
    is_bipartite,
    is_connected,
    is_twin_free,
    isomorphic,
    to_graph6,
)
from .kb import intersection_graph, kb, oracle_classify
from .outcomes import Behavior
from .patterns import contains_induced, Pattern

SCHEMA_VERSION = 1
TWIN_INVARIANCE_MAX_N = 6
# every graph whose code is divisible by this re-runs the oracle on its own labeling
ORACLE_SPOT_CHECK = 97

PROPERTIES = (
    "decider_agreement",
    "seven_bicliques_diverge",
    "limit_within_three_steps",
    "twin_invariance",
    "twin_free_biclique_bound",
    "sumner_vertex",
    "five_incidence_k5",
    "no_bipartite_kb",
    "oracle_cache",
)


def random_twin_free(n: int, rng: random.Random, max_tries: int = 10_000) -> Graph:
    """A random connected false-twin-free graph on ``n`` vertices.

    Draws a random spanning tree plus G(n, p) extra edges with p uniform in
    [0.1, 0.9], rejecting samples that have false twins.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    for _ in range(max_tries):
        p = rng.uniform(0.1, 0.9)
        edges = {(rng.randrange(v), v) for v in range(1, n)}
        edges |= {(u, v) for v in range(n) for u in range(v) if rng.random() < p}
        g = from_edge_list(n, edges)
        if is_twin_free(g):
            return g
    raise RuntimeError(f"no twin-free sample on {n} vertices after {max_tries} tries")


def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices, in upper-triangle bitmask order."""
    if not 1 <= n <= MAX_TABLE_ORDER:
        raise ValueError(f"labeled enumeration is limited to 1 <= n <= {MAX_TABLE_ORDER}")
    for code in range(1 << (n * (n - 1) // 2)):
        yield graph_from_code(n, code)


@dataclass
class GraphRecord:
    input_id: str
    method: str
    behavior: Behavior | None
    bicliques: int | None
    seconds: float
    error: str | None = None

    def to_dict(self, timings: bool = True) -> dict:
        d = {
            "input": self.input_id,
            "method": self.method,
            "behavior": self.behavior.to_dict() if self.behavior else None,
            "bicliques": self.bicliques,
        }
        if self.error:
            d["error"] = self.error
        if timings:
            d["seconds"] = round(self.seconds, 6)
        return d


@dataclass
class RunReport:
    records: list[GraphRecord] = field(default_factory=list)
    scanned: int = 0
    outcomes: Counter = field(default_factory=Counter)
    checks: Counter = field(default_factory=Counter)
    violations: list[dict] = field(default_factory=list)
    per_n: dict[int, Counter] = field(default_factory=dict)
    classes: dict[int, dict[str, str]] = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def divergent_fraction(self) -> float:
        return self.outcomes["diverges"] / self.scanned if self.scanned else 0.0

    def merge(self, other: "RunReport") -> "RunReport":
        self.records.extend(other.records)
        self.scanned += other.scanned
        self.outcomes.update(other.outcomes)
        self.checks.update(other.checks)
        self.violations.extend(other.violations)
        for n, c in other.per_n.items():
            self.per_n.setdefault(n, Counter()).update(c)
        for n, cl in other.classes.items():
            self.classes.setdefault(n, {}).update(cl)
        self.seconds += other.seconds
        return self

    def finish(self) -> "RunReport":
        self.violations.sort(key=lambda v: (v["n"], v["code"], v["property"]))
        self.classes = {n: dict(sorted(cl.items())) for n, cl in sorted(self.classes.items())}
        return self

    def to_dict(self, timings: bool = True) -> dict:
        d = {
            "schema": SCHEMA_VERSION,
            "scanned": self.scanned,
            "outcomes": dict(sorted(self.outcomes.items())),
            "divergent_fraction": round(self.divergent_fraction, 6),
            "checks": {p: self.checks[p] for p in PROPERTIES if p in self.checks},
            "violations": self.violations,
            "per_n": {str(n): dict(sorted(c.items())) for n, c in sorted(self.per_n.items())},
            "classes": {str(n): cl for n, cl in self.classes.items()},
        }
        if self.records:
            d["records"] = [r.to_dict(timings) for r in self.records]
        if timings:
            d["seconds"] = round(self.seconds, 3)
        return d


class _Checker:
    def __init__(self, report: RunReport, n: int, code: int, g: Graph):
        self.report, self.n, self.code, self.g = report, n, code, g

    def check(self, prop: str, ok: bool, detail: str = "") -> None:
        self.report.checks[prop] += 1
        if not ok:
            self.report.violations.append({
                "property": prop,
                "n": self.n,
                "code": self.code,
                "graph6": to_graph6(self.g),
                "detail": detail,
            })


def verify_graph(g: Graph, code: int, oracle: Behavior | None, report: RunReport) -> Behavior:
    """Run the property battery on one connected labeled graph.

    ``oracle`` is the cached oracle verdict for the graph's isomorphism class,
    or None to compute it on ``g`` itself.  Returns the oracle verdict used.
    """
    n = g.n
    chk = _Checker(report, n, code, g)
    fam = enumerate_bicliques(g)
    nb = len(fam)
    kbg = intersection_graph(fam)
    lin = decide_linear(g)
    qua = decide_quartic(g)
    if oracle is None or code % ORACLE_SPOT_CHECK == 0:
        direct = oracle_classify(g, shortcut=False)
        if oracle is not None:
            chk.check("oracle_cache", direct == oracle, f"cached {oracle}, direct {direct}")
        oracle = direct
    chk.check("decider_agreement", lin == qua == oracle,
              f"linear={lin} quartic={qua} oracle={oracle}")
    report.outcomes[lin.kind.value] += 1
    counts = report.per_n.setdefault(n, Counter())
    counts["connected"] += 1
    counts[lin.kind.value] += 1

    if nb >= 7:
        chk.check("seven_bicliques_diverge",
                  all(not b.converged for b in (lin, qua, oracle)),
                  f"{nb} bicliques but linear={lin} quartic={qua} oracle={oracle}")
    for b in (lin, qua, oracle):
        if b.converged:
            chk.check("limit_within_three_steps", b.limit in ("K1", "K3") and b.steps <= 3, str(b))
            break

    twin_free = is_twin_free(g)
    if twin_free:
        counts["twin_free"] += 1
    if n <= TWIN_INVARIANCE_MAX_N:
        for cls in false_twin_classes(g):
            if len(cls) < 2:
                continue
            for v in cls:
                sub = kb(delete_vertex(g, v)).graph
                chk.check("twin_invariance", isomorphic(sub, kbg), f"removing false twin {v}")
    if twin_free and n >= 2:
        need = math.ceil(n / 2)
        chk.check("twin_free_biclique_bound", nb >= need, f"{nb} bicliques < {need}")
        chk.check("sumner_vertex",
                  any(is_twin_free(delete_vertex(g, v)) for v in range(n)),
                  "every vertex deletion creates false twins")
    inc = per_vertex_incidence(fam)
    if inc and max(inc) >= 5:
        chk.check("five_incidence_k5", contains_induced(kbg, Pattern.K5),
                  f"vertex {inc.index(max(inc))} in {max(inc)} bicliques")
    if kbg.n > 2:
        chk.check("no_bipartite_kb", not is_bipartite(kbg), f"KB(G) bipartite on {kbg.n} vertices")
    return oracle


def _verify_chunk(n: int, lo: int, hi: int) -> RunReport:
    t0 = time.perf_counter()
    report = RunReport()
    table = orbit_table(n)
    cache: dict[int, Behavior] = {}
    classes = report.classes.setdefault(n, {})
    for code in range(lo, hi):
        g = graph_from_code(n, code)
        if not is_connected(g):
            continue
        report.scanned += 1
        rep = int(table[code])
        if rep == code:
            cache[rep] = verify_graph(g, code, None, report)
            classes[to_graph6(g)] = str(cache[rep])
            continue
        if rep not in cache:
            # the class representative sits in another chunk
            cache[rep] = oracle_classify(graph_from_code(n, rep), shortcut=False)
        verify_graph(g, code, cache[rep], report)
    report.seconds = time.perf_counter() - t0
    return report


def exhaustive_verify(max_n: int, jobs: int = 1, chunk: int = 1 << 16) -> RunReport:
    """Check the full property battery on every connected labeled graph with
    at most ``max_n`` vertices.  Violations are reported, never raised."""
    if not 1 <= max_n <= MAX_TABLE_ORDER:
        raise ValueError(f"max_n must be in 1..{MAX_TABLE_ORDER}")
    tasks = []
    for n in range(1, max_n + 1):
        size = 1 << (n * (n - 1) // 2)
        tasks.extend((n, lo, min(lo + chunk, size)) for lo in range(0, size, chunk))
    report = RunReport()
    t0 = time.perf_counter()
    if jobs <= 1:
        for task in tasks:
            report.merge(_verify_chunk(*task))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_verify_chunk, *zip(*tasks)):
                report.merge(part)
    for n, cl in report.classes.items():
        report.per_n[n]["classes"] = len(cl)
    report.seconds = time.perf_counter() - t0
    return report.finish()
