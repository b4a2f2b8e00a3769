"""Enumeration of bicliques: maximal induced complete bipartite subgraphs.

The search runs Bron-Kerbosch with pivoting on a doubled vertex set.  Copy
``v`` (side A) and copy ``v + n`` (side B) of each vertex are joined so that a
clique in the doubled graph is exactly a pair of independent sets with every
cross edge present.  Maximal cliques with both sides non-empty are the
bicliques.  Each biclique is produced once, from the search rooted at its
smallest vertex placed on side A.
"""

from __future__ import annotations

import contextlib
from dataclasses import dataclass
from typing import Callable, Iterator

from .graph import Graph, bits, mask_of

_observers: list[Callable[[Graph], None]] = []


@contextlib.contextmanager
def track_enumerations() -> Iterator[list[int]]:
    """Record the order of every graph handed to :func:`enumerate_bicliques`."""
    seen: list[int] = []
    hook = lambda g: seen.append(g.n)  # noqa: E731
    _observers.append(hook)
    try:
        yield seen
    finally:
        _observers.remove(hook)


@dataclass(frozen=True, order=False)
class Biclique:
    side_a: int
    side_b: int

    @property
    def mask(self) -> int:
        return self.side_a | self.side_b

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(bits(self.mask))

    @property
    def a(self) -> tuple[int, ...]:
        return tuple(bits(self.side_a))

    @property
    def b(self) -> tuple[int, ...]:
        return tuple(bits(self.side_b))

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: int) -> bool:
        return bool(self.mask >> v & 1)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self), self.vertices)

    def __str__(self) -> str:
        return f"{' '.join(map(str, self.a))} | {' '.join(map(str, self.b))}"


def make_biclique(a, b) -> Biclique:
    """Canonical biclique from two vertex collections (side with the minimum first)."""
    ma, mb = mask_of(a), mask_of(b)
    if (mb & -mb) < (ma & -ma):
        ma, mb = mb, ma
    return Biclique(ma, mb)


@dataclass(frozen=True)
class BicliqueFamily:
    items: tuple[Biclique, ...]
    owner: Graph

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def __getitem__(self, i: int) -> Biclique:
        return self.items[i]

    def masks(self) -> list[int]:
        return [b.mask for b in self.items]


@dataclass(frozen=True)
class Aborted:
    """Enumeration stopped because a threshold was crossed."""

    reason: str  # "total" or "per_vertex"
    count: int
    vertex: int | None = None

    def __bool__(self) -> bool:
        return False


def is_induced_biclique(g: Graph, a, b) -> bool:
    """True iff ``(a, b)`` induce a complete bipartite graph that no vertex extends."""
    ma, mb = mask_of(a), mask_of(b)
    if not ma or not mb or ma & mb:
        return False
    if (ma | mb) & ~g.all_mask:
        return False
    rows = g.rows
    for v in bits(ma):
        if rows[v] & ma or rows[v] & mb != mb:
            return False
    for v in bits(mb):
        if rows[v] & mb:
            return False
    s = ma | mb
    for v in bits(g.all_mask & ~s):
        hit = rows[v] & s
        if hit == ma or hit == mb:
            return False
    return True


def enumerate_bicliques(
    g: Graph,
    abort_total: int | None = None,
    abort_per_vertex: int | None = None,
) -> BicliqueFamily | Aborted:
    """All bicliques of ``g`` sorted by (size, vertex tuple).

    Returns :class:`Aborted` as soon as more than ``abort_total`` bicliques
    have been found, or some vertex lies in more than ``abort_per_vertex``.
    """
    if g.n < 1:
        raise ValueError("biclique enumeration needs at least one vertex")
    for hook in _observers:
        hook(g)
    n = g.n
    rows = g.rows
    full = g.all_mask
    high = full << n
    # adjacency in the doubled graph
    dbl = [0] * (2 * n)
    for v in range(n):
        r = rows[v]
        non = full & ~r & ~(1 << v)
        dbl[v] = non | (r << n)
        dbl[v + n] = r | (non << n)

    found: list[Biclique] = []
    count = [0] * n
    cap_total = abort_total
    cap_vertex = abort_per_vertex

    class _Stop(Exception):
        pass

    stop: list[Aborted] = []

    def report(r: int) -> None:
        ma = r & full
        mb = r >> n
        found.append(Biclique(ma, mb))
        if cap_vertex is not None:
            for v in bits(ma | mb):
                count[v] += 1
                if count[v] > cap_vertex:
                    stop.append(Aborted("per_vertex", count[v], v))
                    raise _Stop
        if cap_total is not None and len(found) > cap_total:
            stop.append(Aborted("total", len(found)))
            raise _Stop

    def expand(r: int, p: int, x: int) -> None:
        if not p:
            if not x and r & high:
                report(r)
            return
        if not (r | p) & high:
            return
        px = p | x
        best = -1
        pivot_nbrs = 0
        for u in bits(px):
            c = (p & dbl[u]).bit_count()
            if c > best:
                best, pivot_nbrs = c, dbl[u]
        for v in bits(p & ~pivot_nbrs):
            nv = dbl[v]
            expand(r | (1 << v), p & nv, x & nv)
            bit = 1 << v
            p &= ~bit
            x |= bit

    try:
        for v in range(n):
            above = full & ~((2 << v) - 1)
            below = (1 << v) - 1
            nv = dbl[v]
            expand(1 << v, nv & (above | above << n), nv & (below | below << n))
    except _Stop:
        return stop[0]

    found.sort(key=Biclique.sort_key)
    return BicliqueFamily(tuple(found), g)


def per_vertex_incidence(f: BicliqueFamily) -> list[int]:
    """Number of bicliques containing each vertex of the owner graph."""
    counts = [0] * f.owner.n
    for b in f.items:
        for v in bits(b.mask):
            counts[v] += 1
    return counts
