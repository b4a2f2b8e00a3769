"""Detection of the five critical order-5 induced patterns and of k-cliques."""

from __future__ import annotations

import enum
import itertools
from functools import cache

from .graph import Graph, bits, complete, cycle, from_edge_list


class Pattern(enum.Enum):
    K5 = "K5"
    C5 = "C5"
    GEM = "gem"
    ROCKET = "rocket"
    BUTTERFLY = "butterfly"

    @property
    def model(self) -> Graph:
        return _MODELS[self]


def gem() -> Graph:
    """P4 0-1-2-3 plus vertex 4 adjacent to all of it."""
    return from_edge_list(5, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)])


def rocket() -> Graph:
    """K4 on 0..3 plus vertex 4 adjacent to 0 and 1."""
    k4 = [(i, j) for i in range(4) for j in range(i + 1, 4)]
    return from_edge_list(5, k4 + [(0, 4), (1, 4)])


def butterfly() -> Graph:
    """Triangles 0-1-2 and 0-3-4 sharing vertex 0."""
    return from_edge_list(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


_MODELS = {
    Pattern.K5: complete(5),
    Pattern.C5: cycle(5),
    Pattern.GEM: gem(),
    Pattern.ROCKET: rocket(),
    Pattern.BUTTERFLY: butterfly(),
}

_PAIRS = [(i, j) for j in range(1, 5) for i in range(j)]


def _code(rows, vs) -> int:
    c = 0
    for k, (i, j) in enumerate(_PAIRS):
        if rows[vs[i]] >> vs[j] & 1:
            c |= 1 << k
    return c


@cache
def _codes(p: Pattern) -> frozenset[int]:
    rows = p.model.rows
    return frozenset(_code(rows, perm) for perm in itertools.permutations(range(5)))


@cache
def _degree_profile(p: Pattern) -> tuple[int, tuple[int, ...]]:
    d = sorted(p.model.degrees())
    return sum(d) // 2, tuple(d)


def contains_induced(g: Graph, p: Pattern) -> bool:
    """True iff some 5 vertices of ``g`` induce a copy of ``p``."""
    if p is Pattern.K5:
        return has_clique_of_size(g, 5)
    return find_induced(g, p) is not None


def find_induced(g: Graph, p: Pattern) -> tuple[int, ...] | None:
    """First 5-subset (lexicographic) inducing ``p``, or None."""
    m, degs = _degree_profile(p)
    codes = _codes(p)
    rows = g.rows
    mind = degs[0]
    eligible = [v for v in range(g.n) if rows[v].bit_count() >= mind]
    for vs in itertools.combinations(eligible, 5):
        s = 0
        for v in vs:
            s |= 1 << v
        d = sorted((rows[v] & s).bit_count() for v in vs)
        if tuple(d) != degs:
            continue
        if _code(rows, vs) in codes:
            return vs
    return None


def has_clique_of_size(g: Graph, k: int) -> bool:
    """Exact test for a k-clique: branch and bound with a greedy colouring bound."""
    if k < 1:
        raise ValueError("clique size must be positive")
    if k > g.n:
        return False
    if k == 1:
        return True
    rows = g.rows
    # vertices of degree < k-1 can never be in a k-clique
    cand = 0
    for v in range(g.n):
        if rows[v].bit_count() >= k - 1:
            cand |= 1 << v
    return _search(rows, 0, cand, k)


def max_clique_size(g: Graph) -> int:
    if g.n == 0:
        return 0
    k = 1
    while has_clique_of_size(g, k + 1):
        k += 1
    return k


def _colour_bound(rows, cand: int) -> int:
    colours = 0
    left = cand
    while left:
        colours += 1
        q = left
        while q:
            v = (q & -q).bit_length() - 1
            q &= ~rows[v] & ~(1 << v)
            left &= ~(1 << v)
    return colours


def _search(rows, size: int, cand: int, k: int) -> bool:
    if size >= k:
        return True
    if size + cand.bit_count() < k:
        return False
    if size + _colour_bound(rows, cand) < k:
        return False
    for v in bits(cand):
        if _search(rows, size + 1, cand & rows[v], k):
            return True
        cand &= ~(1 << v)
        if size + cand.bit_count() < k:
            return False
    return False
