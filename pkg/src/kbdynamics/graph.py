"""Undirected simple graphs with bit-packed adjacency rows.

Row ``i`` of a :class:`Graph` is a Python ``int`` whose bit ``j`` is set iff
``ij`` is an edge.  Python integers are arbitrary precision, so the same
representation serves the small graphs the deciders enumerate on (one machine
word per row) and the large inputs the linear decider only scans.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

ISO_TIER_LIMIT = 10


class GraphFormatError(ValueError):
    """Malformed graph6 or edge-list input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]
    _edges: int | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0 or len(self.rows) != self.n:
            raise ValueError("row count must equal n")

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        """Build from adjacency rows, validating symmetry and irreflexivity."""
        rows = tuple(rows)
        n = len(rows)
        full = (1 << n) - 1
        for i, r in enumerate(rows):
            if r & ~full:
                raise ValueError(f"row {i} references a vertex >= {n}")
            if r >> i & 1:
                raise ValueError(f"loop at vertex {i}")
            for j in bits(r):
                if not rows[j] >> i & 1:
                    raise ValueError(f"asymmetric adjacency {i}-{j}")
        return cls(n, rows)

    def __len__(self) -> int:
        return self.n

    @property
    def m(self) -> int:
        if self._edges is None:
            object.__setattr__(self, "_edges", sum(r.bit_count() for r in self.rows) // 2)
        return self._edges

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, r in enumerate(self.rows) for j in bits(r >> (i + 1) << (i + 1))]

    def __str__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Simple graph on ``n`` vertices with the given edges (duplicates collapse)."""
    if n < 0:
        raise ValueError("negative vertex count")
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"loop edge ({u}, {u})")
        adj[u].append(v)
        adj[v].append(u)
    return Graph(n, tuple(_row_from_list(nbrs, n) for nbrs in adj))


def _row_from_list(nbrs: list[int], n: int) -> int:
    if len(nbrs) < 64:
        r = 0
        for v in nbrs:
            r |= 1 << v
        return r
    buf = bytearray((n + 7) // 8)
    for v in nbrs:
        buf[v >> 3] |= 1 << (v & 7)
    return int.from_bytes(buf, "little")


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << i) for i in range(n)))


def path(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


# ---------------------------------------------------------------------------
# graph6

_HEADER = ">>graph6<<"


def _size_field(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in range(30, -1, -6))


def to_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 record (no header, no newline)."""
    out = [_size_field(g.n)]
    acc = 0
    nbits = 0
    rows = g.rows
    for j in range(1, g.n):
        rj = rows[j]
        for i in range(j):
            acc = (acc << 1) | (rj >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 record; an optional ``>>graph6<<`` header is skipped."""
    s = line.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise GraphFormatError("empty graph6 record")
    vals = []
    for ch in s:
        c = ord(ch)
        if not 63 <= c <= 126:
            raise GraphFormatError(f"character {ch!r} outside graph6 range")
        vals.append(c - 63)
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise GraphFormatError("truncated size field")
        n, pos = 0, 8
        for v in vals[2:8]:
            n = (n << 6) | v
    else:
        if len(vals) < 4:
            raise GraphFormatError("truncated size field")
        n, pos = 0, 4
        for v in vals[1:4]:
            n = (n << 6) | v
    payload = vals[pos:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(payload) != need:
        kind = "truncated" if len(payload) < need else "oversized"
        raise GraphFormatError(f"{kind} bit payload: {len(payload)} chars, expected {need}")
    adj: list[list[int]] = [[] for _ in range(n)]
    k = 0
    for j in range(1, n):
        for i in range(j):
            if payload[k // 6] >> (5 - k % 6) & 1:
                adj[i].append(j)
                adj[j].append(i)
            k += 1
    return Graph(n, tuple(_row_from_list(a, n) for a in adj))


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v`` (0-based)."""
    lines = [(i + 1, ln.split()) for i, ln in enumerate(text.splitlines()) if ln.strip()]
    if not lines:
        raise GraphFormatError("empty edge list", 1)
    lineno, head = lines[0]
    try:
        n, m = (int(x) for x in head)
    except ValueError:
        raise GraphFormatError("header must be 'n m'", lineno) from None
    if len(lines) - 1 != m:
        raise GraphFormatError(f"expected {m} edge lines, found {len(lines) - 1}", lineno)
    edges = []
    for lineno, parts in lines[1:]:
        try:
            u, v = (int(x) for x in parts)
        except ValueError:
            raise GraphFormatError("edge line must be 'u v'", lineno) from None
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise GraphFormatError(f"invalid edge ({u}, {v})", lineno)
        edges.append((u, v))
    return from_edge_list(n, edges)


def to_edge_list(g: Graph) -> str:
    es = g.edges()
    return "\n".join([f"{g.n} {len(es)}"] + [f"{u} {v}" for u, v in es]) + "\n"


# ---------------------------------------------------------------------------
# structure


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        raise ValueError("connectivity is undefined for the empty graph")
    rows = g.rows
    seen = 1
    frontier = 1
    while frontier:
        reach = 0
        for v in bits(frontier):
            reach |= rows[v]
        frontier = reach & ~seen
        seen |= frontier
    return seen == g.all_mask


def components(g: Graph) -> list[int]:
    """Vertex masks of the connected components, ordered by smallest vertex."""
    rows = g.rows
    left = g.all_mask
    out = []
    while left:
        seen = frontier = left & -left
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= rows[v]
            frontier = reach & ~seen
            seen |= frontier
        out.append(seen)
        left &= ~seen
    return out


def false_twin_classes(g: Graph) -> list[list[int]]:
    """Partition V by open neighborhood, blocks ordered by smallest member."""
    groups: dict[int, list[int]] = {}
    for v, r in enumerate(g.rows):
        groups.setdefault(r, []).append(v)
    return sorted(groups.values(), key=lambda b: b[0])


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph induced on ``vertices``, relabelled 0.. in the given order."""
    vs = list(vertices)
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
    if len(set(vs)) != len(vs):
        raise ValueError("repeated vertex")
    rows = g.rows
    new = []
    for v in vs:
        r = rows[v]
        new.append(sum(1 << k for k, u in enumerate(vs) if r >> u & 1))
    return Graph(len(vs), tuple(new))


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, [u for u in range(g.n) if u != v])


@dataclass(frozen=True)
class TwinReduction:
    classes: tuple[tuple[int, ...], ...]
    representatives: tuple[int, ...]
    reduced: Graph

    def class_of(self, v: int) -> int:
        for i, c in enumerate(self.classes):
            if v in c:
                return i
        raise KeyError(v)


def twin_reduce(g: Graph) -> TwinReduction:
    """Tw(G): keep the lowest-index vertex of each false-twin class."""
    classes = tuple(tuple(c) for c in false_twin_classes(g))
    reps = tuple(c[0] for c in classes)
    if len(reps) == g.n:
        return TwinReduction(classes, reps, g)
    return TwinReduction(classes, reps, _induced_sorted(g, reps))


def _induced_sorted(g: Graph, reps: Sequence[int]) -> Graph:
    # reps sorted ascending: compress each row with a position table
    if g.n <= 64:
        return induced_subgraph(g, reps)
    pos = {v: k for k, v in enumerate(reps)}
    keep = mask_of(reps)
    new = []
    for v in reps:
        new.append(_row_from_list([pos[u] for u in bits(g.rows[v] & keep)], len(reps)))
    return Graph(len(reps), tuple(new))


def is_twin_free(g: Graph) -> bool:
    return len(set(g.rows)) == g.n


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        q = deque([s])
        while q:
            v = q.popleft()
            for u in bits(g.rows[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    q.append(u)
                elif side[u] == side[v]:
                    return False
    return True


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


# ---------------------------------------------------------------------------
# isomorphism


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test for graphs on at most ``ISO_TIER_LIMIT`` vertices."""
    if max(g.n, h.n) > ISO_TIER_LIMIT:
        raise ValueError(f"iso tier exceeded: {max(g.n, h.n)} > {ISO_TIER_LIMIT} vertices")
    return isomorphic(g, h)


def isomorphic(g: Graph, h: Graph) -> bool:
    """Backtracking isomorphism search with degree-class pruning, no size cap."""
    if g.n != h.n or g.m != h.m:
        return False
    dg, dh = g.degrees(), h.degrees()
    if sorted(dg) != sorted(dh):
        return False
    n = g.n
    if n == 0:
        return True
    # refine by (degree, sorted neighbor degrees)
    sig_g = [(dg[v], tuple(sorted(dg[u] for u in bits(g.rows[v])))) for v in range(n)]
    sig_h = [(dh[v], tuple(sorted(dh[u] for u in bits(h.rows[v])))) for v in range(n)]
    if sorted(sig_g) != sorted(sig_h):
        return False
    order = _search_order(g, sig_g)
    cands = {s: mask_of(v for v in range(n) if sig_h[v] == s) for s in set(sig_h)}
    grow, hrow = g.rows, h.rows
    image = [-1] * n

    def extend(k: int, used: int) -> bool:
        if k == n:
            return True
        v = order[k]
        # image must match adjacency to every already-mapped vertex
        pool = cands[sig_g[v]] & ~used
        for w in bits(pool):
            ok = True
            for u in order[:k]:
                if (grow[v] >> u & 1) != (hrow[w] >> image[u] & 1):
                    ok = False
                    break
            if ok:
                image[v] = w
                if extend(k + 1, used | (1 << w)):
                    return True
        image[v] = -1
        return False

    return extend(0, 0)


def _search_order(g: Graph, sig) -> list[int]:
    # BFS-ish order, rarest signature first, keeps constraints tight early
    freq: dict = {}
    for s in sig:
        freq[s] = freq.get(s, 0) + 1
    order: list[int] = []
    placed = 0
    while len(order) < g.n:
        frontier = 0
        for v in order:
            frontier |= g.rows[v]
        frontier &= ~placed
        pool = list(bits(frontier)) or [v for v in range(g.n) if not placed >> v & 1]
        v = min(pool, key=lambda x: (freq[sig[x]], -g.degree(x), x))
        order.append(v)
        placed |= 1 << v
    return order


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    new = [0] * g.n
    for v, r in enumerate(g.rows):
        new[perm[v]] = mask_of(perm[u] for u in bits(r))
    return Graph(g.n, tuple(new))


def all_permutations_isomorphic(g: Graph, h: Graph) -> bool:
    """Plain permutation scan, used as an oracle for small graphs."""
    if g.n != h.n:
        return False
    return any(relabel(g, p).rows == h.rows for p in itertools.permutations(range(g.n)))
