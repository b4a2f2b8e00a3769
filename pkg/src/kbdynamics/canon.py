"""Isomorphism-class tables for all labeled graphs on at most seven vertices.

A labeled graph on ``n`` vertices is coded by its upper-triangle adjacency bits
in graph6 order: pair ``(i, j)`` with ``i < j`` sits at bit ``j(j-1)/2 + i``.
The symmetric group acts on codes by permuting bit positions; the orbits are
found by min-label propagation along two generators (a transposition and an
n-cycle) over the whole code space.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .graph import Graph

MAX_TABLE_ORDER = 7


def pair_index(i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def graph_from_code(n: int, code: int) -> Graph:
    rows = [0] * n
    off = 0
    for j in range(1, n):
        low = (code >> off) & ((1 << j) - 1)
        off += j
        rows[j] |= low
        i_bits = low
        while i_bits:
            b = i_bits & -i_bits
            rows[b.bit_length() - 1] |= 1 << j
            i_bits ^= b
    return Graph(n, tuple(rows))


def code_of(g: Graph) -> int:
    code = 0
    off = 0
    for j in range(1, g.n):
        code |= (g.rows[j] & ((1 << j) - 1)) << off
        off += j
    return code


def _permute_codes(n: int, perm: list[int], codes: np.ndarray) -> np.ndarray:
    out = np.zeros_like(codes)
    for j in range(1, n):
        for i in range(j):
            src = pair_index(i, j)
            dst = pair_index(perm[i], perm[j])
            out |= ((codes >> src) & 1) << dst
    return out


@lru_cache(maxsize=None)
def orbit_table(n: int) -> np.ndarray:
    """``table[c]`` is the smallest code isomorphic to code ``c``."""
    if not 1 <= n <= MAX_TABLE_ORDER:
        raise ValueError(f"orbit tables cover 1 <= n <= {MAX_TABLE_ORDER}")
    size = 1 << (n * (n - 1) // 2)
    codes = np.arange(size, dtype=np.int64)
    if n == 1:
        return codes
    gens = [list(range(n))]
    gens[0][0], gens[0][1] = 1, 0
    gens.append([(v + 1) % n for v in range(n)])
    gens.append([(v - 1) % n for v in range(n)])
    images = [_permute_codes(n, p, codes) for p in gens]
    label = codes.copy()
    while True:
        new = label
        for img in images:
            new = np.minimum(new, label[img])
        new = new[new]
        if np.array_equal(new, label):
            break
        label = new
    label.setflags(write=False)
    return label
