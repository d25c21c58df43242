"""Small connected bipartite graphs for cross-checking.

:func:`bipartite_classes` lists every connected bipartite graph on 2 to
``max_n`` vertices exactly once up to isomorphism, built from side sizes
and biadjacency matrices.  There are 1, 1, 3, 5 and 17 of them on 2 to 6
vertices.
"""

from __future__ import annotations

import itertools
import random

from .graph import Graph, is_connected, relabel


def _canonical(a: int, b: int, rows: tuple[int, ...]) -> tuple:
    """Smallest biadjacency (as row bitmasks) over side permutations, and
    over swapping the sides when they have equal size."""
    mats = [rows]
    if a == b:
        cols = tuple(sum(1 << i for i in range(a) if rows[i] >> j & 1) for j in range(b))
        mats.append(cols)
    best = None
    for mat in mats:
        for cperm in itertools.permutations(range(b)):
            permuted = [sum(1 << cperm[j] for j in range(b) if r >> j & 1) for r in mat]
            key = tuple(sorted(permuted))
            if best is None or key < best:
                best = key
    return (a, b, best)


def _graph(a: int, b: int, rows) -> Graph:
    edges = [(i, a + j) for i, r in enumerate(rows) for j in range(b) if r >> j & 1]
    return Graph.from_edges(a + b, edges)


def bipartite_classes(max_n: int = 6, min_n: int = 2) -> list[Graph]:
    """One representative per isomorphism class, smaller side first."""
    out = []
    for n in range(min_n, max_n + 1):
        seen = set()
        for a in range(1, n // 2 + 1):
            b = n - a
            for rows in itertools.product(range(1, 1 << b), repeat=a):
                key = _canonical(a, b, rows)
                if key in seen:
                    continue
                g = _graph(a, b, key[2])
                if is_connected(g):
                    seen.add(key)
                    out.append(g)
    return out


def shuffled_copies(graphs: list[Graph], seed: int = 0) -> list[Graph]:
    """One seeded random relabeling per graph."""
    rng = random.Random(seed)
    out = []
    for g in graphs:
        perm = list(range(g.n))
        rng.shuffle(perm)
        out.append(relabel(g, perm))
    return out


def small_corpus(seed: int = 0) -> list[Graph]:
    """Isomorphism classes on 2..6 vertices plus a shuffled copy of each."""
    base = bipartite_classes(6)
    return base + shuffled_copies(base, seed)
