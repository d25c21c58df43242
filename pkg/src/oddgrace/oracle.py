"""Naive oracle for the odd graceful chromatic number.

Enumerates every vector in ``{1..k}^n`` for ``k = 1, 2, ...`` with no
pruning at all.  Vectors are checked in numpy chunks; the first hit is
re-checked with :func:`oddgrace.labeling.verify` before it is trusted.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ParameterError
from .graph import Graph, iter_bits
from .labeling import Labeling, verify

MAX_VERTICES = 7
CHUNK = 1 << 18


@dataclass(frozen=True)
class NotFoundBelowCap:
    cap: int


def _paths(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    for b in range(g.n):
        nbrs = list(iter_bits(g.adj[b]))
        for i, a in enumerate(nbrs):
            for c in nbrs[i + 1:]:
                out.append((a, b, c))
    return out


def valid_mask(g: Graph, labels: np.ndarray) -> np.ndarray:
    """Row-wise validity of a ``(rows, n)`` array of labels (range not checked)."""
    ok = np.ones(labels.shape[0], dtype=bool)
    for u, v in g.edges():
        ok &= (np.abs(labels[:, u] - labels[:, v]) % 2) == 1
    for a, b, c in _paths(g):
        ok &= np.abs(labels[:, a] - labels[:, b]) != np.abs(labels[:, c] - labels[:, b])
    return ok


def _vectors(n: int, k: int, start: int, stop: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((stop - start, n), dtype=np.int64)
    for p in range(n):
        out[:, p] = idx % k + 1
        idx //= k
    return out


def first_labeling(g: Graph, k: int) -> Labeling | None:
    """Lowest vector (little-endian mixed radix order) valid at ``k``."""
    n = g.n
    if n == 0:
        return Labeling((), k)
    total = k ** n
    for start in range(0, total, CHUNK):
        block = _vectors(n, k, start, min(total, start + CHUNK))
        hits = np.flatnonzero(valid_mask(g, block))
        if hits.size:
            lab = Labeling(tuple(int(x) for x in block[hits[0]]), k)
            if not verify(g, lab).valid:
                raise AssertionError(f"oracle checker disagrees with verify on {lab}")
            return lab
    return None


def brute_force_chi(g: Graph, k_cap: int) -> int | NotFoundBelowCap:
    if g.n > MAX_VERTICES:
        raise ParameterError(f"brute force is limited to {MAX_VERTICES} vertices, got {g.n}")
    for k in range(1, k_cap + 1):
        if first_labeling(g, k) is not None:
            return k
    return NotFoundBelowCap(k_cap)
