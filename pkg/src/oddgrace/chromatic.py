"""Proper vertex colourings: greedy, exact (DSATUR branch and bound), and
the closed-form colourings of ``Ci_n(1, 2)``.

Colours are ``1 .. num_colors`` and every colour is used.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ParameterError, ResourceError
from .graph import Graph, iter_bits

DEFAULT_EXACT_LIMIT = 40


@dataclass(frozen=True)
class ProperColoring:
    colors: tuple[int, ...]
    num_colors: int

    @classmethod
    def from_colors(cls, colors: Sequence[int]) -> "ProperColoring":
        """Compact arbitrary positive colour ids onto ``1 .. c`` preserving order."""
        ranks = {c: i + 1 for i, c in enumerate(sorted(set(colors)))}
        return cls(tuple(ranks[c] for c in colors), len(ranks))

    def is_proper(self, g: Graph) -> bool:
        return is_proper_coloring(g, self.colors)


def is_proper_coloring(g: Graph, colors: Sequence[int]) -> bool:
    if len(colors) != g.n:
        return False
    return all(colors[u] != colors[v] for u, v in g.edges())


def greedy_coloring(g: Graph, order: Sequence[int] | None = None) -> ProperColoring:
    """First-fit colouring along ``order`` (default: natural order)."""
    if order is None:
        order = range(g.n)
    colors = [0] * g.n
    for v in order:
        taken = 0
        for u in iter_bits(g.adj[v]):
            taken |= 1 << colors[u]
        c = 1
        while taken >> c & 1:
            c += 1
        colors[v] = c
    return ProperColoring.from_colors(colors) if g.n else ProperColoring((), 0)


def dsatur_coloring(g: Graph) -> ProperColoring:
    """Greedy DSATUR: colour the most saturated vertex next, lowest index on ties."""
    n = g.n
    if n == 0:
        return ProperColoring((), 0)
    colors = [0] * n
    seen = [0] * n
    for _ in range(n):
        v = max((u for u in range(n) if not colors[u]),
                key=lambda u: (seen[u].bit_count(), g.degree(u), -u))
        c = 1
        while seen[v] >> c & 1:
            c += 1
        colors[v] = c
        for u in iter_bits(g.adj[v]):
            seen[u] |= 1 << c
    return ProperColoring.from_colors(colors)


def greedy_clique(g: Graph) -> list[int]:
    """A large clique found by greedy growth from every start vertex."""
    best: list[int] = []
    for start in range(g.n):
        clique = [start]
        cand = g.adj[start]
        while cand:
            v = max(iter_bits(cand), key=lambda u: ((g.adj[u] & cand).bit_count(), -u))
            clique.append(v)
            cand &= g.adj[v]
        if len(clique) > len(best):
            best = clique
    return sorted(best)


def chi_exact(g: Graph, limit: int = DEFAULT_EXACT_LIMIT) -> ProperColoring:
    """Minimum colouring by DSATUR branch and bound with a clique lower bound.

    Raises :class:`ResourceError` when ``g`` has more than ``limit`` vertices;
    use :func:`greedy_coloring` or :func:`dsatur_coloring` instead.
    """
    n = g.n
    if n > limit:
        raise ResourceError(
            f"chi_exact limited to {limit} vertices (got {n}); fall back to greedy_coloring")
    if n == 0:
        return ProperColoring((), 0)
    clique = greedy_clique(g)
    lower = len(clique)
    incumbent = dsatur_coloring(g)
    if incumbent.num_colors == lower:
        return incumbent

    best_k = incumbent.num_colors
    best_colors = list(incumbent.colors)
    colors = [0] * n
    seen = [0] * n
    for c, v in enumerate(clique, start=1):
        colors[v] = c
        for u in iter_bits(g.adj[v]):
            seen[u] |= 1 << c

    def pick() -> int:
        chosen, key = -1, -1
        for u in range(n):
            if not colors[u]:
                s = seen[u].bit_count()
                if s > key:
                    chosen, key = u, s
        return chosen

    def search(done: int, used: int) -> bool:
        nonlocal best_k, best_colors
        if used >= best_k:
            return False
        if done == n:
            best_k, best_colors = used, colors[:]
            return used == lower
        v = pick()
        c = 0
        while True:
            c += 1
            # the incumbent may shrink inside the loop
            if c > used + 1 or c >= best_k:
                break
            if seen[v] >> c & 1:
                continue
            colors[v] = c
            bit = 1 << c
            touched = [u for u in iter_bits(g.adj[v]) if not colors[u] and not seen[u] & bit]
            for u in touched:
                seen[u] |= bit
            stop = search(done + 1, max(used, c))
            for u in touched:
                seen[u] &= ~bit
            colors[v] = 0
            if stop:
                return True
        return False

    search(len(clique), lower)
    return ProperColoring.from_colors(best_colors)


def circulant_12_coloring(n: int) -> ProperColoring:
    """Explicit colouring of ``Ci_n(1, 2)`` for odd ``n >= 3``.

    Vertex ``v`` (0-based) is the circulant vertex with 1-based index
    ``i = v + 1``.  The base pattern colours ``i`` by its residue mod 3 using
    representatives 1, 2, 3 (so vertex ``v`` gets ``v % 3 + 1``).

    * ``n % 6 == 3``: the base pattern, 3 colours.
    * ``n % 6 in (1, 5)``, ``n > 5``: the base pattern patched on
      ``i = 1..5`` to 4, 3, 1, 2, 4, giving 4 colours.
    * ``n == 5``: ``Ci_5(1, 2)`` is ``K_5``; 5 colours.
    """
    if n < 3 or n % 2 == 0:
        raise ParameterError(f"circulant_12_coloring requires odd n >= 3, got {n}")
    if n == 5:
        return ProperColoring((1, 2, 3, 4, 5), 5)
    base = [v % 3 + 1 for v in range(n)]
    if n % 6 == 3:
        return ProperColoring(tuple(base), 3)
    for i, c in {1: 4, 2: 3, 3: 1, 4: 2, 5: 4}.items():
        base[i - 1] = c
    return ProperColoring(tuple(base), 4)
