"""Exact search for odd graceful labelings.

The search assigns labels vertex by vertex with forward checking.  Each
vertex draws from the odd or even labels in ``1 .. k`` according to its side
and the parity case being searched.  On every assignment it prunes

* the new label from all same-side vertices at distance 2;
* the third member of every path ``a - b - c`` whose other two members are
  now labeled, using ``label[a] + label[c] != 2 * label[b]``;
* twin vertices (identical neighbourhoods) to increasing labels by index;
* for odd ``k``, labelings that are the image of another under
  ``x -> k + 1 - x`` (the guard on the class of the first vertex in
  :func:`_search`).

For even ``k`` the complement map swaps the parity cases, so only the case
"u-side odd" is searched.

Graphs may carry isolated vertices (they get label 1); apart from those the
graph must be connected.
"""

from __future__ import annotations

import itertools
import math
import os
import time
from dataclasses import dataclass, field
from typing import Iterator

from .errors import ConstructionError, DisconnectedError, InfeasibleError, ParameterError, ResourceError
from .graph import (Bipartition, Graph, NotBipartite, bipartition, components, induced_subgraph,
                    iter_bits, square_adjacency)
from .labeling import Labeling

INFINITE = math.inf
DEFAULT_NODE_LIMIT = 10**8
DEFAULT_TIME_LIMIT = 600.0


def default_node_limit() -> int:
    env = os.environ.get("OGK_NODE_LIMIT")
    return int(env) if env else DEFAULT_NODE_LIMIT


@dataclass(frozen=True)
class SolveOptions:
    k_min: int | None = None
    k_max: int | None = None
    canonical_witness: bool = False
    node_limit: int | None = None
    time_limit: float = DEFAULT_TIME_LIMIT

    def __post_init__(self):
        if self.node_limit is not None and self.node_limit <= 0:
            raise ParameterError("node_limit must be positive")
        if self.time_limit <= 0:
            raise ParameterError("time_limit must be positive")


@dataclass
class SolveStats:
    nodes_explored: int = 0
    parity_cases_tried: int = 0
    wall_time: float = 0.0
    k_tried: list = field(default_factory=list)


@dataclass
class SolveResult:
    chi: int | float
    witness: Labeling | None
    stats: SolveStats

    @property
    def infinite(self) -> bool:
        return self.chi == INFINITE


class _Budget:
    def __init__(self, stats: SolveStats, opts: SolveOptions):
        self.stats = stats
        self.node_limit = opts.node_limit or default_node_limit()
        self.deadline = time.monotonic() + opts.time_limit

    def exceeded(self) -> str | None:
        if self.stats.nodes_explored >= self.node_limit:
            return f"node limit {self.node_limit} reached"
        if time.monotonic() > self.deadline:
            return "time limit reached"
        return None


@dataclass(frozen=True)
class _Core:
    """Connected, edge-bearing part of a graph plus the isolated vertices."""

    graph: Graph
    index: tuple[int, ...]
    isolated: tuple[int, ...]
    n: int


def _core(g: Graph) -> _Core:
    isolated = tuple(v for v in range(g.n) if not g.adj[v])
    with_edges = [c for c in components(g) if len(c) > 1]
    if len(with_edges) > 1:
        raise DisconnectedError(
            "graph has more than one component with edges; only isolated vertices are allowed")
    core, index = induced_subgraph(g, with_edges[0] if with_edges else ())
    return _Core(core, index, isolated, g.n)


def _lift(core: _Core, labels, k: int) -> Labeling:
    out = [1] * core.n
    for j, v in enumerate(core.index):
        out[v] = labels[j]
    return Labeling(tuple(out), k)


def twin_classes(g: Graph) -> list[tuple[int, ...]]:
    """Vertices grouped by identical open neighbourhood, sorted."""
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.adj[v], []).append(v)
    return sorted(tuple(c) for c in groups.values())


def variable_order(g: Graph) -> list[int]:
    """Descending degree in the square, then index."""
    sq = square_adjacency(g)
    return sorted(range(g.n), key=lambda v: (-sq[v].bit_count(), v))


def _search(g: Graph, bip: Bipartition, k: int, odd_side: int, budget: _Budget, *,
            order: list[int], twins: list[tuple[int, ...]], break_complement: bool,
            on_solution) -> bool:
    """Depth-first search for one parity case.

    ``on_solution(labels)`` is called for every complete labeling found; the
    search stops as soon as it returns True.  Returns whether it stopped.
    """
    n = g.n
    stats = budget.stats
    nbrs = [tuple(iter_bits(g.adj[v])) for v in range(n)]
    side = [0] * n
    for v in bip.w_side:
        side[v] = 1
    same_side = [0, 0]
    for v in range(n):
        same_side[side[v]] |= 1 << v
    sq = square_adjacency(g)
    dist2 = [tuple(iter_bits(sq[v] & same_side[side[v]])) for v in range(n)]

    full = (1 << (k + 1)) - 2
    odd_mask = sum(1 << x for x in range(1, k + 1, 2))
    even_mask = full & ~odd_mask
    dom = [odd_mask if side[v] == odd_side else even_mask for v in range(n)]

    lower_twins = [() for _ in range(n)]
    upper_twins = [() for _ in range(n)]
    for cls in twins:
        for i, v in enumerate(cls):
            lower_twins[v] = cls[:i]
            upper_twins[v] = cls[i + 1:]

    # complement guard: label[first] + label[last] <= k + 1 on the class of order[0]
    guard_first = guard_last = -1
    if break_complement and n:
        cls = next(c for c in twins if order[0] in c)
        if len(cls) == 1:
            v0 = cls[0]
            dom[v0] &= (1 << ((k + 1) // 2 + 1)) - 1
        else:
            guard_first, guard_last = cls[0], cls[-1]

    labels = [0] * n
    trail: list[tuple[int, int]] = []

    def prune(t: int, keep: int) -> bool:
        d = dom[t]
        nd = d & keep
        if nd != d:
            trail.append((t, d))
            dom[t] = nd
            return nd != 0
        return True

    def assign(v: int, x: int) -> bool:
        labels[v] = x
        bit = 1 << x
        nbit = ~bit
        for u in dist2[v]:
            if not labels[u] and dom[u] & bit:
                if not prune(u, nbit):
                    return False
        for u in upper_twins[v]:
            if not labels[u] and not prune(u, ~((bit << 1) - 1)):
                return False
        for u in lower_twins[v]:
            if not labels[u] and not prune(u, bit - 1):
                return False
        if v == guard_first and not labels[guard_last]:
            if not prune(guard_last, (1 << (k + 2 - x)) - 1):
                return False
        elif v == guard_last and not labels[guard_first]:
            if not prune(guard_first, (1 << (k + 2 - x)) - 1):
                return False
        nv = nbrs[v]
        for b in nv:
            lb = labels[b]
            if lb:
                # v is an endpoint, the middle b is labeled
                y = 2 * lb - x
                if 1 <= y <= k:
                    ybit = ~(1 << y)
                    for c in nbrs[b]:
                        if not labels[c] and not prune(c, ybit):
                            return False
                # v is the middle, b an endpoint: the far endpoint c is pruned
                y = 2 * x - lb
                if 1 <= y <= k:
                    ybit = ~(1 << y)
                    for c in nv:
                        if not labels[c] and not prune(c, ybit):
                            return False
            else:
                # v is an endpoint, the middle b is free: prune b
                for c in nbrs[b]:
                    lc = labels[c]
                    if lc and c != v:
                        if not prune(b, ~(1 << ((x + lc) >> 1))):
                            return False
        return True

    def undo(mark: int, v: int):
        labels[v] = 0
        while len(trail) > mark:
            t, d = trail.pop()
            dom[t] = d

    def dfs(depth: int) -> bool:
        if depth == n:
            return bool(on_solution(labels))
        v = order[depth]
        d = dom[v]
        while d:
            low = d & -d
            d ^= low
            x = low.bit_length() - 1
            stats.nodes_explored += 1
            if stats.nodes_explored & 1023 == 0:
                why = budget.exceeded()
                if why:
                    raise ResourceError(why, stats)
            mark = len(trail)
            if assign(v, x) and dfs(depth + 1):
                undo(mark, v)
                return True
            undo(mark, v)
        return False

    if any(dom[v] == 0 for v in range(n)):
        return False
    return dfs(0)


def _expand_twins(labels, twins):
    """All labelings obtained by permuting labels inside twin classes."""
    per_class = []
    for cls in twins:
        vals = [labels[v] for v in cls]
        per_class.append([(cls, p) for p in itertools.permutations(vals)])
    for combo in itertools.product(*per_class):
        out = list(labels)
        for cls, perm in combo:
            for v, x in zip(cls, perm):
                out[v] = x
        yield tuple(out)


class _Prepared:
    def __init__(self, g: Graph, strict: bool = False):
        if strict:
            from .graph import is_connected

            if not is_connected(g):
                raise DisconnectedError("enumeration requires a connected graph")
        self.core = _core(g)
        cg = self.core.graph
        self.bip = bipartition(cg)
        self.twins = twin_classes(cg)
        self.order = variable_order(cg)


def _feasible(prep: _Prepared, k: int, budget: _Budget, canonical: bool) -> Labeling | None:
    core = prep.core
    cg = core.graph
    if cg.n == 0:
        return _lift(core, (), k) if k >= 1 else None
    if isinstance(prep.bip, NotBipartite) or k < 1:
        return None
    stats = budget.stats
    if canonical:
        best = None
        for odd_side in (0, 1):
            stats.parity_cases_tried += 1
            found = []
            _search(cg, prep.bip, k, odd_side, budget, order=list(range(cg.n)), twins=prep.twins,
                    break_complement=False, on_solution=lambda lab: found.append(tuple(lab)) or True)
            if found and (best is None or found[0] < best):
                best = found[0]
        return None if best is None else _lift(core, best, k)
    cases = (0,) if k % 2 == 0 else (0, 1)
    for odd_side in cases:
        stats.parity_cases_tried += 1
        found = []
        _search(cg, prep.bip, k, odd_side, budget, order=prep.order, twins=prep.twins,
                break_complement=k % 2 == 1,
                on_solution=lambda lab: found.append(tuple(lab)) or True)
        if found:
            return _lift(core, found[0], k)
    return None


def exists_labeling(g: Graph, k: int, options: SolveOptions | None = None,
                    stats: SolveStats | None = None) -> Labeling | None:
    """A labeling with all labels in ``1 .. k``, or None if none exists.

    Raises :class:`ResourceError` when the node or time limit is hit; a
    limit never produces None.
    """
    opts = options or SolveOptions()
    stats = stats if stats is not None else SolveStats()
    start = time.monotonic()
    try:
        return _feasible(_Prepared(g), k, _Budget(stats, opts), opts.canonical_witness)
    finally:
        stats.wall_time += time.monotonic() - start


def solve_chi_og(g: Graph, options: SolveOptions | None = None) -> SolveResult:
    """Smallest ``k`` admitting a labeling, by increasing ``k`` from the lower bound.

    Non-bipartite graphs yield ``chi = INFINITE``.  With ``k_min`` overridden
    the result is only certified minimal from ``k_min`` upward.
    """
    from . import bounds

    opts = options or SolveOptions()
    stats = SolveStats()
    start = time.monotonic()
    prep = _Prepared(g)
    budget = _Budget(stats, opts)
    try:
        cg = prep.core.graph
        if isinstance(prep.bip, NotBipartite):
            return SolveResult(INFINITE, None, stats)
        if cg.n == 0:
            lower = upper = 1
        else:
            lower = max(1, bounds.lower_bound_degree(cg))
            upper = bounds.best_upper_bound(cg, prep.bip)
        k_lo = opts.k_min if opts.k_min is not None else lower
        k_hi = opts.k_max if opts.k_max is not None else upper
        for k in range(k_lo, k_hi + 1):
            stats.k_tried.append(k)
            lab = _feasible(prep, k, budget, opts.canonical_witness)
            if lab is not None:
                return SolveResult(k, lab, stats)
        if k_hi >= upper:
            raise ConstructionError(f"no labeling found up to the proven upper bound {upper}")
        raise InfeasibleError(f"no labeling with k <= {k_hi}")
    finally:
        stats.wall_time = time.monotonic() - start


def enumerate_optimal(g: Graph, k: int, options: SolveOptions | None = None) -> Iterator[Labeling]:
    """Every valid labeling with labels in ``1 .. k``, including those whose
    largest label is below ``k``.  Order: u-side-odd case first, then by the
    search order, twin permutations expanded in place.
    """
    opts = options or SolveOptions()
    prep = _Prepared(g, strict=True)
    if isinstance(prep.bip, NotBipartite) or k < 1:
        return
    cg = prep.core.graph
    stats = SolveStats()
    budget = _Budget(stats, opts)
    for odd_side in (0, 1):
        stats.parity_cases_tried += 1
        found: list[tuple[int, ...]] = []
        _search(cg, prep.bip, k, odd_side, budget, order=prep.order, twins=prep.twins,
                break_complement=False, on_solution=lambda lab: found.append(tuple(lab)) and False)
        for raw in found:
            for labels in _expand_twins(raw, prep.twins):
                yield _lift(prep.core, labels, k)


@dataclass(frozen=True)
class LabelSetReport:
    """Distinct unordered pairs of per-side label sets, with anomalies.

    ``pairs`` holds ``(smaller, larger)`` sorted tuples per pair; an anomaly
    is a labeling whose largest label is below ``k``.
    """

    k: int
    pairs: tuple
    count: int
    anomalies: tuple


def optimal_label_sets(g: Graph, k: int, options: SolveOptions | None = None) -> LabelSetReport:
    bip = bipartition(g)
    if isinstance(bip, NotBipartite):
        return LabelSetReport(k, (), 0, ())
    pairs = set()
    anomalies = []
    count = 0
    for lab in enumerate_optimal(g, k, options):
        count += 1
        a = tuple(sorted({lab[v] for v in bip.u_side}))
        b = tuple(sorted({lab[v] for v in bip.w_side}))
        pairs.add(tuple(sorted((a, b))))
        if lab.max_label < k:
            anomalies.append(lab)
    return LabelSetReport(k, tuple(sorted(pairs)), count, tuple(anomalies))
