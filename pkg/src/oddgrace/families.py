"""Named graph families and their deterministic vertex numbering.

Numbering conventions (stable, relied on by fixtures and golden files):

* ``Path(n)``: ``0 - 1 - ... - (n-1)``.
* ``Cycle(n)``: path plus the edge ``(n-1, 0)``.
* ``CompleteBipartite(m, n)``: the m-side is ``0 .. m-1``, the n-side is
  ``m .. m+n-1``.
* ``NearComplete(m, n, r)``: ``CompleteBipartite(m, n)`` minus the edges
  joining ``m-1`` (the last m-side vertex) to ``m .. m+r-1`` (the first r
  n-side vertices).
* ``Circulant(n, offsets)``: ``i ~ i + s (mod n)``; offsets are reduced mod
  n and deduplicated.
* ``Mobius(order)``: ``Circulant(order, (1, order // 2))``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path as FsPath
from typing import Union

from .errors import ParameterError
from .graph import Graph


@dataclass(frozen=True)
class Path:
    n: int


@dataclass(frozen=True)
class Cycle:
    n: int


@dataclass(frozen=True)
class CompleteBipartite:
    m: int
    n: int


@dataclass(frozen=True)
class NearComplete:
    m: int
    n: int
    r: int


@dataclass(frozen=True)
class Mobius:
    order: int


@dataclass(frozen=True)
class Circulant:
    n: int
    offsets: tuple[int, ...]


@dataclass(frozen=True)
class EdgeList:
    source: str


FamilySpec = Union[Path, Cycle, CompleteBipartite, NearComplete, Mobius, Circulant, EdgeList]


def validate(spec: FamilySpec) -> None:
    """Raise :class:`ParameterError` naming the first violated constraint."""
    if isinstance(spec, Path):
        if spec.n < 1:
            raise ParameterError(f"path requires n >= 1, got {spec.n}")
    elif isinstance(spec, Cycle):
        if spec.n < 3:
            raise ParameterError(f"cycle requires n >= 3, got {spec.n}")
    elif isinstance(spec, CompleteBipartite):
        if spec.m < 1 or spec.n < 1:
            raise ParameterError(f"K m n requires m, n >= 1, got ({spec.m}, {spec.n})")
    elif isinstance(spec, NearComplete):
        if spec.m < 2 or spec.n < 2:
            raise ParameterError(f"K m n - K1 r requires m, n >= 2, got ({spec.m}, {spec.n})")
        if not 1 <= spec.r <= spec.n:
            raise ParameterError(f"K m n - K1 r requires 1 <= r <= n, got r={spec.r}, n={spec.n}")
    elif isinstance(spec, Mobius):
        if spec.order < 6 or spec.order % 2:
            raise ParameterError(f"mobius requires an even order >= 6, got {spec.order}")
    elif isinstance(spec, Circulant):
        if spec.n < 1:
            raise ParameterError(f"circulant requires n >= 1, got {spec.n}")
        if not spec.offsets:
            raise ParameterError("circulant requires at least one offset")
        if any(s % spec.n == 0 for s in spec.offsets):
            raise ParameterError("circulant offsets must be nonzero modulo n")
    elif isinstance(spec, EdgeList):
        pass
    else:
        raise ParameterError(f"unknown family spec {spec!r}")


def generate(spec: FamilySpec) -> Graph:
    validate(spec)
    if isinstance(spec, Path):
        return Graph.from_edges(spec.n, [(i, i + 1) for i in range(spec.n - 1)])
    if isinstance(spec, Cycle):
        return Graph.from_edges(spec.n, [(i, (i + 1) % spec.n) for i in range(spec.n)])
    if isinstance(spec, CompleteBipartite):
        m, n = spec.m, spec.n
        return Graph.from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)])
    if isinstance(spec, NearComplete):
        m, n, r = spec.m, spec.n, spec.r
        edges = [(i, m + j) for i in range(m) for j in range(n) if not (i == m - 1 and j < r)]
        return Graph.from_edges(m + n, edges)
    if isinstance(spec, Mobius):
        return circulant(spec.order, (1, spec.order // 2))
    if isinstance(spec, Circulant):
        return circulant(spec.n, spec.offsets)
    from .io import read_edge_list

    return read_edge_list(spec.source)


def circulant(n: int, offsets) -> Graph:
    reduced = sorted({s % n for s in offsets})
    if 0 in reduced:
        raise ParameterError("circulant offsets must be nonzero modulo n")
    return Graph.from_edges(n, [(i, (i + s) % n) for i in range(n) for s in reduced])


def ladder(n: int) -> Graph:
    """``P_n x K_2``: rails ``0..n-1`` and ``n..2n-1``, rungs ``i ~ i+n``."""
    if n < 2:
        raise ParameterError(f"ladder requires n >= 2, got {n}")
    edges = [(i, i + 1) for i in range(n - 1)]
    edges += [(n + i, n + i + 1) for i in range(n - 1)]
    edges += [(i, n + i) for i in range(n)]
    return Graph.from_edges(2 * n, edges)


def prism(n: int) -> Graph:
    """``C_n x K_2``, the circular ladder; cubic, and bipartite for even n."""
    if n < 3:
        raise ParameterError(f"prism requires n >= 3, got {n}")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return Graph.from_edges(2 * n, edges)


def honeycomb_torus(rows: int, cols: int) -> Graph:
    """Hexagonal lattice on a torus in brick-wall form.

    Vertex ``(i, j)`` is ``i * cols + j``.  Rows are cycles; ``(i, j)`` with
    ``i + j`` even also joins ``(i + 1, j)``.  Cubic and bipartite when both
    dimensions are even.
    """
    if rows < 2 or cols < 4 or rows % 2 or cols % 2:
        raise ParameterError("honeycomb torus requires even rows >= 2 and even cols >= 4")

    def vid(i, j):
        return (i % rows) * cols + (j % cols)

    edges = []
    for i in range(rows):
        for j in range(cols):
            edges.append((vid(i, j), vid(i, j + 1)))
            if (i + j) % 2 == 0:
                edges.append((vid(i, j), vid(i + 1, j)))
    return Graph.from_edges(rows * cols, edges)


def hexagonal_chain(h: int) -> Graph:
    """Linear chain of ``h`` hexagons (a polyacene skeleton).

    Top row ``0 .. 2h`` and bottom row ``2h+1 .. 4h+1`` are paths; vertical
    edges join column ``j`` of both rows for even ``j``.
    """
    if h < 1:
        raise ParameterError(f"hexagonal chain requires h >= 1, got {h}")
    width = 2 * h + 1
    edges = [(j, j + 1) for j in range(width - 1)]
    edges += [(width + j, width + j + 1) for j in range(width - 1)]
    edges += [(j, width + j) for j in range(0, width, 2)]
    return Graph.from_edges(2 * width, edges)


_DSL = [
    (re.compile(r"^K\s+(\d+)\s+(\d+)\s*-\s*K1\s+(\d+)$", re.I), lambda a: NearComplete(*map(int, a))),
    (re.compile(r"^K\s+(\d+)\s+(\d+)$", re.I), lambda a: CompleteBipartite(*map(int, a))),
    (re.compile(r"^mobius\s+(\d+)$", re.I), lambda a: Mobius(int(a[0]))),
    (re.compile(r"^cycle\s+(\d+)$", re.I), lambda a: Cycle(int(a[0]))),
    (re.compile(r"^path\s+(\d+)$", re.I), lambda a: Path(int(a[0]))),
    (
        re.compile(r"^circulant\s+(\d+)\s+(\d+(?:\s*,\s*\d+)*)$", re.I),
        lambda a: Circulant(int(a[0]), tuple(int(x) for x in a[1].split(","))),
    ),
]


def parse_family(text: str) -> FamilySpec:
    """Parse the family mini-language, e.g. ``"K 4 4"`` or ``"K 5 4 - K1 2"``."""
    text = text.strip()
    for pattern, build in _DSL:
        match = pattern.match(text)
        if match:
            spec = build(match.groups())
            validate(spec)
            return spec
    raise ParameterError(f"unrecognised family {text!r}")


def format_family(spec: FamilySpec) -> str:
    if isinstance(spec, NearComplete):
        return f"K {spec.m} {spec.n} - K1 {spec.r}"
    if isinstance(spec, CompleteBipartite):
        return f"K {spec.m} {spec.n}"
    if isinstance(spec, Mobius):
        return f"mobius {spec.order}"
    if isinstance(spec, Cycle):
        return f"cycle {spec.n}"
    if isinstance(spec, Path):
        return f"path {spec.n}"
    if isinstance(spec, Circulant):
        return f"circulant {spec.n} " + ",".join(map(str, spec.offsets))
    return str(FsPath(spec.source))
