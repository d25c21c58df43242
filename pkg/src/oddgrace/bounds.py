"""Lower and upper bounds on the odd graceful chromatic number.

Each bound carries a source tag:

=========================  ===============================================
``TrivialDegree``          ``2 * max_degree`` (lower)
``SquareChromatic``        ``2(chi(G^2[U]) + chi(G^2[W]) - 1)`` (upper)
``BrooksSquare``           ``4D^2 - 4D - 2``, or ``+ 2`` when a side's
                           square is complete or an odd cycle (upper)
``VertexCount``            ``2|V| - 2`` (upper)
``VertexCountNonComplete`` ``2|V| - 4`` when not complete bipartite (upper)
``KnownExactFamily``       exact value for complete and near-complete
                           bipartite families (both)
=========================  ===============================================
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .chromatic import DEFAULT_EXACT_LIMIT, ProperColoring, chi_exact, dsatur_coloring
from .errors import NotBipartiteError
from .families import CompleteBipartite, FamilySpec, NearComplete
from .graph import (Bipartition, Graph, NotBipartite, bipartition, diameter, is_complete,
                    is_complete_bipartite, is_odd_cycle, max_degree, square_induced)

INFINITE = math.inf


class Source(str, Enum):
    TRIVIAL_DEGREE = "TrivialDegree"
    SQUARE_CHROMATIC = "SquareChromatic"
    BROOKS_SQUARE = "BrooksSquare"
    VERTEX_COUNT = "VertexCount"
    VERTEX_COUNT_NON_COMPLETE = "VertexCountNonComplete"
    KNOWN_EXACT_FAMILY = "KnownExactFamily"


@dataclass(frozen=True)
class Bound:
    value: int | float
    source: Source


@dataclass(frozen=True)
class BoundReport:
    lower: tuple[Bound, ...]
    upper: tuple[Bound, ...]
    best_lower: int | float
    best_upper: int | float


def _require_bipartite(g: Graph, bip: Bipartition | None = None) -> Bipartition:
    if bip is not None:
        return bip
    found = bipartition(g)
    if isinstance(found, NotBipartite):
        raise NotBipartiteError("bound requires a bipartite graph", found.odd_cycle)
    return found


def lower_bound_degree(g: Graph) -> int | float:
    """``2 * max_degree``, or INFINITE when ``g`` is not bipartite."""
    if isinstance(bipartition(g), NotBipartite):
        return INFINITE
    return 2 * max_degree(g)


def upper_bound_square(g: Graph, exact: bool = True, bip: Bipartition | None = None
                       ) -> tuple[int, ProperColoring, ProperColoring]:
    """Square-colouring bound and the two colourings that witness it.

    ``exact=False`` uses DSATUR colourings, which still give a valid bound.
    """
    bip = _require_bipartite(g, bip)
    color = chi_exact if exact else dsatur_coloring
    psi1 = color(square_induced(g, bip.u_side)[0])
    psi2 = color(square_induced(g, bip.w_side)[0])
    return 2 * (psi1.num_colors + psi2.num_colors - 1), psi1, psi2


def squares_are_brooks_exceptions(g: Graph, bip: Bipartition | None = None) -> bool:
    bip = _require_bipartite(g, bip)
    for side in (bip.u_side, bip.w_side):
        sq = square_induced(g, side)[0]
        if is_complete(sq) or is_odd_cycle(sq):
            return True
    return False


def upper_bound_brooks(g: Graph, bip: Bipartition | None = None) -> int:
    bip = _require_bipartite(g, bip)
    d = max_degree(g)
    base = 4 * d * d - 4 * d
    return base + 2 if squares_are_brooks_exceptions(g, bip) else base - 2


def prop_d2_applicable(g: Graph, bip: Bipartition | None = None) -> bool:
    """Sufficient test for the ``-2`` branch of :func:`upper_bound_brooks`:
    ``diam >= 5``, ``|E| > 2|W|`` and ``|U| >= 4`` with ``|U| <= |W|``.
    """
    bip = _require_bipartite(g, bip)
    small, large = sorted((len(bip.u_side), len(bip.w_side)))
    return small >= 4 and g.edge_count > 2 * large and diameter(g) >= 5


def upper_bound_vertices(g: Graph, bip: Bipartition | None = None) -> int:
    bip = _require_bipartite(g, bip)
    if is_complete_bipartite(g, bip):
        return 2 * g.n - 2
    return 2 * g.n - 4


def _complete_value(m: int, n: int) -> int | None:
    a, b = max(m, n), min(m, n)
    if b < 2:
        return None
    if a % 2 == 0 and (b == 2 or a == b):
        return 2 * a + 2 * b - 3
    return 2 * a + 2 * b - 2


def known_exact(spec: FamilySpec) -> int | None:
    """Exact value for complete and near-complete bipartite families, else None.

    Stars (one side of size 1) are not covered.  For ``K m n - K1 r`` with
    ``r == n`` the last m-side vertex is isolated and the value is that of
    ``K m-1 n``.
    """
    if isinstance(spec, CompleteBipartite):
        return _complete_value(spec.m, spec.n)
    if not isinstance(spec, NearComplete):
        return None
    m, n, r = spec.m, spec.n, spec.r
    if r == n:
        return _complete_value(m - 1, n)
    low = 2 * m + 2 * n - 5
    if m == 3 and n % 2 == 0 and r >= 2:
        return low
    if m == n + 1 and n % 2 == 0:
        s = n // 2
        if s >= 2 and s <= r <= 2 * s - 1:
            return low
        if r == s - 1 and s >= 5 and s % 2 == 1:
            return low
    return low + 1


def best_upper_bound(g: Graph, bip: Bipartition | None = None) -> int:
    """Smallest of the general upper bounds; exact square colouring when small."""
    bip = _require_bipartite(g, bip)
    exact = max(len(bip.u_side), len(bip.w_side)) <= DEFAULT_EXACT_LIMIT
    square = upper_bound_square(g, exact=exact, bip=bip)[0]
    return min(square, upper_bound_brooks(g, bip), upper_bound_vertices(g, bip))


def bound_report(g: Graph, spec: FamilySpec | None = None, exact: bool = True) -> BoundReport:
    found = bipartition(g)
    if isinstance(found, NotBipartite):
        inf = Bound(INFINITE, Source.TRIVIAL_DEGREE)
        return BoundReport((inf,), (), INFINITE, INFINITE)
    bip = found
    lower = [Bound(2 * max_degree(g), Source.TRIVIAL_DEGREE)]
    upper = [Bound(upper_bound_square(g, exact=exact, bip=bip)[0], Source.SQUARE_CHROMATIC),
             Bound(upper_bound_brooks(g, bip), Source.BROOKS_SQUARE)]
    if is_complete_bipartite(g, bip):
        upper.append(Bound(2 * g.n - 2, Source.VERTEX_COUNT))
    else:
        upper.append(Bound(2 * g.n - 4, Source.VERTEX_COUNT_NON_COMPLETE))
    known = known_exact(spec) if spec is not None else None
    if known is not None:
        lower.append(Bound(known, Source.KNOWN_EXACT_FAMILY))
        upper.append(Bound(known, Source.KNOWN_EXACT_FAMILY))
    best_lower = max(1, max(b.value for b in lower))
    best_upper = min(b.value for b in upper)
    return BoundReport(tuple(lower), tuple(upper), best_lower, best_upper)
