"""Vertex labelings and the odd graceful verifier.

A labeling is valid for a graph when

* labels lie in ``1 .. k``;
* adjacent vertices get different labels;
* every edge label ``|a - b|`` is odd;
* edges sharing a vertex get different edge labels.

The last condition, for a path ``a - b - c``, is the same as
``label[a] != label[c]`` and ``label[a] + label[c] != 2 * label[b]``.

The domain starts at 1, not 0.  Allowing 0 lets ``K_{2,2}`` be labeled with
``{1, 3}`` and ``{0, 4}`` at ``k = 4``, below its known optimum of 5.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence, Union

from .errors import NotBipartiteError
from .graph import Bipartition, Graph, NotBipartite, bipartition, iter_bits


@dataclass(frozen=True)
class Labeling:
    labels: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(int(x) for x in self.labels))

    @classmethod
    def tight(cls, labels: Sequence[int]) -> "Labeling":
        """Labeling whose bound is its own largest label."""
        return cls(tuple(labels), max(labels, default=0))

    def __len__(self):
        return len(self.labels)

    def __getitem__(self, v):
        return self.labels[v]

    @property
    def max_label(self) -> int:
        return max(self.labels, default=0)


@dataclass(frozen=True, order=True)
class LabelOutOfRange:
    v: int
    label: int


@dataclass(frozen=True, order=True)
class AdjacentEqualLabels:
    u: int
    v: int


@dataclass(frozen=True, order=True)
class EvenEdgeLabel:
    u: int
    v: int
    value: int


@dataclass(frozen=True, order=True)
class EqualIncidentEdgeLabels:
    center: int
    a: int
    c: int


Violation = Union[LabelOutOfRange, AdjacentEqualLabels, EvenEdgeLabel, EqualIncidentEdgeLabels]


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    vertex_proper: bool
    edges_all_odd: bool
    edge_proper: bool
    violations: tuple = field(default=())


def induced_edge_labels(g: Graph, lab: Labeling | Sequence[int]) -> dict[tuple[int, int], int]:
    labels = lab.labels if isinstance(lab, Labeling) else lab
    return {(u, v): abs(labels[u] - labels[v]) for u, v in g.edges()}


def verify(g: Graph, lab: Labeling, min_label: int = 1) -> VerificationReport:
    """Check every condition and list every violation.

    Violations come grouped by kind (range, vertex, parity, incidence) and
    sorted by vertex indices within each kind.  ``min_label`` exists only to
    demonstrate why the domain starts at 1; leave it alone otherwise.
    """
    labels = lab.labels
    if len(labels) != g.n:
        raise ValueError(f"labeling has {len(labels)} labels for a graph on {g.n} vertices")
    out_of_range = [LabelOutOfRange(v, x) for v, x in enumerate(labels) if not min_label <= x <= lab.k]
    equal = []
    even = []
    for u, v in g.edges():
        d = abs(labels[u] - labels[v])
        if d == 0:
            equal.append(AdjacentEqualLabels(u, v))
        if d % 2 == 0:
            even.append(EvenEdgeLabel(u, v, d))
    incident = []
    for b in range(g.n):
        nbrs = list(iter_bits(g.adj[b]))
        x = labels[b]
        for i, a in enumerate(nbrs):
            da = abs(labels[a] - x)
            for c in nbrs[i + 1:]:
                if abs(labels[c] - x) == da:
                    incident.append(EqualIncidentEdgeLabels(b, a, c))
    violations = tuple(out_of_range + equal + even + incident)
    return VerificationReport(
        valid=not violations,
        vertex_proper=not equal,
        edges_all_odd=not even,
        edge_proper=not incident,
        violations=violations,
    )


def is_valid(g: Graph, lab: Labeling) -> bool:
    return verify(g, lab).valid


@dataclass(frozen=True)
class ParitySplit:
    consistent: bool
    # parity of the u-side labels when consistent, else of the lowest u-side vertex
    u_parity: str


def parity_split(g: Graph, lab: Labeling, bip: Bipartition | None = None) -> ParitySplit:
    """Whether one side is all odd and the other all even."""
    if bip is None:
        bip = bipartition(g)
        if isinstance(bip, NotBipartite):
            raise NotBipartiteError("parity_split requires a bipartite graph", bip.odd_cycle)
    labels = lab.labels
    u_par = {labels[v] % 2 for v in bip.u_side}
    w_par = {labels[v] % 2 for v in bip.w_side}
    first = labels[bip.u_side[0]] % 2 if bip.u_side else 1
    consistent = len(u_par) <= 1 and len(w_par) <= 1 and not (u_par & w_par)
    return ParitySplit(consistent, "odd" if first else "even")


def complement(lab: Labeling) -> Labeling:
    """Apply ``x -> k + 1 - x``; edge-label differences are preserved."""
    return Labeling(tuple(lab.k + 1 - x for x in lab.labels), lab.k)
