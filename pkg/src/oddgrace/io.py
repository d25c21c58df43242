"""File formats: edge lists, labeling JSON and DOT export.

Edge list: UTF-8 text, ``#`` starts a comment line, one edge per line as two
0-based integers.  The vertex count is ``1 + max index`` unless the first
non-comment line is ``n <count>``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import TextIO

from .errors import ParameterError
from .graph import Graph
from .labeling import Labeling, induced_edge_labels


def parse_edge_list(text: str) -> Graph:
    n = None
    edges = []
    seen_data = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if seen_data or n is not None or len(parts) != 2:
                raise ParameterError(f"line {lineno}: 'n <count>' must be the first entry")
            n = _int(parts[1], lineno)
            if n < 0:
                raise ParameterError(f"line {lineno}: vertex count must be non-negative")
            seen_data = True
            continue
        seen_data = True
        if len(parts) != 2:
            raise ParameterError(f"line {lineno}: expected two vertex ids, got {line!r}")
        u, v = _int(parts[0], lineno), _int(parts[1], lineno)
        if u < 0 or v < 0:
            raise ParameterError(f"line {lineno}: vertex ids must be non-negative")
        if u == v:
            raise ParameterError(f"line {lineno}: self-loop on {u}")
        edges.append((u, v))
    top = 1 + max((max(e) for e in edges), default=-1)
    if n is None:
        n = top
    elif top > n:
        raise ParameterError(f"edge mentions vertex {top - 1} but header says n {n}")
    return Graph.from_edges(n, edges)


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParameterError(f"line {lineno}: {token!r} is not an integer") from None


def read_edge_list(source) -> Graph:
    return parse_edge_list(Path(source).read_text(encoding="utf-8"))


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def write_edge_list(g: Graph, dest) -> None:
    Path(dest).write_text(format_edge_list(g), encoding="utf-8")


def labeling_to_dict(lab: Labeling) -> dict:
    return {"k": lab.k, "labels": list(lab.labels)}


def labeling_from_dict(data: dict) -> Labeling:
    try:
        k, labels = data["k"], data["labels"]
    except (KeyError, TypeError):
        raise ParameterError("labeling JSON needs keys 'k' and 'labels'") from None
    if not isinstance(k, int) or not all(isinstance(x, int) for x in labels):
        raise ParameterError("labeling JSON values must be integers")
    return Labeling(tuple(labels), k)


def read_labeling(source) -> Labeling:
    return labeling_from_dict(json.loads(Path(source).read_text(encoding="utf-8")))


def write_labeling(lab: Labeling, dest) -> None:
    Path(dest).write_text(json.dumps(labeling_to_dict(lab)) + "\n", encoding="utf-8")


def to_dot(g: Graph, lab: Labeling | None = None, name: str = "G") -> str:
    """Graphviz text; with a labeling, vertices read ``"v (label)"`` and edges
    carry their induced label."""
    out = [f"graph {json.dumps(name)} {{"]
    for v in range(g.n):
        text = f"{v} ({lab[v]})" if lab is not None else str(v)
        out.append(f'  {v} [label="{text}"];')
    edge_labels = induced_edge_labels(g, lab) if lab is not None else {}
    for u, v in g.edges():
        if lab is not None:
            out.append(f'  {u} -- {v} [label="{edge_labels[(u, v)]}"];')
        else:
            out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"


def write_dot(g: Graph, lab: Labeling | None, stream: TextIO) -> None:
    stream.write(to_dot(g, lab))
