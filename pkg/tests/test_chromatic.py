import itertools
import random

import pytest

from oddgrace.chromatic import (ProperColoring, chi_exact, circulant_12_coloring, dsatur_coloring,
                                greedy_coloring, is_proper_coloring)
from oddgrace.errors import ParameterError, ResourceError
from oddgrace.families import Circulant, CompleteBipartite, Cycle, generate
from oddgrace.graph import Graph, is_complete, is_connected, is_odd_cycle, max_degree


def brute_chi(g):
    """Smallest c with a proper colouring, by trying every vector."""
    if g.n == 0:
        return 0
    edges = g.edges()
    for c in range(1, g.n + 1):
        # vertex 0 may be fixed to colour 1
        for rest in itertools.product(range(1, c + 1), repeat=g.n - 1):
            colors = (1,) + rest
            if all(colors[u] != colors[v] for u, v in edges):
                return c
    raise AssertionError("unreachable")


def random_graph(rng, n, p):
    return Graph.from_edges(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p])


def _corpus():
    graphs = []
    for n in range(1, 6):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            graphs.append(Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1]))
    rng = random.Random(3)
    for _ in range(60):
        graphs.append(random_graph(rng, 6, rng.choice([0.3, 0.5, 0.7])))
    for _ in range(12):
        graphs.append(random_graph(rng, rng.choice([7, 8]), rng.choice([0.3, 0.45])))
    return graphs


CORPUS = _corpus()


def test_greedy_examples():
    assert greedy_coloring(Graph.from_edges(5, [])).num_colors == 1
    k5 = generate(Circulant(5, (1, 2)))
    assert greedy_coloring(k5, [4, 2, 0, 1, 3]).num_colors == 5
    assert greedy_coloring(generate(Cycle(7))).num_colors == 3


def test_greedy_and_dsatur_proper_within_degree_bound():
    rng = random.Random(8)
    for g in CORPUS[::7]:
        order = list(range(g.n))
        rng.shuffle(order)
        for col in (greedy_coloring(g, order), dsatur_coloring(g)):
            assert is_proper_coloring(g, col.colors)
            assert col.num_colors <= max_degree(g) + 1
            assert sorted(set(col.colors)) == list(range(1, col.num_colors + 1))


def test_chi_exact_examples():
    assert chi_exact(generate(Circulant(9, (1, 2)))).num_colors == 3
    assert chi_exact(generate(Circulant(5, (1, 2)))).num_colors == 5
    assert chi_exact(generate(Circulant(11, (1, 2)))).num_colors == 4
    assert brute_chi(generate(Circulant(11, (1, 2)))) == 4


def test_chi_exact_matches_brute_force():
    for g in CORPUS:
        col = chi_exact(g)
        assert col.is_proper(g)
        assert col.num_colors == brute_chi(g), g


def test_brooks_bound():
    for g in CORPUS:
        if g.n == 0 or not is_connected(g):
            continue
        c = chi_exact(g).num_colors
        delta = max_degree(g)
        assert c <= delta + 1
        if c == delta + 1:
            assert is_complete(g) or is_odd_cycle(g)


def test_chi_exact_size_limit():
    big = generate(CompleteBipartite(21, 21))
    with pytest.raises(ResourceError, match="greedy"):
        chi_exact(big)
    assert chi_exact(big, limit=50).num_colors == 2


def test_chi_exact_deterministic():
    g = generate(Circulant(13, (1, 2)))
    assert chi_exact(g) == chi_exact(g)


@pytest.mark.parametrize("n,colors", [(9, 3), (7, 4), (5, 5), (3, 3), (15, 3), (13, 4), (11, 4)])
def test_circulant_12_coloring_examples(n, colors):
    assert circulant_12_coloring(n).num_colors == colors


def test_circulant_12_coloring_grid():
    for n in range(3, 100, 2):
        col = circulant_12_coloring(n)
        g = generate(Circulant(n, (1, 2)))
        assert col.is_proper(g), n
        assert sorted(set(col.colors)) == list(range(1, col.num_colors + 1))
        assert col.num_colors == chi_exact(g, limit=100).num_colors


def test_circulant_12_coloring_rejects_even():
    with pytest.raises(ParameterError):
        circulant_12_coloring(8)


def test_from_colors_compacts():
    col = ProperColoring.from_colors([7, 3, 7, 9])
    assert col == ProperColoring((2, 1, 2, 3), 3)
