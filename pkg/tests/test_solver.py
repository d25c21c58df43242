import itertools
import random

import numpy as np
import pytest

from oddgrace.corpus import bipartite_classes, small_corpus
from oddgrace.errors import DisconnectedError, InfeasibleError, ParameterError, ResourceError
from oddgrace.families import CompleteBipartite, Cycle, NearComplete, Path, generate
from oddgrace.graph import Bipartition, Graph, bipartition, is_connected
from oddgrace.labeling import Labeling, complement, parity_split, verify
from oddgrace.oracle import NotFoundBelowCap, brute_force_chi, valid_mask
from oddgrace.solver import (SolveOptions, SolveStats, enumerate_optimal, exists_labeling, optimal_label_sets,
                             solve_chi_og, twin_classes, variable_order)


def lexmin_labeling(g, k):
    """Smallest valid label vector in lexicographic order, by plain enumeration."""
    for labels in itertools.product(range(1, k + 1), repeat=g.n):
        lab = Labeling(labels, k)
        if verify(g, lab).valid:
            return lab
    return None


def star(leaves):
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def test_exists_examples():
    p3 = generate(Path(3))
    assert exists_labeling(p3, 3) is None
    lab = exists_labeling(p3, 4)
    assert lab is not None and verify(p3, lab).valid
    assert lab[1] == 4 and sorted((lab[0], lab[2])) == [1, 3]
    assert exists_labeling(generate(CompleteBipartite(2, 2)), 4) is None


@pytest.mark.parametrize("spec,chi", [
    (CompleteBipartite(2, 2), 5), (CompleteBipartite(3, 2), 8), (NearComplete(3, 2, 1), 6),
    (Path(2), 2), (Path(3), 4), (Cycle(4), 5), (Cycle(6), 6),
])
def test_solve_examples(spec, chi):
    g = generate(spec)
    res = solve_chi_og(g)
    assert res.chi == chi
    assert res.witness.k == chi and verify(g, res.witness).valid
    assert parity_split(g, res.witness).consistent
    assert exists_labeling(g, chi - 1) is None


def test_solve_not_bipartite():
    res = solve_chi_og(generate(Cycle(7)))
    assert res.infinite and res.witness is None


def test_solve_disconnected():
    with pytest.raises(DisconnectedError):
        solve_chi_og(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_isolated_vertices_allowed():
    # K 3 2 - K1 2 leaves vertex 2 isolated
    g = generate(NearComplete(3, 2, 2))
    res = solve_chi_og(g)
    assert res.chi == 5 and res.witness[2] == 1


def test_k_max_too_low():
    with pytest.raises(InfeasibleError):
        solve_chi_og(generate(CompleteBipartite(3, 3)), SolveOptions(k_max=9))


def test_resource_limit_carries_stats():
    with pytest.raises(ResourceError) as info:
        solve_chi_og(generate(CompleteBipartite(5, 5)), SolveOptions(node_limit=50))
    assert info.value.stats.nodes_explored >= 50


def test_node_limit_from_environment(monkeypatch):
    monkeypatch.setenv("OGK_NODE_LIMIT", "20")
    with pytest.raises(ResourceError):
        solve_chi_og(generate(CompleteBipartite(5, 5)))


def test_options_validated():
    with pytest.raises(ParameterError):
        SolveOptions(node_limit=0)
    with pytest.raises(ParameterError):
        SolveOptions(time_limit=-1)


def test_oracle_examples():
    assert brute_force_chi(generate(Path(3)), 6) == 4
    assert brute_force_chi(generate(Cycle(4)), 8) == 5
    assert brute_force_chi(star(2), 6) == 4
    assert brute_force_chi(star(3), 8) == 6
    assert brute_force_chi(generate(Path(3)), 3) == NotFoundBelowCap(3)
    assert brute_force_chi(generate(Cycle(5)), 9) == NotFoundBelowCap(9)
    with pytest.raises(ParameterError):
        brute_force_chi(generate(Path(8)), 10)


def test_oracle_checker_matches_verify():
    rng = np.random.default_rng(4)
    for g in bipartite_classes(5) + [generate(Cycle(5))]:
        block = rng.integers(1, 8, size=(400, g.n))
        fast = valid_mask(g, block)
        slow = [verify(g, Labeling(tuple(int(x) for x in row), 7)).valid for row in block]
        assert list(fast) == slow


def test_oracle_equivalence_on_corpus():
    corpus = small_corpus()
    assert len(corpus) >= 50
    for g in corpus:
        assert solve_chi_og(g).chi == brute_force_chi(g, 2 * g.n), g


def test_star_values():
    for leaves in range(1, 7):
        assert solve_chi_og(star(leaves)).chi == 2 * leaves


def _random_bipartite_pair(rng):
    while True:
        a = rng.randint(1, 3)
        b = rng.randint(2, 7 - a)
        cross = [(i, a + j) for i in range(a) for j in range(b)]
        edges = [e for e in cross if rng.random() < 0.7]
        g = Graph.from_edges(a + b, edges)
        if not is_connected(g):
            continue
        sub = [e for e in edges if rng.random() < 0.8]
        h = Graph.from_edges(a + b, sub)
        if is_connected(h):
            return h, g


def test_monotone_under_edge_deletion():
    rng = random.Random(17)
    for _ in range(200):
        h, g = _random_bipartite_pair(rng)
        assert solve_chi_og(h).chi <= solve_chi_og(g).chi


def test_deterministic_results():
    for spec in (CompleteBipartite(4, 3), NearComplete(5, 4, 2), Cycle(10)):
        g = generate(spec)
        runs = [solve_chi_og(g, SolveOptions(canonical_witness=True)) for _ in range(3)]
        assert len({r.chi for r in runs}) == 1
        assert len({r.witness for r in runs}) == 1
        assert len({r.stats.parity_cases_tried for r in runs}) == 1
        assert len({r.stats.nodes_explored for r in runs}) == 1


def test_canonical_witness_is_lexicographic_minimum():
    graphs = [generate(Path(3)), generate(Path(4)), generate(Cycle(4)), generate(CompleteBipartite(3, 2)),
              generate(NearComplete(3, 2, 1)), star(3)] + bipartite_classes(5)[3:8]
    for g in graphs:
        res = solve_chi_og(g, SolveOptions(canonical_witness=True))
        assert res.witness == lexmin_labeling(g, res.chi), g


def test_even_k_searches_one_parity_case():
    g = generate(CompleteBipartite(3, 3))
    stats = SolveStats()
    exists_labeling(g, 8, stats=stats)
    assert stats.parity_cases_tried == 1
    stats = SolveStats()
    exists_labeling(g, 9, stats=stats)
    assert stats.parity_cases_tried == 2


def test_enumeration_examples():
    assert list(enumerate_optimal(generate(Path(2)), 1)) == []
    assert sorted(lab.labels for lab in enumerate_optimal(generate(Path(2)), 2)) == [(1, 2), (2, 1)]

    rep = optimal_label_sets(generate(CompleteBipartite(2, 2)), 5)
    assert rep.pairs == (((1, 5), (2, 4)),) and not rep.anomalies

    g = generate(CompleteBipartite(4, 2))
    rep = optimal_label_sets(g, 9)
    assert rep.pairs == (((1, 9), (2, 4, 6, 8)),)
    for lab in enumerate_optimal(g, 9):
        assert sorted(lab.labels[4:]) == [1, 9]

    rep = optimal_label_sets(generate(CompleteBipartite(4, 4)), 13)
    assert rep.pairs == (((1, 5, 9, 13), (2, 4, 10, 12)),)


def brute_enumerate(g, k):
    return {labels for labels in itertools.product(range(1, k + 1), repeat=g.n)
            if verify(g, Labeling(labels, k)).valid}


@pytest.mark.parametrize("spec,k", [
    (Path(3), 4), (Path(3), 5), (Path(4), 6), (Cycle(4), 5), (Cycle(4), 6), (CompleteBipartite(3, 2), 8),
    (NearComplete(3, 2, 1), 6), (NearComplete(3, 2, 1), 7),
])
def test_enumeration_is_complete_and_closed_under_complement(spec, k):
    g = generate(spec)
    found = [lab.labels for lab in enumerate_optimal(g, k)]
    assert len(found) == len(set(found))
    assert set(found) == brute_enumerate(g, k)
    for labels in found:
        assert complement(Labeling(labels, k)).labels in set(found)


def test_enumeration_flags_labelings_below_k():
    rep = optimal_label_sets(generate(Path(3)), 5)
    assert rep.anomalies and all(lab.max_label < 5 for lab in rep.anomalies)


def test_enumeration_rejects_isolated_vertices():
    with pytest.raises(DisconnectedError):
        list(enumerate_optimal(generate(NearComplete(3, 2, 2)), 5))


def test_twin_classes_and_order():
    g = generate(NearComplete(3, 2, 1))
    assert twin_classes(g) == [(0, 1), (2,), (3,), (4,)]
    assert sorted(variable_order(g)) == list(range(5))


def test_witnesses_split_parity_on_corpus():
    for g in small_corpus():
        res = solve_chi_og(g)
        bip = bipartition(g)
        assert isinstance(bip, Bipartition)
        assert verify(g, res.witness).valid and parity_split(g, res.witness, bip).consistent


@pytest.mark.slow
def test_deep_near_complete_values():
    assert solve_chi_og(generate(NearComplete(7, 6, 2))).chi == 22
    res = solve_chi_og(generate(NearComplete(7, 6, 3)))
    assert res.chi == 21 and verify(generate(NearComplete(7, 6, 3)), res.witness).valid
