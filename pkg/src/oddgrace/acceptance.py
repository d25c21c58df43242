"""Acceptance checks, shared by ``oddgrace theorem-check`` and the test suite.

Each check returns a :class:`CheckResult`; ``detail`` says what was
compared and lists any mismatch.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from . import bounds, constructions
from .corpus import small_corpus
from .families import CompleteBipartite, NearComplete, generate, hexagonal_chain, ladder, prism
from .graph import Bipartition, bipartition, is_complete_bipartite
from .labeling import LabelOutOfRange, Labeling, parity_split, verify
from .oracle import brute_force_chi
from .solver import enumerate_optimal, exists_labeling, solve_chi_og


@dataclass(frozen=True)
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0


def _solve_all(cases) -> tuple[bool, list[str]]:
    ok, notes = True, []
    for spec, expected in cases:
        g = generate(spec)
        res = solve_chi_og(g)
        witness_ok = res.witness is not None and verify(g, res.witness).valid
        good = res.chi == expected and witness_ok
        ok &= good
        notes.append(f"{spec}: {res.chi} (expected {expected}){'' if good else ' MISMATCH'}")
    return ok, notes


def complete_bipartite_values() -> tuple[bool, str]:
    cases = [(CompleteBipartite(2, 2), 5), (CompleteBipartite(4, 2), 9), (CompleteBipartite(6, 2), 13),
             (CompleteBipartite(3, 2), 8), (CompleteBipartite(3, 3), 10), (CompleteBipartite(4, 3), 12),
             (CompleteBipartite(4, 4), 13)]
    ok, notes = _solve_all(cases)
    return ok, "; ".join(notes)


def near_complete_values() -> tuple[bool, str]:
    cases = [(NearComplete(3, 2, 1), 6), (NearComplete(3, 2, 2), 5), (NearComplete(3, 4, 2), 9),
             (NearComplete(4, 3, 1), 10), (NearComplete(5, 4, 1), 14), (NearComplete(5, 4, 2), 13),
             (NearComplete(5, 4, 3), 13)]
    ok, notes = _solve_all(cases)
    return ok, "; ".join(notes)


def deep_near_complete_values() -> tuple[bool, str]:
    ok, notes = _solve_all([(NearComplete(7, 6, 2), 22), (NearComplete(7, 6, 3), 21)])
    return ok, "; ".join(notes)


def _side_sets(g, k):
    """Set of (labels on side A, labels on side B) over all optimal labelings."""
    bip = bipartition(g)
    out = set()
    for lab in enumerate_optimal(g, k):
        out.add((frozenset(lab[v] for v in bip.u_side), frozenset(lab[v] for v in bip.w_side)))
    return bip, out


def classification() -> tuple[bool, str]:
    notes = []
    ok = True

    bip, sets = _side_sets(generate(CompleteBipartite(2, 2)), 5)
    pairs = {frozenset(p) for p in sets}
    want = {frozenset({frozenset({1, 5}), frozenset({2, 4})})}
    ok &= pairs == want
    notes.append(f"K 2 2 at 5: {_fmt(pairs)}")

    # K 4 2: u-side is the 4-vertex side, w-side has 2 vertices
    bip, sets = _side_sets(generate(CompleteBipartite(4, 2)), 9)
    want42 = {(frozenset({2, 4, 6, 8}), frozenset({1, 9}))}
    ok &= len(bip.w_side) == 2 and sets == want42
    notes.append(f"K 4 2 at 9 (4-side, 2-side): {_fmt(sets)}")

    bip, sets = _side_sets(generate(CompleteBipartite(4, 4)), 13)
    pairs = {frozenset(p) for p in sets}
    want = {frozenset({frozenset({1, 5, 9, 13}), frozenset({2, 4, 10, 12})})}
    ok &= pairs == want
    notes.append(f"K 4 4 at 13: {_fmt(pairs)}")
    return ok, "; ".join(notes)


def _set(labels) -> str:
    return "{" + ",".join(map(str, sorted(labels))) + "}"


def _fmt(found) -> str:
    """Deterministic text for a set of label-set pairs (ordered or not)."""
    parts = []
    for item in found:
        sides = sorted(item, key=sorted) if isinstance(item, frozenset) else item
        parts.append("{" + ", ".join(_set(x) for x in sides) + "}")
    return "[" + "; ".join(sorted(parts)) + "]"


def mobius_expected_k(n: int) -> int:
    if n == 5:
        return 18
    return 10 if n % 6 == 3 else 14


def constructions_grid() -> tuple[bool, str]:
    failures = []
    count = 0
    for m in range(2, 13):
        for n in range(2, m + 1):
            count += 1
            lab = constructions.label_complete_bipartite(m, n)
            want = bounds.known_exact(CompleteBipartite(m, n))
            if not verify(generate(CompleteBipartite(m, n)), lab).valid or lab.k != want:
                failures.append(f"K {m} {n}")
    for m in range(2, 13):
        for n in range(2, 15 - m):
            for r in range(1, n + 1):
                count += 1
                spec = NearComplete(m, n, r)
                lab = constructions.label_near_complete(m, n, r)
                want = bounds.known_exact(spec)
                g = generate(spec)
                if not verify(g, lab).valid or (want is not None and lab.k < want):
                    failures.append(f"K {m} {n} - K1 {r}")
    for n in range(3, 50, 2):
        count += 1
        lab = constructions.label_mobius(2 * n)
        if lab.k != mobius_expected_k(n):
            failures.append(f"mobius {2 * n}")
    detail = f"{count} constructions checked, {len(failures)} failures"
    if failures:
        detail += ": " + ", ".join(failures[:10])
    return not failures, detail


def bounds_sandwich() -> tuple[bool, str]:
    violations = []
    corpus = small_corpus()
    for g in corpus:
        bip = bipartition(g)
        assert isinstance(bip, Bipartition)
        chi = solve_chi_og(g).chi
        low = bounds.lower_bound_degree(g)
        up = min(bounds.upper_bound_square(g, bip=bip)[0], bounds.upper_bound_brooks(g, bip),
                 bounds.upper_bound_vertices(g, bip))
        if not low <= chi <= up:
            violations.append(f"{g}: {low} <= {chi} <= {up} fails")
        if not is_complete_bipartite(g, bip) and chi > 2 * g.n - 4:
            violations.append(f"{g}: {chi} > 2|V| - 4")
    return not violations, f"{len(corpus)} graphs, {len(violations)} violations" + (
        ": " + "; ".join(violations[:5]) if violations else "")


def oracle_equivalence() -> tuple[bool, str]:
    corpus = small_corpus()
    mismatches = []
    for g in corpus:
        a = solve_chi_og(g).chi
        b = brute_force_chi(g, 2 * g.n)
        if a != b:
            mismatches.append(f"{g}: solver {a}, oracle {b}")
    return not mismatches and len(corpus) >= 50, f"{len(corpus)} graphs, {len(mismatches)} mismatches" + (
        ": " + "; ".join(mismatches[:5]) if mismatches else "")


def zero_label_regression() -> tuple[bool, str]:
    g = generate(CompleteBipartite(2, 2))
    lab = Labeling((1, 3, 0, 4), 4)
    loose = verify(g, lab, min_label=0)
    strict = verify(g, lab)
    rejects = any(isinstance(x, LabelOutOfRange) and x.v == 2 for x in strict.violations)
    passed = loose.valid and not strict.valid and rejects
    return passed, (f"with 0 allowed valid={loose.valid}; shipped verifier valid={strict.valid}, "
                    f"violations={[type(x).__name__ for x in strict.violations]}")


def cubic_brooks_bound() -> tuple[bool, str]:
    ok = True
    notes = []
    # the ladder and chain have maximum degree 3; the prism is 3-regular
    graphs = [("ladder 12", ladder(12)), ("hexagonal chain 3", hexagonal_chain(3)), ("prism 8", prism(8))]
    for name, g in graphs:
        bip = bipartition(g)
        applicable = bounds.prop_d2_applicable(g, bip)
        value = bounds.upper_bound_brooks(g, bip)
        ok &= applicable and value == 22
        notes.append(f"{name}: applicable={applicable}, brooks={value}")
    name, g = min(graphs, key=lambda item: item[1].n)
    lab = exists_labeling(g, 22)
    witnessed = lab is not None and verify(g, lab).valid and parity_split(g, lab).consistent
    ok &= witnessed
    notes.append(f"{name}: labeling at k=22 {'found' if witnessed else 'NOT found'}, "
                 f"exact value {solve_chi_og(g).chi}")
    return ok, "; ".join(notes)


CHECKS: list[tuple[int, str, Callable[[], tuple[bool, str]]]] = [
    (1, "complete bipartite exact values", complete_bipartite_values),
    (2, "near-complete exact values", near_complete_values),
    (3, "near-complete deep case s=3", deep_near_complete_values),
    (4, "optimal label-set classification", classification),
    (5, "constructions validity grid", constructions_grid),
    (6, "bounds sandwich on small corpus", bounds_sandwich),
    (7, "oracle equivalence on small corpus", oracle_equivalence),
    (8, "label domain starts at 1", zero_label_regression),
    (9, "cubic Brooks-type bound of 22", cubic_brooks_bound),
]


def run_check(number: int) -> CheckResult:
    for num, name, fn in CHECKS:
        if num == number:
            start = time.monotonic()
            passed, detail = fn()
            return CheckResult(num, name, bool(passed), detail, time.monotonic() - start)
    raise KeyError(number)


def run_all(numbers=None) -> list[CheckResult]:
    wanted = [n for n, _, _ in CHECKS] if numbers is None else list(numbers)
    return [run_check(n) for n in wanted]
