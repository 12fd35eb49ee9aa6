"""Sweep suites behind the `verify` CLI subcommand.

Each suite returns a list of row dicts (case / status / detail) plus an
overall pass flag, so the CLI can render them as a table or as JSON.
"""

from __future__ import annotations

import random

from .characterize import decompose_caw, predicted_aut_order, verify_wreath_theorem
from .closure import closure_of_graph
from .graphs import (
    Graph,
    complete,
    count_automorphisms,
    cycle,
    elementary_caw,
    empty_graph,
    from_edges,
    lex_product,
)
from .schemes import dihedral_scheme, is_association, schemes_isomorphic


def _row(case: str, ok: bool, detail: str = "") -> dict:
    return {"case": case, "status": "pass" if ok else "FAIL", "detail": detail}


def dihedral_cases(bound: int) -> list[tuple[int, int]]:
    return [
        (n, k)
        for n in range(5, bound + 1)
        for k in range(1, n)
        if 2 * k + 2 < n
    ]


def run_dihedral_suite(bound: int) -> tuple[list[dict], bool]:
    """closure(C_{n,k}) must be the dihedral scheme for all 2k+2 < n <= bound."""
    rows = []
    ok_all = True
    for n, k in dihedral_cases(bound):
        cc = closure_of_graph(elementary_caw(n, k))
        want_rank = n // 2 + 1
        verdict = schemes_isomorphic(cc, dihedral_scheme(n), point_limit=bound)
        ok = is_association(cc) and cc.rank == want_rank and verdict.kind == "iso"
        detail = f"rank={cc.rank} association={is_association(cc)} iso={verdict.kind}"
        rows.append(_row(f"C_{{{n},{k}}}", ok, detail))
        ok_all &= ok
    return rows, ok_all


def _random_graph(rng: random.Random, n: int) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5
    ]
    return from_edges(n, edges)


def run_wreath_suite(bound: int, seed: int = 0, samples: int = 20) -> tuple[list[dict], bool]:
    """Fusion/isomorphism checks between lexicographic products and wreath
    products of schemes, including the complete[complete] counterexample."""
    rng = random.Random(seed)
    rows = []
    ok_all = True

    fixed = [
        (2, cycle(5)),
        (2, from_edges(3, [(0, 1), (1, 2)])),  # path: non-association outer
        (3, empty_graph(3)),
        (2, elementary_caw(6, 2)),
    ]
    cases = [c for c in fixed if c[0] * c[1].n <= bound]
    while len(cases) < len(fixed) + samples:
        r = rng.randint(1, 3)
        n = rng.randint(2, 8)
        if r * n <= bound:
            cases.append((r, _random_graph(rng, n)))

    for i, (r, outer) in enumerate(cases):
        report = verify_wreath_theorem(r, outer, size_limit=bound)
        ok = report.fusion_holds and (not report.iso_asserted or report.iso.kind == "iso")
        detail = (
            f"fusion={report.fusion_holds} iso_asserted={report.iso_asserted} "
            f"iso={report.iso.kind}"
        )
        rows.append(_row(f"wreath[{i}] r={r} outer_n={outer.n}", ok, detail))
        ok_all &= ok

    # complete[complete]: fusion holds but the schemes differ (rank 2 vs 3)
    counter = verify_wreath_theorem(3, complete(2), size_limit=max(bound, 6))
    ok = counter.fusion_holds and counter.iso.kind == "not-iso" and not counter.iso_asserted
    rows.append(
        _row(
            "counterexample K_2[K_3]",
            ok,
            f"fusion={counter.fusion_holds} iso={counter.iso.kind}",
        )
    )
    ok_all &= ok
    return rows, ok_all


def aut_cases(bound: int) -> list[tuple[int, int, int]]:
    out = []
    for m in range(1, bound + 1):
        for r in range(1, bound // m + 1):
            for k in range(0, m):
                if 2 * k + 1 < m or (m == 1 and k == 0):
                    out.append((m, k, r))
    return out


def run_aut_suite(bound: int) -> tuple[list[dict], bool]:
    """Brute-force automorphism counts must match the closed-form order."""
    rows = []
    ok_all = True
    for m, k, r in aut_cases(bound):
        g = lex_product(elementary_caw(m, k), complete(r)) if m > 1 else complete(r)
        counted = count_automorphisms(g, limit=bound)
        predicted = predicted_aut_order(m, k, r)
        certified = decompose_caw(g).ok
        ok = counted == predicted and certified
        rows.append(
            _row(
                f"(m={m}, k={k}, r={r})",
                ok,
                f"counted={counted} predicted={predicted} certified={certified}",
            )
        )
        ok_all &= ok
    return rows, ok_all


def run_all(bound: int, seed: int = 0) -> tuple[dict[str, list[dict]], bool]:
    tables = {}
    ok_all = True
    for name, runner in (
        ("dihedral", lambda: run_dihedral_suite(bound)),
        ("wreath", lambda: run_wreath_suite(bound, seed=seed)),
        ("aut", lambda: run_aut_suite(min(bound, 12))),
    ):
        rows, ok = runner()
        tables[name] = rows
        ok_all &= ok
    return tables, ok_all
