"""Batch invariant suite: every structural guarantee, checked per permutation."""

from __future__ import annotations

from itertools import combinations

from .bounds import aggregate_bound_check
from .classes import build_graph, build_poset, graph_checks
from .errors import InvariantViolation, WORD_BUDGET_DEFAULT
from .perm import Perm, avoids, enumerate_sn, inversions, pattern_count
from .structure import (
    CycleVerdict,
    classify_edge_pair,
    edge_label_report,
    embed_hypercube,
    is_freely_braided,
    is_rectangular,
    max_braid_moves,
    rectangle_label,
)


def check_permutation(w: Perm, budget: int = WORD_BUDGET_DEFAULT) -> list[str]:
    """All per-permutation invariants; returns human-readable violations."""
    out: list[str] = []
    g = build_graph(w, budget)
    rep = graph_checks(g)
    if not rep.connected:
        out.append(f"G({w}) is not connected")
    if not rep.bipartite:
        out.append(f"G({w}) is not bipartite by index-sum parity")
    out.extend(edge_label_report(g))

    try:
        build_poset(w, budget)  # validates rank interval and cover drops
    except InvariantViolation as exc:
        out.append(str(exc))

    l = inversions(w)
    n321 = pattern_count(w, (3, 2, 1))
    y = max_braid_moves(w, budget)
    actual = len(g)
    half = (y + 1) // 2
    if not (2**half + n321 - half <= actual):
        out.append(f"lower bound fails for {w}")
    if l >= 1 and not actual < 3**l:
        out.append(f"upper bound fails for {w}")

    try:
        embed_hypercube(w, budget)
    except InvariantViolation as exc:
        out.append(str(exc))

    if is_freely_braided(w) and actual != 2**y:
        out.append(f"freely braided {w} has {actual} classes, expected 2^{y}")

    if is_rectangular(w) != (rectangle_label(w, budget) is not None):
        out.append(f"rectangularity pattern test and labeling disagree for {w}")

    is_path = (
        rep.connected
        and len(g.edges) == actual - 1
        and all(len(g.neighbors(c.id)) <= 2 for c in g.vertices)
    )
    if is_path and actual != n321 + 1:
        out.append(f"G({w}) is a path with {actual} != N321+1 = {n321 + 1} vertices")

    if avoids(w, (4, 3, 2, 1)):
        for c in g.vertices:
            for a, b in combinations(sorted(g.neighbors(c.id)), 2):
                if classify_edge_pair(g, c.id, a, b) is CycleVerdict.EIGHT_CYCLE:
                    out.append(
                        f"4321-avoiding {w} has an induced 8-cycle at vertex {c.id}"
                    )
    return out


def _worker(args: tuple[Perm, int]) -> tuple[Perm, list[str]]:
    w, budget = args
    return w, check_permutation(w, budget)


def scan_sn(n: int, budget: int = WORD_BUDGET_DEFAULT, threads: int = 1,
            cap: int = 8) -> list[str]:
    """Run the invariant suite over all of S_n; returns all violations."""
    perms = list(enumerate_sn(n, cap=cap))
    if threads > 1:
        from multiprocessing import get_context

        with get_context("spawn").Pool(threads) as pool:
            results = pool.map(_worker, [(w, budget) for w in perms])
    else:
        results = [_worker((w, budget)) for w in perms]
    out: list[str] = []
    for _, violations in results:
        out.extend(violations)
    # aggregate bound, one check per nontrivial word length
    max_l = n * (n - 1) // 2
    for l in range(1, max_l + 1):
        rep = aggregate_bound_check(n, l, budget, cap=cap)
        if not rep.ok:
            out.append(f"aggregate bound fails for n={n}, l={l}: {rep}")
    return out
