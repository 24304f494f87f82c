"""Commutation classes, the braid-move graph G(w), and its ranked poset P(w)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .errors import BudgetExceeded, InvariantViolation, WORD_BUDGET_DEFAULT
from .perm import Perm, check_perm, inversions, pattern_count
from .subnet import count_212
from .words import (
    Letters,
    Word,
    canonical_letters,
    count_reduced_words,
    reduced_letter_seqs,
)

Wires = tuple[int, int, int]
EdgeLabel = tuple[int, Wires]  # (braid index i, sorted value triple re-crossed)


@dataclass(frozen=True)
class WordScan:
    """Everything one sweep over all reduced words of w can tell us."""

    w: Perm
    word_count: int
    class_sizes: dict[Letters, int]  # canonical letters -> member count
    edges: dict[tuple[Letters, Letters], frozenset[EdgeLabel]]
    max_windows: int           # Y: most long-braid windows in a single word
    max_window_word: Letters   # lexicographically least word attaining it
    overlapping_windows: bool  # some word has two windows sharing a position


@lru_cache(maxsize=4096)
def _scan_impl(w: Perm) -> WordScan:
    n = len(w)
    sizes: dict[Letters, int] = {}
    edges: dict[tuple[Letters, Letters], set[EdgeLabel]] = {}
    best = -1
    best_word: Letters = ()
    overlap = False

    for ls in reduced_letter_seqs(w):
        canon = canonical_letters(ls)
        sizes[canon] = sizes.get(canon, 0) + 1

        windows = [
            p
            for p in range(len(ls) - 2)
            if ls[p] == ls[p + 2] and abs(ls[p + 1] - ls[p]) == 1
        ]
        if len(windows) > best:
            best = len(windows)
            best_word = ls
        if not overlap and any(q - p < 3 for p, q in zip(windows, windows[1:])):
            overlap = True

        for p in windows:
            i = ls[p + 1]
            if i != ls[p] - 1:  # record each edge from its downward side only
                continue
            # the three wires sit at positions i..i+2 just before the window
            seq = list(range(1, n + 1))
            for x in ls[:p]:
                seq[x - 1], seq[x] = seq[x], seq[x - 1]
            wires = tuple(sorted(seq[i - 1 : i + 2]))
            target = canonical_letters(ls[:p] + (i, ls[p], i) + ls[p + 3 :])
            key = (canon, target) if canon < target else (target, canon)
            edges.setdefault(key, set()).add((i, wires))

    return WordScan(
        w=w,
        word_count=sum(sizes.values()),
        class_sizes=sizes,
        edges={k: frozenset(v) for k, v in edges.items()},
        max_windows=best,
        max_window_word=best_word,
        overlapping_windows=overlap,
    )


def scan(w: Perm, budget: int = WORD_BUDGET_DEFAULT) -> WordScan:
    w = check_perm(w)
    total = count_reduced_words(w)
    if total > budget:
        raise BudgetExceeded(f"{total} reduced words exceed the budget of {budget}")
    return _scan_impl(w)


@dataclass(frozen=True)
class CommClass:
    id: int
    canonical: Word
    size: int


class Edge(NamedTuple):
    u: int
    v: int
    labels: tuple[EdgeLabel, ...]


class ClassGraph:
    """G(w): one vertex per commutation class, edges labeled by braid moves.

    Vertex ids are dense integers in lexicographic order of the
    canonical words, so output is reproducible.
    """

    def __init__(self, w: Perm, vertices: tuple[CommClass, ...], edges: tuple[Edge, ...]):
        self.w = w
        self.n = len(w)
        self.vertices = vertices
        self.edges = edges
        self._adj: dict[int, set[int]] = {c.id: set() for c in vertices}
        for e in edges:
            self._adj[e.u].add(e.v)
            self._adj[e.v].add(e.u)

    def __len__(self) -> int:
        return len(self.vertices)

    def neighbors(self, cid: int) -> set[int]:
        return self._adj[cid]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def class_by_canonical(self, letters: Letters) -> CommClass:
        return self.vertices[self._index[letters]]

    @property
    def _index(self) -> dict[Letters, int]:
        idx = getattr(self, "_index_cache", None)
        if idx is None:
            idx = {c.canonical.letters: c.id for c in self.vertices}
            self._index_cache = idx
        return idx


def class_members(letters: Letters) -> set[Letters]:
    """Every word in the commutation class of the given word (BFS over swaps)."""
    seen = {tuple(letters)}
    frontier = [tuple(letters)]
    while frontier:
        nxt = []
        for ls in frontier:
            for p in range(len(ls) - 1):
                if abs(ls[p] - ls[p + 1]) >= 2:
                    other = ls[:p] + (ls[p + 1], ls[p]) + ls[p + 2 :]
                    if other not in seen:
                        seen.add(other)
                        nxt.append(other)
        frontier = nxt
    return seen


def enumerate_classes(w: Perm, budget: int = WORD_BUDGET_DEFAULT) -> list[CommClass]:
    """The commutation classes of w, ordered by canonical word."""
    s = scan(w, budget)
    n = len(s.w)
    return [
        CommClass(i, Word(c, n), s.class_sizes[c])
        for i, c in enumerate(sorted(s.class_sizes))
    ]


def build_graph(w: Perm, budget: int = WORD_BUDGET_DEFAULT) -> ClassGraph:
    s = scan(w, budget)
    n = len(s.w)
    canon_order = sorted(s.class_sizes)
    ids = {c: i for i, c in enumerate(canon_order)}
    vertices = tuple(
        CommClass(i, Word(c, n), s.class_sizes[c]) for i, c in enumerate(canon_order)
    )
    edges = []
    for (a, b), labels in s.edges.items():
        u, v = sorted((ids[a], ids[b]))
        edges.append(Edge(u, v, tuple(sorted(labels))))
    edges.sort(key=lambda e: (e.u, e.v))
    return ClassGraph(s.w, vertices, tuple(edges))


@dataclass(frozen=True)
class RankedPoset:
    """P(w): classes ordered by downward braid moves, ranked by 212-count."""

    elements: tuple[int, ...]
    covers: tuple[tuple[int, int], ...]  # (upper, lower)
    rank: dict[int, int]


def build_poset(w: Perm, budget: int = WORD_BUDGET_DEFAULT) -> RankedPoset:
    g = build_graph(w, budget)
    ranks = {c.id: count_212(c.canonical) for c in g.vertices}
    sums = {c.id: sum(c.canonical.letters) for c in g.vertices}
    covers = []
    for e in g.edges:
        upper, lower = (e.u, e.v) if sums[e.u] > sums[e.v] else (e.v, e.u)
        if sums[upper] - sums[lower] != 1:
            raise InvariantViolation(
                f"edge {e.u}-{e.v} of G({w}) joins index sums "
                f"{sums[e.u]} and {sums[e.v]}"
            )
        if ranks[upper] - ranks[lower] != 1:
            raise InvariantViolation(
                f"cover {upper}->{lower} of P({w}) drops the 212-count by "
                f"{ranks[upper] - ranks[lower]}, not 1"
            )
        covers.append((upper, lower))
    n321 = pattern_count(w, (3, 2, 1))
    if set(ranks.values()) != set(range(n321 + 1)):
        raise InvariantViolation(
            f"ranks of P({w}) are {sorted(set(ranks.values()))}, "
            f"expected 0..{n321}"
        )
    covers.sort()
    return RankedPoset(tuple(c.id for c in g.vertices), tuple(covers), ranks)


@dataclass(frozen=True)
class GraphReport:
    connected: bool
    bipartite: bool  # index-sum parity is a proper 2-coloring

    @property
    def ok(self) -> bool:
        return self.connected and self.bipartite


def graph_checks(g: ClassGraph) -> GraphReport:
    if not g.vertices:
        return GraphReport(True, True)
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for u in frontier:
            for v in g.neighbors(u):
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    parity = {c.id: sum(c.canonical.letters) % 2 for c in g.vertices}
    bipartite = all(parity[e.u] != parity[e.v] for e in g.edges)
    return GraphReport(len(seen) == len(g.vertices), bipartite)


def graph_json(g: ClassGraph, poset: RankedPoset | None = None) -> dict:
    rank = poset.rank if poset is not None else None
    return {
        "schema": "redweave/1",
        "n": g.n,
        "w": list(g.w),
        "vertices": [
            {
                "id": c.id,
                "canonical": list(c.canonical.letters),
                "index_sum": sum(c.canonical.letters),
                "rank": rank[c.id] if rank is not None else None,
            }
            for c in g.vertices
        ],
        "edges": [
            {
                "u": e.u,
                "v": e.v,
                "labels": [{"letter": i, "wires": list(wires)} for i, wires in e.labels],
            }
            for e in g.edges
        ],
    }


def graph_dot(g: ClassGraph, poset: RankedPoset | None = None) -> str:
    lines = ["graph G {"]
    for c in g.vertices:
        label = ",".join(map(str, c.canonical.letters)) or "e"
        lines.append(f'  n{c.id} [label="{label}"];')
    if poset is not None:
        levels: dict[int, list[int]] = {}
        for cid, r in poset.rank.items():
            levels.setdefault(r, []).append(cid)
        for r in sorted(levels):
            ids = "; ".join(f"n{i}" for i in sorted(levels[r]))
            lines.append(f"  {{ rank=same; {ids}; }}")
    for e in g.edges:
        lines.append(f"  n{e.u} -- n{e.v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
