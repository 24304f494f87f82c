"""Structural analysis of G(w): braid maxima, hypercubes, rectangles, cycles."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations, product

from .classes import ClassGraph, build_graph, build_poset, class_members, scan
from .errors import InputError, InvariantViolation, WORD_BUDGET_DEFAULT
from .perm import Perm, avoids, pattern_occurrences
from .words import Letters, Word, braid_windows, canonical_letters, evaluate

# Containment of any of these makes G(w) fail to be a rectangle.  The
# list is closed under inversion (G(w) and G(w^-1) are isomorphic via
# word reversal) and verified complete against grid isomorphism for all
# of S_6: the classical triple 4321, 42531, 53142 alone misses e.g.
# 45231, whose graph is a 4-cycle with two pendant edges.
RECT_PATTERNS: tuple[Perm, ...] = (
    (4, 3, 2, 1),
    (4, 2, 5, 3, 1),
    (5, 3, 1, 4, 2),
    (5, 2, 4, 1, 3),
    (3, 5, 2, 4, 1),
    (4, 5, 2, 3, 1),
    (5, 3, 4, 1, 2),
    (4, 5, 3, 1, 2),
)


def max_braid_moves(w: Perm, budget: int = WORD_BUDGET_DEFAULT) -> int:
    """Y: the most long-braid windows any single reduced word of w has."""
    return scan(w, budget).max_windows


def is_freely_braided(w: Perm) -> bool:
    """True iff the 321-patterns of w occupy pairwise disjoint position sets.

    Then no two long braid moves ever interfere, so the classes form a
    hypercube and |G(w)| = 2^Y.  (Testing window overlap within single
    words is not enough: in 4231 the two conflicting moves never appear
    in the same word, yet |G| = 3.)
    """
    occs = [set(t) for t in pattern_occurrences(w, (3, 2, 1))]
    return all(not (a & b) for a, b in combinations(occs, 2))


@dataclass(frozen=True)
class HypercubeWitness:
    dimension: int
    base_word: Word
    # bit vector over the chosen disjoint moves -> class id in build_graph(w)
    classes: dict[tuple[int, ...], int]


def embed_hypercube(w: Perm, budget: int = WORD_BUDGET_DEFAULT) -> HypercubeWitness:
    """A hypercube of dimension >= ceil(Y/2) realized inside G(w).

    Starts from the lexicographically least word attaining Y, applies
    every subset of its same-direction braid moves (those are pairwise
    disjoint), and verifies the resulting classes form a hypercube.
    """
    s = scan(w, budget)
    g = build_graph(w, budget)
    ls = s.max_window_word
    windows = braid_windows(ls)
    down = [p for p in windows if ls[p + 1] == ls[p] - 1]
    up = [p for p in windows if ls[p + 1] == ls[p] + 1]
    chosen = down if len(down) >= len(up) else up
    k = len(chosen)
    need = (s.max_windows + 1) // 2
    if k < need or any(q - p < 3 for p, q in zip(chosen, chosen[1:])):
        raise InvariantViolation(
            f"same-direction moves of {ls} are not {need} disjoint windows"
        )
    classes: dict[tuple[int, ...], int] = {}
    for bits in product((0, 1), repeat=k):
        cur = list(ls)
        for bit, p in zip(bits, chosen):
            if bit:
                x, y = cur[p], cur[p + 1]
                cur[p : p + 3] = [y, x, y]
        classes[bits] = g.class_by_canonical(canonical_letters(tuple(cur))).id
    if len(set(classes.values())) != 2**k:
        raise InvariantViolation(f"subsets of moves of {ls} collide in G({w})")
    for bits, cid in classes.items():
        for j in range(k):
            other = bits[:j] + (1 - bits[j],) + bits[j + 1 :]
            if not g.has_edge(cid, classes[other]):
                raise InvariantViolation(
                    f"missing hypercube edge {bits} -- {other} in G({w})"
                )
    return HypercubeWitness(k, Word(ls, len(w)), classes)


def rectangular_witness(w: Perm) -> Perm | None:
    """The first forbidden pattern contained in w, or None."""
    for p in RECT_PATTERNS:
        if not avoids(w, p):
            return p
    return None


def is_rectangular(w: Perm) -> bool:
    """Pattern route: 4321-, 42531-, and 53142-avoiding."""
    return rectangular_witness(w) is None


@dataclass(frozen=True)
class RectangleSpec:
    dims: tuple[int, ...]
    labels: dict[int, tuple[int, ...]]  # class id -> lattice point


def _edges_commute(g: ClassGraph, v: int, v1: int, v2: int) -> bool:
    # edges (v, v1) and (v1, v2) lie on a common 4-cycle
    return any(
        c != v1 and g.has_edge(c, v2) for c in g.neighbors(v)
    )


def rectangle_label(w: Perm, budget: int = WORD_BUDGET_DEFAULT) -> RectangleSpec | None:
    """Grid labeling of G(w), or None when it fails to validate.

    Walks the class poset from its top: the unique maximum gets the zero
    vector, its covers get basis vectors, and each lower class gets
    either 2*v1 - v2 across a straight (non-commuting) edge pair or the
    sum of its covers' labels.  The result is returned only if it is a
    bijection onto a grid matching the graph's adjacency exactly.
    """
    g = build_graph(w, budget)
    try:
        poset = build_poset(w, budget)
    except InvariantViolation:
        return None
    rank = poset.rank
    maxr = max(rank.values())
    rows: dict[int, list[int]] = {}
    for cid, r in rank.items():
        rows.setdefault(r, []).append(cid)
    if len(rows[maxr]) != 1:
        return None
    top = rows[maxr][0]
    covered = sorted(
        g.neighbors(top), key=lambda cid: g.vertices[cid].canonical.letters
    )
    k = len(covered)
    labels: dict[int, tuple[int, ...]] = {top: (0,) * k}
    for j, cid in enumerate(covered):
        if rank[cid] != maxr - 1:
            return None
        labels[cid] = tuple(1 if h == j else 0 for h in range(k))
    for r in range(maxr - 2, -1, -1):
        for v in rows[r]:
            ups = [u for u in g.neighbors(v) if rank[u] == r + 1]
            if not ups or any(u not in labels for u in ups):
                return None
            candidates = []
            for v1 in ups:
                for v2 in g.neighbors(v1):
                    if rank[v2] == r + 2 and not _edges_commute(g, v, v1, v2):
                        candidates.append(
                            tuple(
                                2 * a - b for a, b in zip(labels[v1], labels[v2])
                            )
                        )
            if candidates:
                if len(set(candidates)) != 1:
                    return None
                labels[v] = candidates[0]
            else:
                labels[v] = tuple(
                    sum(labels[u][h] for u in ups) for h in range(k)
                )
    if len(labels) != len(g.vertices) or len(rows.get(0, [])) != 1:
        return None
    dims = labels[rows[0][0]]
    if any(d < 1 for d in dims):
        return None
    grid = set(product(*(range(d + 1) for d in dims)))
    if set(labels.values()) != grid or len(set(labels.values())) != len(labels):
        return None
    ids = [c.id for c in g.vertices]
    for i, u in enumerate(ids):
        for v in ids[i + 1 :]:
            diff = [abs(a - b) for a, b in zip(labels[u], labels[v])]
            unit = sum(diff) == 1
            if g.has_edge(u, v) != unit:
                return None
    # normalize coordinate order: dims weakly increasing, ties broken by the
    # canonical word of the basis class on that axis
    order = sorted(
        range(k), key=lambda j: (dims[j], g.vertices[covered[j]].canonical.letters)
    )
    dims = tuple(dims[j] for j in order)
    labels = {cid: tuple(pt[j] for j in order) for cid, pt in labels.items()}
    return RectangleSpec(dims, labels)


class CycleVerdict(Enum):
    FOUR_CYCLE = "four_cycle"
    EIGHT_CYCLE = "eight_cycle"
    NO_INDUCED_CYCLE = "no_induced_cycle"


def _is_w0_s4_substring(ls: Letters, lo: int, hi: int) -> bool:
    if lo < 0 or hi > len(ls):
        return False
    seg = ls[lo:hi]
    base = min(seg)
    if max(seg) - base != 2:
        return False
    shifted = tuple(x - base + 1 for x in seg)
    p, reduced = evaluate(Word(shifted, 4))
    return reduced and p == (4, 3, 2, 1)


def classify_edge_pair(g: ClassGraph, v: int, a: int, b: int) -> CycleVerdict:
    """Whether the edges (v,a) and (v,b) lie on an induced 4- or 8-cycle.

    Combinatorial route: a member word of v realizing both moves on
    disjoint windows gives a 4-cycle; the two edges both arising from
    braid moves inside a common 6-letter substring shaped like a reduced
    word of the S_4 longest element give an 8-cycle (the substring's own
    class graph is the induced 8-cycle).  Otherwise there is none.
    """
    if a == b or not g.has_edge(v, a) or not g.has_edge(v, b):
        raise InputError(f"need two distinct edges at vertex {v}")
    members = sorted(class_members(g.vertices[v].canonical.letters))
    for ls in members:
        realized: dict[int, list[int]] = {a: [], b: []}
        for p in braid_windows(ls):
            x, y = ls[p], ls[p + 1]
            tid = g.class_by_canonical(
                canonical_letters(ls[:p] + (y, x, y) + ls[p + 3 :])
            ).id
            if tid in realized:
                realized[tid].append(p)
        if any(
            abs(p - q) >= 3 for p in realized[a] for q in realized[b]
        ):
            return CycleVerdict.FOUR_CYCLE
    for ls in members:
        for t in range(len(ls) - 5):
            if not _is_w0_s4_substring(ls, t, t + 6):
                continue
            # braid moves available anywhere in the substring's own
            # commutation class; the two that leave it are the edges of
            # the embedded 8-cycle at this vertex
            targets = set()
            for seg in class_members(ls[t : t + 6]):
                for p in braid_windows(seg):
                    x, y = seg[p], seg[p + 1]
                    moved = ls[:t] + seg[:p] + (y, x, y) + seg[p + 3 :] + ls[t + 6 :]
                    targets.add(g.class_by_canonical(canonical_letters(moved)).id)
            if a in targets and b in targets:
                return CycleVerdict.EIGHT_CYCLE
    return CycleVerdict.NO_INDUCED_CYCLE


def edge_label_report(g: ClassGraph) -> list[str]:
    """Edges whose realizing moves disagree on the wire triple (expected none)."""
    out = []
    for e in g.edges:
        wires = {ws for _, ws in e.labels}
        if len(wires) != 1:
            out.append(f"edge {e.u}-{e.v} of G({g.w}) carries wire triples {sorted(wires)}")
    return out
