"""Induced words on value subsets and subnetwork counting.

A word of w induces, on any m chosen values, the record of their mutual
crossings expressed in the alphabet 1..m-1.  A subset whose induced word
lies in a prescribed set X is an X-subnetwork.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable

from .errors import InputError, WORD_BUDGET_DEFAULT
from .perm import Perm, identity, inversions, longest_element, pattern_count, pattern_occurrences
from .words import (
    Letters,
    Word,
    canonical_letters,
    evaluate,
    index_sum,
    reduced_letter_seqs,
    enumerate_reduced_words,
)


@dataclass(frozen=True)
class WordSet:
    """A finite set of reduced words, all evaluating to one permutation of size m."""

    words: frozenset[Letters]
    m: int
    perm: Perm | None  # the common evaluation; None for the empty set


def word_set(words: Iterable[Letters], m: int) -> WordSet:
    ws = frozenset(tuple(w) for w in words)
    perm = None
    for ls in ws:
        p, reduced = evaluate(Word(ls, m))
        if not reduced:
            raise InputError(f"{ls} is not reduced over 1..{m - 1}")
        if perm is None:
            perm = p
        elif p != perm:
            raise InputError(f"words evaluate to different permutations: {perm} vs {p}")
    return WordSet(ws, m, perm)


# The set from the S_4 longest-word enumeration formula; digits 123212 etc.
WARRINGTON_X = word_set(
    [(1, 2, 3, 2, 1, 2), (3, 2, 1, 2, 3, 2), (2, 1, 2, 3, 2, 1), (2, 3, 2, 1, 2, 3)], 4
)

# The top commutation class of 321: the rank statistic of the class poset.
TOP_212 = word_set([(2, 1, 2)], 3)


def s4_longest_classes() -> list[WordSet]:
    """The commutation classes of the longest word of S_4, each as a WordSet."""
    groups: dict[Letters, list[Letters]] = {}
    for ls in reduced_letter_seqs((4, 3, 2, 1)):
        groups.setdefault(canonical_letters(ls), []).append(ls)
    return [word_set(groups[c], 4) for c in sorted(groups)]


def parse_word_set(text: str, m: int | None = None) -> WordSet:
    """Parse a semicolon-separated word set or a named preset.

    Presets: "warrington-x", "s4-longest-classes:K" for K in 0..7.
    """
    text = text.strip()
    if text == "warrington-x":
        return WARRINGTON_X
    if text.startswith("s4-longest-classes"):
        _, _, k = text.partition(":")
        try:
            return s4_longest_classes()[int(k)]
        except (ValueError, IndexError):
            raise InputError(
                "expected s4-longest-classes:K with K in 0..7"
            ) from None
    words = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "," in chunk or " " in chunk:
            words.append(tuple(int(x) for x in chunk.replace(",", " ").split()))
        else:
            words.append(tuple(int(c) for c in chunk))
    if not words and m is None:
        raise InputError("empty word set needs an explicit pattern size m")
    if m is None:
        m = max(max(w) for w in words) + 1
    return word_set(words, m)


def crossing_events(word: Word) -> list[tuple[int, int]]:
    """The value pairs swapped by each letter, in order (left value first)."""
    seq = list(range(1, word.n + 1))
    events = []
    for i in word.letters:
        u, v = seq[i - 1], seq[i]
        seq[i - 1], seq[i] = v, u
        events.append((u, v))
    return events


def _induced(events: list[tuple[int, int]], subset: tuple[int, ...]) -> Letters:
    chosen = set(subset)
    order = list(subset)
    out = []
    for u, v in events:
        if u in chosen and v in chosen:
            j = order.index(u)
            order[j], order[j + 1] = order[j + 1], order[j]
            out.append(j + 1)
    return tuple(out)


def induced_word(word: Word, subset: Iterable[int]) -> Word:
    """The reduced word a subset of values traces out under a word of w.

    Whenever a letter crosses two chosen values that are currently the
    j-th and (j+1)-th chosen values from the left, the letter j is
    emitted.

    >>> induced_word(Word((1, 2, 1, 3, 2), 4), [1, 2, 4]).letters
    (1, 2, 1)
    """
    sub = tuple(sorted(set(int(v) for v in subset)))
    if not sub or sub[0] < 1 or sub[-1] > word.n:
        raise InputError(f"subset {sub} not within 1..{word.n}")
    return Word(_induced(crossing_events(word), sub), len(sub))


def count_subnetworks(word: Word, x: WordSet) -> int:
    """Number of m-value subsets whose induced word lies in x."""
    if x.m > word.n or not x.words:
        return 0
    events = crossing_events(word)
    members = x.words
    return sum(
        1
        for sub in combinations(range(1, word.n + 1), x.m)
        if _induced(events, sub) in members
    )


def has_subnetwork(word: Word, x: WordSet) -> bool:
    if x.m > word.n or not x.words:
        return False
    events = crossing_events(word)
    members = x.words
    return any(
        _induced(events, sub) in members
        for sub in combinations(range(1, word.n + 1), x.m)
    )


def count_212(word: Word) -> int:
    """Number of 212-subnetworks; the rank statistic of the class poset."""
    return count_subnetworks(word, TOP_212)


def count_x_avoiding_words(w: Perm, x: WordSet, budget: int = WORD_BUDGET_DEFAULT) -> int:
    """How many reduced words of w induce no X-subnetwork at all."""
    return sum(
        1 for word in enumerate_reduced_words(w, budget) if not has_subnetwork(word, x)
    )


def count_x_avoiding_classes(w: Perm, x: WordSet, budget: int = WORD_BUDGET_DEFAULT) -> int:
    """How many commutation classes of w are X-avoiding.

    The subnetwork count is constant on a class, so testing each
    canonical representative once suffices.
    """
    n = len(w)
    seen: set[Letters] = set()
    avoiding = 0
    for word in enumerate_reduced_words(w, budget):
        canon = canonical_letters(word.letters)
        if canon in seen:
            continue
        seen.add(canon)
        if not has_subnetwork(Word(canon, n), x):
            avoiding += 1
    return avoiding


@dataclass(frozen=True)
class Friendliness:
    k: int | None        # None when w is not p-friendly
    vacuous: bool        # w has no 321-pattern at all
    pattern_has_321: bool


def friendliness(w: Perm, p: Perm) -> Friendliness:
    """The constant k if every 321-triple of w sits in exactly k p-patterns."""
    if pattern_count(p, (3, 2, 1)) == 0:
        return Friendliness(None, False, False)
    triples = [set(t) for t in pattern_occurrences(w, (3, 2, 1))]
    if not triples:
        return Friendliness(0, True, True)
    occs = [set(o) for o in pattern_occurrences(w, p)]
    counts = {sum(1 for o in occs if t <= o) for t in triples}
    if len(counts) == 1:
        return Friendliness(counts.pop(), False, True)
    return Friendliness(None, False, True)


@dataclass(frozen=True)
class FriendlyPrediction:
    predicted: int
    actual: int
    k: int
    c: int  # index sum of the lowest class of w
    x: WordSet


def _top_class(p: Perm) -> WordSet:
    """The commutation class of p with the highest index sum, as a WordSet."""
    groups: dict[Letters, list[Letters]] = {}
    for ls in reduced_letter_seqs(p):
        groups.setdefault(canonical_letters(ls), []).append(ls)
    top = max(groups, key=lambda c: (sum(c), c))
    return word_set(groups[top], len(p))


def predicted_count_friendly(w: Perm, word: Word, p: Perm) -> FriendlyPrediction:
    """k * index_sum(word) - c, alongside the directly counted value.

    Applies when p has exactly one 321-pattern, w is p-friendly with
    constant k, X is the top commutation class of p, and c is the index
    sum of the lowest commutation class of w.
    """
    if pattern_count(p, (3, 2, 1)) != 1:
        raise InputError(f"pattern {p} must contain exactly one 321-pattern")
    fr = friendliness(w, p)
    if fr.k is None:
        raise InputError(f"{w} is not {p}-friendly")
    wp, reduced = evaluate(word)
    if wp != w or not reduced:
        raise InputError(f"{word.letters} is not a reduced word of {w}")
    x = _top_class(p)
    c = min(sum(ls) for ls in reduced_letter_seqs(w))
    predicted = fr.k * index_sum(word) - c
    return FriendlyPrediction(predicted, count_subnetworks(word, x), fr.k, c, x)


def predicted_count_w0_s4(word: Word, n: int) -> int:
    """Closed form for the WARRINGTON_X subnetwork count on words of n,n-1,...,1."""
    wp, reduced = evaluate(word)
    if wp != longest_element(n) or not reduced:
        raise InputError(f"{word.letters} is not a reduced word of the longest element of S_{n}")
    return sum((i - 1) * (n - i - 1) for i in word.letters) - 2 * comb(n, 4)


def reverse_word(word: Word) -> tuple[Word, bool]:
    """The reversed word and whether it still evaluates to the same permutation.

    The reverse always evaluates to the inverse, so the flag holds
    exactly for involutions.
    """
    rev = Word(word.letters[::-1], word.n)
    return rev, evaluate(rev)[0] == evaluate(word)[0]


def complement_word(word: Word) -> tuple[Word, bool]:
    """Letters mapped r -> n-r, and whether the evaluation is unchanged."""
    comp = Word(tuple(word.n - r for r in word.letters), word.n)
    return comp, evaluate(comp)[0] == evaluate(word)[0]
