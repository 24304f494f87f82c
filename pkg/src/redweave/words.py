"""Reduced words: evaluation, enumeration, braid moves, canonical forms.

Letters are 1-based and act on positions: letter i swaps the entries at
positions i and i+1 of the one-line notation.  A word is reduced when its
length equals the inversion number of the permutation it evaluates to.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterator, NamedTuple

from .errors import BudgetExceeded, InputError, WORD_BUDGET_DEFAULT
from .perm import Perm, identity, inversions

Letters = tuple[int, ...]


class Word(NamedTuple):
    letters: Letters
    n: int  # ambient size: letters range over 1..n-1


class MoveKind(Enum):
    COMMUTATION = "commutation"
    BRAID_UP = "braid_up"      # window (i, i+1, i); raises the index sum by 1
    BRAID_DOWN = "braid_down"  # window (i+1, i, i+1); lowers the index sum by 1


class Move(NamedTuple):
    kind: MoveKind
    pos: int  # 1-based index of the leftmost letter of the affected window


def word_of(letters, n: int) -> Word:
    letters = tuple(int(x) for x in letters)
    bad = [x for x in letters if not 1 <= x <= n - 1]
    if bad:
        raise InputError(f"letters {bad} out of range 1..{n - 1}")
    return Word(letters, n)


def parse_word(text: str, n: int) -> Word:
    """Parse "2,1,3,2,3", "2 1 3 2 3", or compact digits "21323" (letters <= 9)."""
    text = text.strip()
    if not text:
        return Word((), n)
    if "," in text or " " in text:
        parts = text.replace(",", " ").split()
    else:
        parts = list(text)
    try:
        letters = [int(p) for p in parts]
    except ValueError:
        raise InputError(f"cannot parse word: {text!r}") from None
    return word_of(letters, n)


def evaluate(word: Word) -> tuple[Perm, bool]:
    """Apply the letters left to right to the identity.

    Returns the resulting permutation and whether the word is reduced.

    >>> evaluate(Word((1, 2, 1, 3, 2), 4))
    ((3, 4, 2, 1), True)
    >>> evaluate(Word((1, 1), 3))
    ((1, 2, 3), False)
    """
    seq = list(range(1, word.n + 1))
    for i in word.letters:
        if not 1 <= i <= word.n - 1:
            raise InputError(f"letter {i} out of range for n={word.n}")
        seq[i - 1], seq[i] = seq[i], seq[i - 1]
    w = tuple(seq)
    return w, len(word.letters) == inversions(w)


def is_reduced(word: Word) -> bool:
    return evaluate(word)[1]


def index_sum(word: Word) -> int:
    return sum(word.letters)


def _left_descents(p: Perm) -> list[int]:
    # i such that the value i+1 occurs to the left of the value i
    pos = {v: idx for idx, v in enumerate(p)}
    return [i for i in range(1, len(p)) if pos[i + 1] < pos[i]]


def _swap_values(p: Perm, i: int) -> Perm:
    # left-multiply by s_i: exchange the values i and i+1 wherever they sit
    q = list(p)
    a, b = q.index(i), q.index(i + 1)
    q[a], q[b] = q[b], q[a]
    return tuple(q)


def count_reduced_words(w: Perm) -> int:
    """|R(w)| by the descent recursion, memoized over subpermutations.

    >>> count_reduced_words((4, 3, 2, 1))
    16
    """
    memo: dict[Perm, int] = {identity(len(w)): 1}

    def rec(p: Perm) -> int:
        got = memo.get(p)
        if got is not None:
            return got
        total = sum(rec(_swap_values(p, i)) for i in _left_descents(p))
        memo[p] = total
        return total

    return rec(w)


def reduced_letter_seqs(w: Perm) -> Iterator[Letters]:
    """Yield the reduced letter sequences of w, lexicographically.

    The first letter of a reduced word of w may be any left descent i
    (the value i+1 precedes the value i); the rest is a reduced word of
    s_i * w.  Ascending choice of i gives lexicographic order.
    """
    n = len(w)
    ident = identity(n)
    buf: list[int] = []

    def rec(p: Perm) -> Iterator[Letters]:
        if p == ident:
            yield tuple(buf)
            return
        for i in _left_descents(p):
            buf.append(i)
            yield from rec(_swap_values(p, i))
            buf.pop()

    return rec(w)


def enumerate_reduced_words(w: Perm, budget: int = WORD_BUDGET_DEFAULT) -> Iterator[Word]:
    """Every reduced word of w exactly once, lexicographic by letters."""
    total = count_reduced_words(w)
    if total > budget:
        raise BudgetExceeded(f"{total} reduced words exceed the budget of {budget}")
    n = len(w)
    return (Word(ls, n) for ls in reduced_letter_seqs(w))


def braid_windows(letters: Letters) -> list[int]:
    """0-based positions p where letters[p:p+3] is a long-braid window."""
    return [
        p
        for p in range(len(letters) - 2)
        if letters[p] == letters[p + 2] and abs(letters[p + 1] - letters[p]) == 1
    ]


def list_moves(word: Word) -> list[Move]:
    """All commutation positions and long-braid windows of a reduced word.

    Overlapping windows are each reported.

    >>> [(m.kind.value, m.pos) for m in list_moves(Word((2, 1, 2, 3, 2), 4))]
    [('braid_down', 1), ('braid_up', 3)]
    """
    ls = word.letters
    out = []
    for p in range(len(ls) - 1):
        if abs(ls[p] - ls[p + 1]) >= 2:
            out.append(Move(MoveKind.COMMUTATION, p + 1))
    for p in braid_windows(ls):
        kind = MoveKind.BRAID_UP if ls[p + 1] > ls[p] else MoveKind.BRAID_DOWN
        out.append(Move(kind, p + 1))
    out.sort(key=lambda m: (m.pos, m.kind.value))
    return out


def apply_move(word: Word, move: Move) -> Word:
    """Rewrite the word under the given move; the evaluation is unchanged."""
    ls = list(word.letters)
    p = move.pos - 1
    if move.kind is MoveKind.COMMUTATION:
        if not (0 <= p < len(ls) - 1) or abs(ls[p] - ls[p + 1]) < 2:
            raise InputError(f"no commutation at position {move.pos} of {word.letters}")
        ls[p], ls[p + 1] = ls[p + 1], ls[p]
    else:
        if not (0 <= p < len(ls) - 2):
            raise InputError(f"no 3-letter window at position {move.pos}")
        a, b, c = ls[p : p + 3]
        want_up = move.kind is MoveKind.BRAID_UP
        if a != c or b != (a + 1 if want_up else a - 1):
            raise InputError(
                f"window {ls[p:p + 3]} at position {move.pos} is not a "
                f"{move.kind.value} window"
            )
        ls[p : p + 3] = [b, a, b]
    return Word(tuple(ls), word.n)


def canonical_letters(letters: Letters) -> Letters:
    """Lexicographically greatest word reachable by commutations alone.

    The result has every adjacent commuting pair with the larger letter
    on the left, which identifies the commutation class uniquely; it is
    computed by inserting each letter as far left as commutations allow.

    >>> canonical_letters((1, 2, 1, 3, 2))
    (1, 2, 3, 1, 2)
    """
    out: list[int] = []
    for x in letters:
        j = len(out)
        while j > 0 and out[j - 1] <= x - 2:
            j -= 1
        out.insert(j, x)
    return tuple(out)


def canonical_form(word: Word) -> Word:
    return Word(canonical_letters(word.letters), word.n)
