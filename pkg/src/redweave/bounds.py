"""Counting bounds: per-permutation class-count bounds and the aggregate
Catalan bound via the balanced-parenthesis encoding of representatives."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .classes import scan
from .errors import BudgetExceeded, InputError, WORD_BUDGET_DEFAULT
from .perm import Perm, enumerate_sn, inversions, pattern_count
from .words import Letters
from .structure import max_braid_moves


def catalan(m: int) -> int:
    """The m-th Catalan number, closed form."""
    return comb(2 * m, m) // (m + 1)


def catalan_recurrence(m: int) -> int:
    """Same number by the convolution recurrence; cross-check for catalan()."""
    c = [1]
    for k in range(1, m + 1):
        c.append(sum(c[j] * c[k - 1 - j] for j in range(k)))
    return c[m]


@dataclass(frozen=True)
class BoundsReport:
    w: Perm
    y: int
    n321: int
    lower: int
    upper: int              # 3^l(w); strict for l(w) >= 1
    alt_upper: float        # 2.487^l(w), informational only
    actual: int | None      # |G(w)| when computed
    notice: str | None = None


def size_bounds(w: Perm, compute_actual: bool = True,
                budget: int = WORD_BUDGET_DEFAULT) -> BoundsReport:
    """2^ceil(Y/2) + N_321(w) - ceil(Y/2) <= |G(w)| < 3^l(w)."""
    l = inversions(w)
    y = max_braid_moves(w, budget)
    n321 = pattern_count(w, (3, 2, 1))
    half = (y + 1) // 2
    lower = 2**half + n321 - half
    actual = None
    notice = None
    if compute_actual:
        try:
            actual = len(scan(w, budget).class_sizes)
        except BudgetExceeded as exc:
            notice = str(exc)
    return BoundsReport(w, y, n321, lower, 3**l, 2.487**l, actual, notice)


def paren_encoding(letters: Letters) -> str:
    """Balanced parenthesis string of a canonical representative.

    Writes i_1 left parens, then for each step i_k -> i_{k+1} writes
    i_k - i_{k+1} + 1 right parens and one left paren, and closes with
    i_l right parens; l + i_1 - 1 pairs in total, injective over
    representatives of a fixed length.

    >>> paren_encoding((2, 1, 2, 3, 2))
    '(())((())())'
    """
    if not letters:
        return ""
    parts = ["(" * letters[0]]
    for prev, nxt in zip(letters, letters[1:]):
        drop = prev - nxt + 1
        if drop < 0:
            raise InputError(
                f"{letters} is not a canonical representative "
                f"(ascent {prev} -> {nxt} commutes)"
            )
        parts.append(")" * drop + "(")
    parts.append(")" * letters[-1])
    return "".join(parts)


@dataclass(frozen=True)
class AggregateReport:
    n: int
    l: int
    count_perms: int
    sum_classes: int
    catalan: int
    four_power: int
    injective: bool

    @property
    def ok(self) -> bool:
        return (
            self.sum_classes < self.catalan < self.four_power and self.injective
        )


def aggregate_bound_check(n: int, l: int, budget: int = WORD_BUDGET_DEFAULT,
                          cap: int = 6) -> AggregateReport:
    """Sum |G(w)| over all w in S_n with l(w) = l against C_{l+n-1} < 4^(l+n).

    Also checks that the parenthesis encodings of all canonical
    representatives across those w are pairwise distinct.
    """
    count_perms = 0
    total = 0
    encodings: list[str] = []
    for w in enumerate_sn(n, cap=cap):
        if inversions(w) != l:
            continue
        count_perms += 1
        s = scan(w, budget)
        total += len(s.class_sizes)
        encodings.extend(paren_encoding(c) for c in s.class_sizes)
    return AggregateReport(
        n=n,
        l=l,
        count_perms=count_perms,
        sum_classes=total,
        catalan=catalan(l + n - 1),
        four_power=4 ** (l + n),
        injective=len(set(encodings)) == len(encodings),
    )
