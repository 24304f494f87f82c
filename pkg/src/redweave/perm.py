"""Permutations in one-line notation, inversions, and pattern counting.

A permutation of {1..n} is a plain tuple of its one-line notation
``(w(1), ..., w(n))``.  Everything here is pure and safe to share.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Iterable, Iterator, Sequence

from .errors import BudgetExceeded, InputError, SN_CAP_DEFAULT

Perm = tuple[int, ...]


def check_perm(values: Iterable[int]) -> Perm:
    """Validate one-line notation (a bijection on {1..n}) and return it as a tuple."""
    w = tuple(int(v) for v in values)
    n = len(w)
    if n < 1:
        raise InputError("permutation must have size >= 1")
    if sorted(w) != list(range(1, n + 1)):
        raise InputError(f"not a permutation of 1..{n}: {w}")
    return w


def parse_perm(text: str) -> Perm:
    """Parse "3,4,2,1", "3 4 2 1", or the compact digit form "3421" (n <= 9).

    >>> parse_perm("3421")
    (3, 4, 2, 1)
    >>> parse_perm("4,3,2,1,5,6,7,11,10,8,9")[7:]
    (11, 10, 8, 9)
    """
    text = text.strip()
    if "," in text or " " in text:
        parts = text.replace(",", " ").split()
    else:
        parts = list(text)
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise InputError(f"cannot parse permutation: {text!r}") from None
    return check_perm(values)


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def longest_element(n: int) -> Perm:
    """The reversing permutation n, n-1, ..., 1."""
    return tuple(range(n, 0, -1))


def inverse(w: Perm) -> Perm:
    inv = [0] * len(w)
    for i, v in enumerate(w):
        inv[v - 1] = i + 1
    return tuple(inv)


def inversions(w: Perm) -> int:
    """Number of pairs i < j with w(i) > w(j).

    >>> inversions((3, 4, 2, 1))
    5
    """
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def _standardize(vals: Sequence[int]) -> Perm:
    rank = {v: i + 1 for i, v in enumerate(sorted(vals))}
    return tuple(rank[v] for v in vals)


def pattern_occurrences(w: Perm, p: Perm) -> Iterator[tuple[int, ...]]:
    """Yield the 0-based index tuples of w that carry a p-pattern."""
    k = len(p)
    if k > len(w):
        return
    for idx in combinations(range(len(w)), k):
        if _standardize([w[i] for i in idx]) == p:
            yield idx


def pattern_count(w: Perm, p: Perm) -> int:
    """Number of occurrences of the pattern p in w (N_p(w)).

    >>> pattern_count((3, 4, 2, 1), (3, 2, 1))
    2
    """
    return sum(1 for _ in pattern_occurrences(w, p))


def avoids(w: Perm, p: Perm) -> bool:
    return next(pattern_occurrences(w, p), None) is None


def enumerate_sn(n: int, cap: int = SN_CAP_DEFAULT) -> Iterator[Perm]:
    """All n! permutations in lexicographic order of one-line notation."""
    if n < 1:
        raise InputError("n must be >= 1")
    if n > cap:
        raise BudgetExceeded(f"refusing to enumerate S_{n} (cap is {cap})")
    return permutations(range(1, n + 1))
