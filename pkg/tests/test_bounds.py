import pytest

from redweave import InputError
from redweave.bounds import (
    aggregate_bound_check,
    catalan,
    catalan_recurrence,
    paren_encoding,
    size_bounds,
)
from redweave.classes import scan
from redweave.perm import identity, longest_element


def test_catalan_values():
    assert [catalan(m) for m in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]
    for m in range(12):
        assert catalan(m) == catalan_recurrence(m)


def test_size_bounds_3421():
    rep = size_bounds((3, 4, 2, 1))
    assert rep.y == 2 and rep.n321 == 2
    assert rep.lower == 3 and rep.actual == 3
    assert rep.upper == 3**5
    assert rep.lower <= rep.actual < rep.upper


def test_size_bounds_identity():
    rep = size_bounds(identity(4))
    assert rep.y == 0 and rep.lower == 1 and rep.actual == 1
    assert rep.upper == 1  # 3^0; equality allowed only in this trivial case


def test_size_bounds_without_actual():
    rep = size_bounds(longest_element(4), compute_actual=False)
    assert rep.actual is None
    assert rep.lower == 2**1 + 4 - 1


def test_paren_encoding_example():
    assert paren_encoding((2, 1, 2, 3, 2)) == "(())((())())"
    assert paren_encoding(()) == ""
    assert paren_encoding((1,)) == "()"
    assert paren_encoding((3, 1)) == "((()))()"


def test_paren_encoding_balance_and_pair_count():
    for letters in [(2, 1, 2, 3, 2), (1,), (3, 1), (2, 1), (3, 2, 1, 2)]:
        enc = paren_encoding(letters)
        assert enc.count("(") == enc.count(")")
        assert enc.count("(") == len(letters) + letters[0] - 1
        depth = 0
        for ch in enc:
            depth += 1 if ch == "(" else -1
            assert depth >= 0
        assert depth == 0


def test_paren_encoding_rejects_commuting_ascent():
    with pytest.raises(InputError):
        paren_encoding((1, 3))  # not canonical: 1 then 3 commutes


def test_paren_encoding_injective_at_fixed_length():
    # injectivity is only promised among representatives of equal length
    seen = {}
    for w in [(4, 3, 2, 1), (3, 4, 2, 1), (4, 2, 3, 1), (2, 4, 3, 1)]:
        for canon in scan(w).class_sizes:
            key = (len(canon), paren_encoding(canon))
            assert seen.setdefault(key, canon) == canon


def test_aggregate_bound_small():
    rep = aggregate_bound_check(3, 2)
    assert rep.count_perms == 2 and rep.sum_classes == 2
    assert rep.catalan == catalan(4) == 14
    assert rep.injective and rep.ok

    rep = aggregate_bound_check(3, 3)
    assert rep.count_perms == 1 and rep.sum_classes == 2
    assert rep.ok

    rep = aggregate_bound_check(4, 5)
    assert rep.sum_classes < rep.catalan < rep.four_power
    assert rep.injective
