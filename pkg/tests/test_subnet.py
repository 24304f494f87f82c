import pytest

from oracles import count_subnetworks_brute
from redweave import InputError
from redweave.perm import enumerate_sn, identity, longest_element
from redweave.subnet import (
    WARRINGTON_X,
    complement_word,
    count_212,
    count_subnetworks,
    count_x_avoiding_classes,
    count_x_avoiding_words,
    crossing_events,
    friendliness,
    has_subnetwork,
    induced_word,
    parse_word_set,
    predicted_count_friendly,
    predicted_count_w0_s4,
    reverse_word,
    s4_longest_classes,
    word_set,
)
from redweave.classes import class_members, enumerate_classes
from redweave.words import Word, enumerate_reduced_words


def test_word_set_validation():
    ws = word_set([(2, 1, 2), (1, 2, 1)], 3)
    assert ws.perm == (3, 2, 1) and ws.m == 3
    with pytest.raises(InputError):
        word_set([(1, 1)], 3)  # not reduced
    with pytest.raises(InputError):
        word_set([(1,), (2,)], 3)  # different evaluations


def test_warrington_x_contents():
    assert WARRINGTON_X.m == 4 and WARRINGTON_X.perm == (4, 3, 2, 1)
    assert WARRINGTON_X.words == {
        (1, 2, 3, 2, 1, 2),
        (3, 2, 1, 2, 3, 2),
        (2, 1, 2, 3, 2, 1),
        (2, 3, 2, 1, 2, 3),
    }


def test_s4_longest_classes():
    classes = s4_longest_classes()
    assert len(classes) == 8
    assert sum(len(c.words) for c in classes) == 16
    assert all(c.perm == (4, 3, 2, 1) for c in classes)


def test_parse_word_set():
    assert parse_word_set("warrington-x") is WARRINGTON_X
    assert parse_word_set("s4-longest-classes:0").perm == (4, 3, 2, 1)
    assert parse_word_set("212; 121").words == {(2, 1, 2), (1, 2, 1)}
    assert parse_word_set("2,1,2").words == {(2, 1, 2)}
    with pytest.raises(InputError):
        parse_word_set("s4-longest-classes:9")
    with pytest.raises(InputError):
        parse_word_set("")


def test_crossing_events():
    assert crossing_events(Word((1, 2, 1), 3)) == [(1, 2), (1, 3), (2, 3)]


def test_induced_word_examples():
    w = Word((1, 2, 1, 3, 2), 4)
    assert induced_word(w, [1, 2, 4]).letters == (1, 2, 1)
    assert induced_word(w, [1, 2, 3, 4]).letters == w.letters
    assert induced_word(w, [1]).letters == ()
    assert induced_word(w, [1, 4]).letters == (1,)  # 4 passes 1 once
    assert induced_word(w, [3, 4]).letters == ()  # 3 and 4 stay in order
    with pytest.raises(InputError):
        induced_word(w, [0, 2])
    with pytest.raises(InputError):
        induced_word(w, [2, 5])


def test_induced_word_self():
    w = Word((2, 3, 2, 1, 2, 3), 4)
    assert induced_word(w, [1, 2, 3, 4]).letters == w.letters


def test_count_212_examples():
    assert count_212(Word((2, 1, 3, 2, 3), 4)) == 2
    assert count_212(Word((2, 1, 2, 3, 2), 4)) == 1
    assert count_212(Word((1, 2, 3, 1, 2), 4)) == 0
    assert count_212(Word((1, 2, 1, 3, 2), 4)) == 0  # same class as the line above
    assert count_212(Word((), 3)) == 0


def test_count_subnetworks_examples():
    assert count_subnetworks(Word((2, 3, 2, 1, 2, 3), 4), WARRINGTON_X) == 1
    assert count_subnetworks(Word((1, 2, 3, 1, 2, 1), 4), WARRINGTON_X) == 0
    top = word_set([(2, 1, 2)], 3)
    assert count_subnetworks(Word((2, 1, 2, 3, 2), 4), top) == 1
    assert not has_subnetwork(Word((1, 2, 3, 1, 2), 4), top)
    assert count_subnetworks(Word((1,), 2), WARRINGTON_X) == 0  # m > n
    assert count_subnetworks(Word((1,), 3), word_set([], 2)) == 0


def test_count_subnetworks_matches_brute_oracle():
    for w in enumerate_sn(4):
        for word in enumerate_reduced_words(w):
            for x in (WARRINGTON_X, word_set([(2, 1, 2)], 3), word_set([(1, 2, 1)], 3)):
                assert count_subnetworks(word, x) == count_subnetworks_brute(
                    word, x.words, x.m
                )


def test_count_constant_on_classes():
    w = longest_element(4)
    top = word_set([(2, 1, 2)], 3)
    for c in enumerate_classes(w):
        counts = {
            count_subnetworks(Word(ls, 4), top)
            for ls in class_members(c.canonical.letters)
        }
        assert len(counts) == 1


def test_x_avoiding_counts():
    assert count_x_avoiding_words(longest_element(3), WARRINGTON_X) == 2
    assert count_x_avoiding_words(longest_element(4), WARRINGTON_X) == 12
    # the four X-words are each singleton classes, so 8 - 4 remain
    assert count_x_avoiding_classes(longest_element(4), WARRINGTON_X) == 4
    top = word_set([(2, 1, 2)], 3)
    assert count_x_avoiding_words((3, 4, 2, 1), top) == 2
    assert count_x_avoiding_classes((3, 4, 2, 1), top) == 1


def test_friendliness_examples():
    fr = friendliness(longest_element(5), longest_element(4))
    assert fr.k == 2 and not fr.vacuous
    fr = friendliness((3, 4, 2, 1), (3, 2, 1))
    assert fr.k == 1
    fr = friendliness(identity(4), (3, 2, 1))
    assert fr.k == 0 and fr.vacuous
    # 3412 has no 321-pattern: no statistic to be friendly about
    assert friendliness((4, 2, 3, 1), (3, 4, 1, 2)).k is None
    assert friendliness((4, 3, 2, 1), (3, 2, 1)).k == 1
    # not friendly: the triples of 53421 sit in 1 or 2 of its 4321-patterns
    assert friendliness((5, 3, 4, 2, 1), (4, 3, 2, 1)).k is None


def test_predicted_count_friendly():
    res = predicted_count_friendly(
        (3, 4, 2, 1), Word((2, 1, 3, 2, 3), 4), (3, 2, 1)
    )
    assert res.k == 1 and res.c == 9
    assert res.predicted == 2 and res.actual == 2
    for word in enumerate_reduced_words((3, 4, 2, 1)):
        res = predicted_count_friendly((3, 4, 2, 1), word, (3, 2, 1))
        assert res.predicted == res.actual
    with pytest.raises(InputError):
        predicted_count_friendly((3, 4, 2, 1), Word((1, 2, 1), 4), (3, 2, 1))
    with pytest.raises(InputError):
        predicted_count_friendly((3, 4, 2, 1), Word((2, 1, 3, 2, 3), 4), (3, 4, 1, 2))


def test_predicted_count_w0_s4_examples():
    assert predicted_count_w0_s4(Word((3, 2, 3, 1, 2, 3), 4), 4) == 0
    assert predicted_count_w0_s4(Word((2, 3, 2, 1, 2, 3), 4), 4) == 1
    with pytest.raises(InputError):
        predicted_count_w0_s4(Word((1, 2, 1), 3), 4)


def test_predicted_count_w0_s4_matches_direct():
    for n in (4, 5):
        for word in enumerate_reduced_words(longest_element(n)):
            assert predicted_count_w0_s4(word, n) == count_subnetworks(
                word, WARRINGTON_X
            )


def test_reverse_word():
    rev, same = reverse_word(Word((2, 1, 2, 3, 2, 1), 4))
    assert rev.letters == (1, 2, 3, 2, 1, 2) and same
    rev, same = reverse_word(Word((1, 2), 3))
    assert rev.letters == (2, 1) and not same  # 231 reversed gives 312


def test_complement_word():
    comp, same = complement_word(Word((1, 2, 1, 3, 2, 1), 4))
    assert comp.letters == (3, 2, 3, 1, 2, 3) and same
    comp, same = complement_word(Word((1,), 3))
    assert comp.letters == (2,) and not same
