import json

import pytest

from oracles import classes_bfs
from redweave import BudgetExceeded
from redweave.classes import (
    build_graph,
    build_poset,
    class_members,
    enumerate_classes,
    graph_checks,
    graph_dot,
    graph_json,
    scan,
)
from redweave.perm import enumerate_sn, identity, longest_element
from redweave.subnet import count_212
from redweave.words import Word, index_sum


def test_classes_3421():
    cls = enumerate_classes((3, 4, 2, 1))
    assert [(c.canonical.letters, c.size) for c in cls] == [
        ((1, 2, 3, 1, 2), 2),
        ((2, 1, 2, 3, 2), 1),
        ((2, 3, 1, 2, 3), 2),
    ]


def test_classes_identity_and_simple():
    cls = enumerate_classes(identity(3))
    assert len(cls) == 1 and cls[0].canonical.letters == ()
    assert len(enumerate_classes((2, 1, 3))) == 1
    assert len(enumerate_classes(longest_element(4))) == 8
    assert len(enumerate_classes(longest_element(5))) == 62


def test_class_sizes_sum_to_word_count(s5):
    for w in s5:
        s = scan(w)
        assert sum(s.class_sizes.values()) == s.word_count


def test_class_members():
    assert class_members((2, 1, 2, 3, 2)) == {(2, 1, 2, 3, 2)}
    assert class_members((1, 3)) == {(1, 3), (3, 1)}
    assert class_members((1, 2, 3, 1, 2)) == {(1, 2, 3, 1, 2), (1, 2, 1, 3, 2)}


def test_classes_match_bfs_components():
    for w in enumerate_sn(4):
        ours = {frozenset(class_members(c.canonical.letters)) for c in enumerate_classes(w)}
        theirs = {frozenset(c) for c in classes_bfs(w)}
        assert ours == theirs


def test_graph_3421_is_a_path():
    g = build_graph((3, 4, 2, 1))
    assert len(g) == 3
    assert [(e.u, e.v) for e in g.edges] == [(0, 1), (1, 2)]
    assert graph_checks(g).ok


def test_graph_edge_labels_record_letter_and_wires():
    g = build_graph((3, 4, 2, 1))
    by_pair = {(e.u, e.v): e.labels for e in g.edges}
    assert by_pair[(0, 1)] == ((1, (1, 2, 3)),)
    assert by_pair[(1, 2)] == ((2, (1, 2, 4)),)


def test_graph_4321_is_an_8_cycle():
    g = build_graph(longest_element(4))
    assert len(g) == 8 and len(g.edges) == 8
    assert all(len(g.neighbors(c.id)) == 2 for c in g.vertices)
    assert graph_checks(g).ok


def test_graph_checks_all_s5(s5):
    for w in s5:
        assert graph_checks(build_graph(w)).ok


def test_scan_budget():
    with pytest.raises(BudgetExceeded):
        scan(longest_element(5), budget=100)


def test_poset_3421_is_a_chain():
    p = build_poset((3, 4, 2, 1))
    assert p.rank == {0: 0, 1: 1, 2: 2}
    assert p.covers == ((1, 0), (2, 1))


def test_poset_identity():
    p = build_poset(identity(4))
    assert p.rank == {0: 0} and p.covers == ()


def test_poset_326514_levels():
    p = build_poset((3, 2, 6, 5, 1, 4))
    levels = {}
    for cid, r in p.rank.items():
        levels.setdefault(r, 0)
        levels[r] += 1
    assert levels == {0: 1, 1: 2, 2: 2, 3: 1}


def test_poset_builds_for_all_s4():
    for w in enumerate_sn(4):
        p = build_poset(w)
        for upper, lower in p.covers:
            assert p.rank[upper] - p.rank[lower] == 1


def test_rank_constant_on_class_members(s5):
    # the 212-count is a class invariant, so ranking by canonicals is sound
    for w in s5[:40]:
        for c in enumerate_classes(w):
            counts = {
                count_212(Word(ls, len(w))) for ls in class_members(c.canonical.letters)
            }
            assert len(counts) == 1


def test_graph_json_shape():
    g = build_graph((3, 4, 2, 1))
    doc = graph_json(g, build_poset((3, 4, 2, 1)))
    assert doc["schema"] == "redweave/1"
    assert doc["w"] == [3, 4, 2, 1]
    assert [v["rank"] for v in doc["vertices"]] == [0, 1, 2]
    assert doc["edges"][0]["labels"] == [{"letter": 1, "wires": [1, 2, 3]}]
    json.dumps(doc)  # serializable


def test_graph_dot_deterministic():
    g = build_graph((3, 4, 2, 1))
    out = graph_dot(g, build_poset((3, 4, 2, 1)))
    assert out == graph_dot(build_graph((3, 4, 2, 1)), build_poset((3, 4, 2, 1)))
    assert out.startswith("graph G {")
    assert "n0 -- n1;" in out and "rank=same" in out


def test_index_sum_parity_splits_edges(s5):
    for w in s5[:60]:
        g = build_graph(w)
        for e in g.edges:
            su = index_sum(g.vertices[e.u].canonical)
            sv = index_sum(g.vertices[e.v].canonical)
            assert abs(su - sv) == 1
