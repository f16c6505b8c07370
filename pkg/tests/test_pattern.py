import networkx as nx
import pytest
from hypothesis import given, strategies as st

from posbraid.braid import BraidWord, flip_indices, parse_braid, reverse, rotate
from posbraid.pattern import (Brick, DecomposableWordError, ReducibleWordError, brick_diagram,
                              induced_two_column_pattern, is_connected, is_path, is_prime,
                              is_tree, linking_pattern, parse_graph_description,
                              split_connected_sum, word_pattern)
from posbraid.seifert import invariants

from conftest import word


def test_brick_counts():
    assert len(brick_diagram(parse_braid("s1^3"))) == 2
    bd = brick_diagram(parse_braid("s1^5 s2 s1^4 s2"))
    assert sum(b.column == 1 for b in bd) == 8
    assert sum(b.column == 2 for b in bd) == 1
    assert len(brick_diagram(parse_braid("s1^2 s2^2 s1 s3 s2^2 s3"))) == 6


def test_brick_extents():
    assert brick_diagram(parse_braid("s1 s2 s1 s2")) == [Brick(1, 0, 2), Brick(2, 1, 3)]
    with pytest.raises(ValueError):
        Brick(1, 3, 3)


def test_linking_examples():
    assert word_pattern(parse_braid("s1^3")).edges == {(0, 1)}
    assert word_pattern(parse_braid("s1 s2 s1 s2")).edges == {(0, 1)}


def test_x_tilde_shape():
    lp = word_pattern(parse_braid("s1^2 s2^2 s1 s3 s2^2 s3"))
    g = lp.to_networkx()
    assert nx.is_tree(g)
    hub = [v for v in g if g.degree(v) == 4]
    assert len(hub) == 1
    h = g.copy()
    h.remove_node(hub[0])
    assert sorted(len(c) for c in nx.connected_components(h)) == [1, 1, 1, 2]


def test_nested_and_disjoint_do_not_link():
    # s2 brick (1,2) nested inside s1 brick (0,3)
    lp = linking_pattern([Brick(1, 0, 3), Brick(2, 1, 2)])
    assert not lp.edges
    lp = linking_pattern([Brick(1, 0, 1), Brick(2, 2, 3)])
    assert not lp.edges
    lp = linking_pattern([Brick(1, 0, 2), Brick(3, 1, 3)])
    assert not lp.edges


def test_trees():
    assert is_tree(word_pattern(parse_braid("s1^5 s2 s1^4 s2")))
    assert not is_tree(word_pattern(parse_braid("s1 s2 s1 s2 s1 s2 s1 s2")))
    assert is_tree(word_pattern(parse_braid("s1^3")))


def test_primality():
    assert is_prime(parse_braid("s1^3"))
    assert not is_prime(parse_braid("s1^2 s2^2"))
    assert not is_prime(parse_braid("s1 s2^3 s1 s2 s3^2 s2"))
    with pytest.raises(ReducibleWordError):
        is_prime(parse_braid("s1^2 s3^2"))
    with pytest.raises(DecomposableWordError) as e:
        is_prime(parse_braid("s1^3 s2 s3^3"))
    assert e.value.generator == 2 and e.value.position == 3


def test_induced_two_column():
    for k, l in [(1, 1), (2, 3), (4, 2)]:
        w = word((1, k), (2, 1), (1, 1), (2, l))
        assert is_path(induced_two_column_pattern(w, 1))
        assert len(induced_two_column_pattern(w, 1)) == k + l
    lp = induced_two_column_pattern(parse_braid("s1 s2^2 s1 s2^2"), 1)
    assert not is_path(lp)
    assert max(lp.degree(v) for v in range(len(lp))) == 3
    with pytest.raises(ValueError):
        induced_two_column_pattern(parse_braid("s1^3"), 1)


def test_split_examples():
    assert split_connected_sum(parse_braid("s1^3 s2 s3^3")) == [parse_braid("s1^3")] * 2
    assert split_connected_sum(parse_braid("s1^3")) == [parse_braid("s1^3")]
    assert split_connected_sum(parse_braid("s1^2 s2^2")) == [parse_braid("s1^2")] * 2
    assert split_connected_sum(parse_braid("s1 s2")) == [parse_braid("s1")]


def test_split_is_additive():
    w = parse_braid("s1^3 s2 s3^2 s4 s3^3 s4")
    parts = split_connected_sum(w)
    assert len(parts) == 2
    g = sum(invariants(f).genus for f in parts)
    assert g == 1 + invariants(parse_braid("s1^2 s2 s1^3 s2")).genus


def test_graph_description_round_trip():
    lp = word_pattern(parse_braid("s1^2 s2^2 s1 s3 s2^2 s3"))
    verts, edges = parse_graph_description(lp.graph_description())
    assert verts == lp.plane_data
    assert set(edges) == set(lp.edges)
    assert lp.edge_list_text().count("\n") == len(lp.edges)


words = st.integers(2, 5).flatmap(
    lambda n: st.lists(st.integers(1, n - 1), min_size=n - 1, max_size=14).map(
        lambda L: BraidWord.from_letters(L, n)))


@given(words)
def test_pattern_properties(w):
    lp = word_pattern(w)
    assert len(lp) == w.crossings - len(set(w.letters))
    for u, v in lp.edges:
        assert abs(lp.vertices[u].column - lp.vertices[v].column) <= 1
    assert nx.is_isomorphic(lp.to_networkx(), word_pattern(flip_indices(w)).to_networkx())


@given(words, st.integers(0, 13))
def test_primality_is_symmetric(w, k):
    if any(c < 2 for c in w.generator_counts().values()):
        return
    p = is_prime(w)
    assert is_prime(rotate(w, k)) == p
    assert is_prime(reverse(w)) == p
    assert is_prime(flip_indices(w)) == p
