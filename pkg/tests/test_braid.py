import pytest
from hypothesis import given, strategies as st

from posbraid.braid import (BraidParseError, BraidWord, SubwordWitness, closure_permutation,
                            component_count, contains_subword, flip_indices, is_knot,
                            parse_braid, push_right_normal_form, reduce_index_lemma5,
                            reduce_index_lemma5_detailed, reverse, rotate, shift_indices,
                            verify_subword_witness, _find_exposable_triple)
from posbraid.seifert import core_invariants


def test_parse_syllables():
    w = parse_braid("s1^4 s2 s1^3 s2^2")
    assert w.strands == 3
    assert w.syllables == ((1, 4), (2, 1), (1, 3), (2, 2))
    assert w.crossings == 10


def test_parse_compact_and_alias():
    assert parse_braid("111") == BraidWord(2, [(1, 3)])
    assert parse_braid("σ1^2 σ2") == parse_braid("s1 s1 s2")
    assert parse_braid("s3^2") == BraidWord(4, [(3, 2)])


def test_parse_explicit_strands():
    w = parse_braid("s1 s2 @5")
    assert w.strands == 5
    assert str(w) == "s1 s2 @5"
    assert parse_braid(str(w)) == w


@pytest.mark.parametrize("bad", ["s1^0", "s0", "x1", "s1^", "s2 @2", "", "s1 ^2", "10"])
def test_parse_errors(bad):
    with pytest.raises(BraidParseError):
        parse_braid(bad)


def test_str_round_trip():
    for text in ["s1^4 s2 s1^3 s2^2", "s1 s3 s2^2", "s2 @4"]:
        assert str(parse_braid(text)) == text


def test_closure_permutation_examples():
    assert closure_permutation(parse_braid("s1^3")).cycle_count() == 1
    assert is_knot(parse_braid("s1^3"))
    assert component_count(parse_braid("s1^2")) == 2
    assert component_count(parse_braid("s1^5 s2 s1^4 s2")) == 2
    assert component_count(parse_braid("s1^2 s2^2 s1 s3 s2^2 s3")) == 3
    p = closure_permutation(parse_braid("s1 s2"))
    assert p.cycle_type() == (3,)


def test_permutation_is_bijection():
    p = closure_permutation(parse_braid("s1 s2 s3 s1"))
    assert sorted(p.images) == [1, 2, 3, 4]


def test_symmetry_examples():
    assert rotate(parse_braid("s1 s2^2"), 1) == parse_braid("s2^2 s1")
    assert reverse(parse_braid("s1^4 s2")) == parse_braid("s2 s1^4")
    assert flip_indices(parse_braid("s1^2 s2")) == parse_braid("s2^2 s1")
    assert shift_indices(parse_braid("s1 s2"), 1) == parse_braid("s2 s3")


words = st.integers(2, 5).flatmap(
    lambda n: st.lists(st.integers(1, n - 1), min_size=1, max_size=14).map(
        lambda L: BraidWord.from_letters(L, n)))


@given(words, st.integers(0, 20))
def test_symmetries_preserve_components(w, k):
    b = component_count(w)
    assert component_count(rotate(w, k)) == b
    assert component_count(reverse(w)) == b
    assert component_count(flip_indices(w)) == b
    assert closure_permutation(rotate(w, k)).cycle_type() == closure_permutation(w).cycle_type()


def test_push_right_examples():
    assert push_right_normal_form(parse_braid("s1 s2 s1")) == parse_braid("s2 s1 s2")
    assert push_right_normal_form(parse_braid("s2 s1 s2")) == parse_braid("s2 s1 s2")


def test_push_right_uses_commutation():
    w = parse_braid("s1 s3 s2 s1")
    out = push_right_normal_form(w)
    assert out != w
    assert core_invariants(out) == core_invariants(w)
    assert _find_exposable_triple(out.letters) is None


@given(words)
def test_push_right_preserves_invariants_and_terminates(w):
    out = push_right_normal_form(w)
    assert out.crossings == w.crossings
    assert sum(out.letters) >= sum(w.letters)
    assert _find_exposable_triple(out.letters) is None
    assert core_invariants(out) == core_invariants(w)


def test_subword_examples():
    host = parse_braid("s1^2 s2^3 s1^2 s2^2")
    wit = contains_subword(host, host)
    assert wit is not None and wit.offset == 0 and not wit.reversed and wit.shift == 0

    host = parse_braid("s1 s2^5 s1 s2^4 s1")
    pat = parse_braid("s1 s2^5 s1 s2^4")
    assert contains_subword(host, pat) is not None

    host = parse_braid("s2^2 s3^3 s2^2 s3^2")
    pat = parse_braid("s1^2 s2^3 s1^2 s2^2")
    wit = contains_subword(host, pat)
    assert wit is not None and wit.shift == 1
    assert contains_subword(host, pat, index_shift=False) is None


def test_subword_needs_transforms():
    host = parse_braid("s2 s1^4")
    pat = parse_braid("s1^4 s2")
    assert contains_subword(host, pat, cyclic=False, reversal=False) is None
    assert contains_subword(host, pat, cyclic=True, reversal=False) is not None
    assert contains_subword(host, pat, cyclic=False, reversal=True) is not None


def test_subword_absent():
    host, pat = parse_braid("s1^3 s2^3"), parse_braid("s1 s2 s1")
    assert contains_subword(host, pat, cyclic=False) is None
    assert contains_subword(host, parse_braid("s1 s2 s1 s2")) is None


@given(words, st.data())
def test_subword_witness_reverifies(w, data):
    keep = data.draw(st.lists(st.booleans(), min_size=w.crossings, max_size=w.crossings))
    letters = [g for g, k in zip(w.letters, keep) if k]
    if not letters:
        return
    pat = BraidWord.from_letters(letters, w.strands)
    wit = contains_subword(w, pat)
    assert wit is not None
    assert list(wit.positions) == sorted(set(wit.positions))
    assert verify_subword_witness(w, pat, wit)
    assert SubwordWitness.from_dict(wit.to_dict()) == wit


def test_reduce_path_columns():
    w = parse_braid("s1^2 s2 s1 s2")
    out = reduce_index_lemma5(w)
    assert out is not None and out.strands == 2
    assert core_invariants(out) == core_invariants(w)


def test_reduce_refuses_non_path():
    assert reduce_index_lemma5(parse_braid("s1 s2^2 s1 s2^2")) is None


def test_reduce_inner_columns():
    # s2^b s1 s2^2 s1^3 followed by a path-shaped {s2, s3} part
    w = parse_braid("s2^3 s1 s2^2 s1^3 s3 s2 s3^2")
    res = reduce_index_lemma5_detailed(w)
    assert res.word is not None and res.word.strands == 3
    assert res.column == 2
    assert not res.flagged
    assert core_invariants(res.word) == core_invariants(w)


@given(words)
def test_reduction_preserves_invariants(w):
    if any(k == 0 for k in w.generator_counts().values()):
        return
    out = reduce_index_lemma5(w)
    if out is not None:
        assert out.strands == w.strands - 1
        assert core_invariants(out) == core_invariants(w)
