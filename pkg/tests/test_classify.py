import time

import pytest
from hypothesis import given, strategies as st

from posbraid.braid import BraidWord, flip_indices, is_knot, parse_braid, push_right_normal_form
from posbraid.classify import (ClassificationResult, NotAKnotError, classify_knot, g4_interval,
                               is_max_torus, max_torus_names)
from posbraid.minors import verify_certificate


def test_table_example():
    c = classify_knot(parse_braid("s1^4 s2 s1^3 s2^2"))
    assert (c.g, c.abs_sigma, c.g4, c.method) == (4, 6, 3, "sigma_gap_one")
    assert c.certificate is not None
    assert verify_certificate(parse_braid("s1^4 s2 s1^3 s2^2"), c.certificate)
    assert c.torus is None


def test_two_bridge_torus():
    c = classify_knot(BraidWord(2, [(1, 7)]))
    assert (c.g, c.abs_sigma, c.g4, c.method, c.torus) == (3, 6, 3, "max_signature", "T(2,7)")
    assert c.certificate is None


def test_t56():
    t0 = time.perf_counter()
    c = classify_knot(parse_braid("s1 s2 s3 s4 " * 6))
    assert time.perf_counter() - t0 < 1.0
    assert c.g == 10 and c.abs_sigma == 16
    assert c.method == "bounds_only"
    assert (c.g4_lo, c.g4_hi) == (8, 9)
    assert c.g4 is None
    assert c.to_dict()["g4"] == {"lo": 8, "hi": 9}
    assert c.certificate is not None


def test_errors():
    with pytest.raises(NotAKnotError):
        classify_knot(parse_braid("s1^2"))
    # a missing generator splits the closure, so it is never a knot
    with pytest.raises(NotAKnotError):
        classify_knot(parse_braid("s1^3 s3^3 @4"))


def test_composite():
    c = classify_knot(parse_braid("s1^3 s2 s3^3 s4 s5^4 s6 s5^3 s6^2"))
    assert len(c.summands) == 3
    parts = [classify_knot(parse_braid(s)) for s in c.summands]
    assert c.g == sum(p.g for p in parts)
    assert c.torus is None
    c = classify_knot(parse_braid("s1^3 s2 s3^5"))
    assert (c.g, c.abs_sigma, c.g4) == (3, 6, 3)
    assert c.summands == ("s1^3", "s1^5")


def test_json_shape():
    d = classify_knot(parse_braid("s1^3")).to_dict()
    assert d == {"g": 1, "abs_sigma": 2, "g4": {"exact": 1}, "method": "max_signature",
                 "certificate": None, "torus": "T(2,3)"}


def test_interval():
    assert g4_interval(4, 8) == (4, 4)
    assert g4_interval(4, 6) == (3, 3)
    assert g4_interval(10, 16) == (8, 9)
    with pytest.raises(AssertionError):
        ClassificationResult(g=2, abs_sigma=2, g4_lo=2, g4_hi=1, method="bounds_only")


@pytest.mark.parametrize("text,name", [("s1^5", "T(2,5)"), ("s1 s2 s1 s2 s1 s2 s1 s2", "T(3,4)"),
                                       ("s1 s2 s1 s2 s1 s2 s1 s2 s1 s2", "T(3,5)"),
                                       ("s1^4 s2 s1^3 s2^2", None), ("s1^2", None)])
def test_is_max_torus(text, name):
    assert is_max_torus(parse_braid(text)) == name


def test_max_torus_conjugate_words():
    w = parse_braid("s1 s2 s1 s2 s1 s2 s1 s2")
    assert is_max_torus(flip_indices(w)) == "T(3,4)"
    assert is_max_torus(push_right_normal_form(w)) == "T(3,4)"
    assert push_right_normal_form(w) != w


def test_names():
    assert max_torus_names(3) == ["T(2,3)", "T(2,5)", "T(2,7)", "T(3,4)"]


knots = st.integers(2, 4).flatmap(
    lambda n: st.lists(st.integers(1, n - 1), min_size=2 * n - 2, max_size=12).map(
        lambda L: BraidWord.from_letters(L, n))).filter(
    lambda w: is_knot(w) and all(k >= 1 for k in w.generator_counts().values()))


@given(knots)
def test_interval_sanity(w):
    c = classify_knot(w)
    assert -(-c.abs_sigma // 2) <= c.g4_lo <= c.g4_hi <= c.g
    assert (c.method == "max_signature") == (c.g4_hi == c.g)
    if c.certificate is not None:
        assert c.abs_sigma < 2 * c.g
