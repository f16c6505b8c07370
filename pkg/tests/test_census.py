import csv
import io
import itertools
import json

import pytest

from posbraid.braid import BraidWord, is_knot, parse_braid, rotate
from posbraid.census import (CSV_COLUMNS, CensusBoundError, canonical_word,
                             canonical_word_with_reversal, census_words, check_maximal_classes,
                             check_t56, check_table_one, defect_by_index, enumerate_census,
                             fingerprint_classes, render)
from posbraid.classify import max_torus_names


def naive_census(n, c, knots):
    out = set()
    for letters in itertools.product(range(1, n), repeat=c):
        if any(letters.count(g) < 2 for g in range(1, n)):
            continue
        w = BraidWord.from_letters(letters, n)
        if knots and not is_knot(w):
            continue
        out.add(canonical_word(w).letters)
    return out


@pytest.mark.parametrize("knots", [False, True])
def test_matches_naive_enumeration(knots):
    got = {}
    for w in census_words(3, 8, knots):
        got.setdefault((w.strands, w.crossings), set()).add(w.letters)
    for n in (2, 3):
        for c in range(2 * (n - 1), 9):
            assert got.get((n, c), set()) == naive_census(n, c, knots), (n, c)


def test_counts_are_stable():
    assert sum(1 for _ in census_words(4, 10, True)) == sum(1 for _ in census_words(4, 10, True))
    words = [str(w) for w in census_words(3, 7)]
    assert words == sorted(words, key=lambda s: (parse_braid(s).strands, parse_braid(s).crossings,
                                                 parse_braid(s).letters))


def test_canonical_word_examples():
    assert canonical_word(parse_braid("s2^2 s1^3")) == parse_braid("s1^3 s2^2")
    assert canonical_word(parse_braid("s1^3")) == parse_braid("s1^3")
    w = parse_braid("s1 s2^2 s1^3 s2")
    for k in range(w.crossings):
        assert canonical_word(rotate(w, k)) == canonical_word(w)
    r = canonical_word_with_reversal(parse_braid("s1 s2 s1^2 s2^2"))
    assert r.letters <= canonical_word(parse_braid("s1 s2 s1^2 s2^2")).letters


def test_bounds():
    with pytest.raises(CensusBoundError):
        list(census_words(7, 10))
    with pytest.raises(CensusBoundError):
        list(census_words(3, 15))


def test_deterministic_output():
    a = render(enumerate_census(3, 7, knots=True), "json")
    b = render(enumerate_census(3, 7, knots=True), "json")
    assert a == b


def test_csv_schema():
    text = render(enumerate_census(3, 8, knots=True, prime=True), "csv")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert tuple(rows[0].keys()) == CSV_COLUMNS
    row = next(r for r in rows if r["word"] == "s1^3")
    assert (row["g"], row["abs_sigma"], row["g4_exact"], row["alexander"]) == ("1", "2", "1", "1 -1 1")
    for r in rows:
        if r["g4_exact"] == "":
            assert int(r["g4_lo"]) < int(r["g4_hi"])
        if int(r["abs_sigma"]) < 2 * int(r["g"]):
            assert r["certificate"]


def test_json_schema():
    data = json.loads(render(enumerate_census(3, 8, knots=True, prime=True), "json"))
    rec = data["records"][0]
    for key in ("word", "letters", "genus", "signature", "abs_signature", "alexander",
                "components", "g4_top", "method", "certificate", "torus"):
        assert key in rec
    assert set(data["defect_by_index"]) <= {"2", "3"}


def test_links_have_no_classification():
    recs = list(enumerate_census(2, 4))
    assert [str(r.word) for r in recs] == ["s1^2", "s1^3", "s1^4"]
    assert recs[0].classification is None and recs[1].classification is not None


def test_table_and_t56():
    assert all(r["ok"] for r in check_table_one())
    assert check_t56()["ok"]


def test_maximal_classes_small():
    rep = check_maximal_classes(3, 10)
    assert rep["ok"]
    assert set(rep["torus_found"]) == {"T(2,3)", "T(2,5)", "T(2,7)", "T(2,9)", "T(2,11)",
                                       "T(3,4)", "T(3,5)"} & set(rep["torus_expected"])


def test_fingerprint_classes_and_stats(census_5_12):
    classes = fingerprint_classes(census_5_12)
    assert sum(len(v) for v in classes.values()) == len(census_5_12)
    stats = defect_by_index(census_5_12)
    assert sum(v["knots"] for v in stats.values()) == len(census_5_12)
    assert stats[2]["bounds_only"] == stats[2]["sigma_gap_one"] == 0
