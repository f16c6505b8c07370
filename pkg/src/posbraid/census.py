"""Enumeration of positive braid words up to closure symmetries, fingerprint
classes, and the regression checks against the published values."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Iterator, Optional

from . import kernels
from .braid import BraidWord, flip_indices, is_knot, parse_braid
from .classify import ClassificationResult, classify_knot, is_max_torus, max_torus_names
from .pattern import is_connected, word_pattern
from .seifert import InvariantRecord, invariants

MAX_STRANDS = 6
MAX_CROSSINGS = 14


class CensusBoundError(ValueError):
    pass


def _min_rotation(letters: tuple[int, ...]) -> tuple[int, ...]:
    return min(letters[k:] + letters[:k] for k in range(len(letters))) if letters else letters


def canonical_word(w: BraidWord) -> BraidWord:
    """Lexicographically least letter sequence over rotations and index flip."""
    best = min(_min_rotation(w.letters), _min_rotation(flip_indices(w).letters))
    return BraidWord.from_letters(best, w.strands)


def canonical_word_with_reversal(w: BraidWord) -> BraidWord:
    rev = BraidWord.from_letters(w.letters[::-1], w.strands)
    return min(canonical_word(w), canonical_word(rev), key=lambda v: v.letters)


@dataclass
class CensusRecord:
    word: BraidWord
    record: InvariantRecord
    classification: Optional[ClassificationResult]

    @property
    def fingerprint(self) -> tuple:
        r = self.record
        return (r.genus, r.abs_signature, r.alexander.coeffs, r.components)

    def to_dict(self) -> dict:
        d = self.record.to_dict()
        d["word"] = str(self.word)
        d["letters"] = self.word.compact()
        if self.classification is not None:
            c = self.classification
            d["g4_top"] = ({"exact": c.g4} if c.g4 is not None else {"lo": c.g4_lo, "hi": c.g4_hi})
            d["method"] = c.method
            d["certificate"] = c.certificate.to_dict() if c.certificate is not None else None
            d["torus"] = c.torus
        return d

    def csv_row(self) -> dict:
        r, c = self.record, self.classification
        cert = ""
        if c is not None and c.certificate is not None:
            cert = f"{c.certificate.kind}:{c.certificate.pattern}"
        return {
            "word": str(self.word), "n": self.word.strands, "c": self.word.crossings,
            "b": r.components, "prime": int(r.prime), "g": r.genus, "abs_sigma": r.abs_signature,
            "alexander": " ".join(map(str, r.alexander.coeffs)),
            "g4_lo": "" if c is None else c.g4_lo, "g4_hi": "" if c is None else c.g4_hi,
            "g4_exact": "" if c is None or c.g4 is None else c.g4, "certificate": cert,
        }


CSV_COLUMNS = ("word", "n", "c", "b", "prime", "g", "abs_sigma", "alexander",
               "g4_lo", "g4_hi", "g4_exact", "certificate")


def census_words(max_strands: int, max_crossings: int, knots: bool = False):
    """Canonical words, ordered by (strands, crossings, letters)."""
    if not 2 <= max_strands <= MAX_STRANDS or not 1 <= max_crossings <= MAX_CROSSINGS:
        raise CensusBoundError(f"census bounds are strands <= {MAX_STRANDS}, "
                               f"crossings <= {MAX_CROSSINGS}")
    for n in range(2, max_strands + 1):
        for c in range(2 * (n - 1), max_crossings + 1):
            for letters in kernels.census_words(n - 1, c, knots):
                yield BraidWord.from_letters(letters, n)


def enumerate_census(max_strands: int, max_crossings: int, knots: bool = False,
                     prime: bool = False, classify: bool = True) -> Iterator[CensusRecord]:
    for w in census_words(max_strands, max_crossings, knots):
        if prime and not is_connected(word_pattern(w)):
            continue
        rec = invariants(w)
        cls = classify_knot(w, record=rec) if (classify and rec.components == 1) else None
        if cls is not None:
            rec.g4_top = cls.g4_bounds
            rec.certificate = cls.certificate
        yield CensusRecord(w, rec, cls)


def fingerprint_classes(records) -> dict[tuple, list[str]]:
    out: dict[tuple, list[str]] = {}
    for r in records:
        out.setdefault(r.fingerprint, []).append(str(r.word))
    return out


def defect_by_index(records) -> dict[int, dict]:
    """Per strand count: how many knots fall in each classification method,
    and the smallest certified defect g - g4_hi."""
    out: dict[int, dict] = {}
    for r in records:
        c = r.classification
        if c is None:
            continue
        row = out.setdefault(r.word.strands, {"knots": 0, "max_signature": 0,
                                              "sigma_gap_one": 0, "bounds_only": 0,
                                              "min_defect": None})
        row["knots"] += 1
        row[c.method] += 1
        d = c.g - c.g4_hi
        if d > 0 and (row["min_defect"] is None or d < row["min_defect"]):
            row["min_defect"] = d
    return out


def write_json(records, fp) -> None:
    records = list(records)
    json.dump({"records": [r.to_dict() for r in records],
               "defect_by_index": {str(k): v for k, v in defect_by_index(records).items()}},
              fp, indent=1, sort_keys=True)
    fp.write("\n")


def write_csv(records, fp) -> None:
    wr = csv.DictWriter(fp, fieldnames=CSV_COLUMNS, lineterminator="\n")
    wr.writeheader()
    for r in records:
        wr.writerow(r.csv_row())


def render(records, fmt: str) -> str:
    buf = io.StringIO()
    (write_json if fmt == "json" else write_csv)(records, buf)
    return buf.getvalue()


# -- published values -----------------------------------------------------------------

TABLE_ONE = (
    ("10_139", "s1^4 s2 s1^3 s2^2", 4, 6, 3),
    ("10_152", "s1^3 s2^2 s1^2 s2^3", 4, 6, 3),
    ("11n77", "s1^2 s2^2 s1 s3 s2^3 s3^2", 4, 6, 3),
    ("12n242", "s1 s2^2 s1^2 s2^7", 5, 8, 4),
    ("12n472", "s1 s2^4 s1^2 s2^5", 5, 8, 4),
    ("12n574", "s1 s2^6 s1^2 s2^3", 5, 8, 4),
    ("12n679", "s1^3 s2^2 s1^2 s2^5", 5, 8, 4),
    ("12n688", "s1^3 s2^4 s1^2 s2^3", 5, 8, 4),
    ("12n725", "s1 s2^2 s1^4 s2^5", 5, 8, 4),
    ("12n888", "s1^3 s2^3 s1^3 s2^3", 5, 8, 4),
)

T56 = "s1 s2 s3 s4 " * 6


def check_table_one() -> list[dict]:
    rows = []
    for name, braid, g, s, g4 in TABLE_ONE:
        c = classify_knot(parse_braid(braid))
        rows.append({"knot": name, "braid": braid, "expected": [g, s, g4],
                     "computed": [c.g, c.abs_sigma, c.g4],
                     "ok": (c.g, c.abs_sigma, c.g4) == (g, s, g4)})
    return rows


def check_t56() -> dict:
    c = classify_knot(parse_braid(T56))
    return {"g": c.g, "abs_sigma": c.abs_sigma, "g4_hi": c.g4_hi,
            "ok": c.g == 10 and c.abs_sigma < 2 * c.g and c.g4_hi <= c.g - 1}


def check_maximal_classes(max_strands: int = 5, max_crossings: int = 12,
                          records=None) -> dict:
    """Fingerprint classes with |sigma| = 2g against the maximal torus knots."""
    if records is None:
        records = enumerate_census(max_strands, max_crossings, knots=True, prime=True,
                                   classify=False)
    found = {}
    for r in records:
        if r.record.abs_signature == 2 * r.record.genus:
            found.setdefault(r.fingerprint, str(r.word))
    names = {}
    for fp, word in found.items():
        names[word] = is_max_torus(parse_braid(word))
    expected = {n for n in max_torus_names(5)
                if n != "T(2,13)" and _torus_crossings(n) <= max_crossings
                and _torus_strands(n) <= max_strands}
    got = {n for n in names.values() if n is not None}
    unmatched = sorted(w for w, n in names.items() if n is None)
    return {"classes": len(found), "torus_found": sorted(got), "torus_expected": sorted(expected),
            "unmatched": unmatched, "ok": not unmatched and got == expected
            and len(found) == len(expected)}


def _torus_strands(name: str) -> int:
    return int(name[2:-1].split(",")[0])


def _torus_crossings(name: str) -> int:
    p, q = map(int, name[2:-1].split(","))
    return (p - 1) * q


@dataclass
class PaperReport:
    table: list[dict]
    example: list[dict]
    t56: dict
    maximal: dict

    @property
    def ok(self) -> bool:
        return (all(r["ok"] for r in self.table) and all(r["ok"] for r in self.example)
                and self.t56["ok"] and self.maximal["ok"])

    def to_dict(self) -> dict:
        return {"table": self.table, "example": self.example, "t56": self.t56,
                "maximal_classes": self.maximal, "ok": self.ok}


def verify_paper(max_strands: int = 5, max_crossings: int = 12) -> PaperReport:
    from .minors import verify_example
    return PaperReport(table=check_table_one(), example=verify_example().rows,
                       t56=check_t56(), maximal=check_maximal_classes(max_strands, max_crossings))
