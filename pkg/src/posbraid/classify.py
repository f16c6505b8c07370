"""Topological 4-genus of positive braid knots.

Positive braid knots with |sigma| = 2g have g4 = g; all others have
g4 <= g - 1, and the signature bound 2 g4 >= |sigma| pins g4 down when
|sigma| = 2g - 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Optional

from .braid import BraidWord, is_knot, parse_braid
from .pattern import ReducibleWordError, is_connected, split_connected_sum, word_pattern


@dataclass(frozen=True)
class ClassificationResult:
    g: int
    abs_sigma: int
    g4_lo: int
    g4_hi: int
    method: str  # "max_signature" | "sigma_gap_one" | "bounds_only"
    certificate: Any = None
    torus: Optional[str] = None
    summands: tuple[str, ...] = ()

    def __post_init__(self):
        if not (0 <= self.g4_lo <= self.g4_hi <= self.g):
            raise AssertionError(f"inconsistent g4 interval [{self.g4_lo}, {self.g4_hi}]")

    @property
    def g4(self) -> Optional[int]:
        return self.g4_lo if self.g4_lo == self.g4_hi else None

    @property
    def g4_bounds(self):
        return self.g4 if self.g4 is not None else (self.g4_lo, self.g4_hi)

    def to_dict(self) -> dict:
        g4 = {"exact": self.g4} if self.g4 is not None else {"lo": self.g4_lo, "hi": self.g4_hi}
        cert = self.certificate.to_dict() if self.certificate is not None else None
        out = {"g": self.g, "abs_sigma": self.abs_sigma, "g4": g4, "method": self.method,
               "certificate": cert, "torus": self.torus}
        if self.summands:
            out["summands"] = list(self.summands)
        return out


def g4_interval(g: int, abs_sigma: int) -> tuple[int, int]:
    lo = math.ceil(abs_sigma / 2)
    hi = g if abs_sigma == 2 * g else g - 1
    return lo, hi


def method_for(g: int, abs_sigma: int) -> str:
    if abs_sigma == 2 * g:
        return "max_signature"
    if abs_sigma == 2 * g - 2:
        return "sigma_gap_one"
    return "bounds_only"


class NotAKnotError(ValueError):
    pass


def _prime_parts(w: BraidWord) -> list[BraidWord]:
    counts = w.generator_counts()
    if any(k == 0 for k in counts.values()):
        raise ReducibleWordError("a generator is missing: split closure")
    if all(k >= 2 for k in counts.values()) and is_connected(word_pattern(w)):
        return [w]
    return [f for f in split_connected_sum(w) if f.crossings > 1]


def classify_knot(w: BraidWord, certify: bool = True, record=None) -> ClassificationResult:
    """Exact g4 or bounds for the closure of ``w``; composite knots are
    classified summand by summand.  ``record`` may pass in ``invariants(w)``."""
    from .minors import defect_certificate
    from .seifert import invariants

    if not is_knot(w):
        raise NotAKnotError(f"closure of {w} is not a knot")
    parts = _prime_parts(w)
    g = sig = 0
    cert = None
    for f in parts:
        rec = record if (record is not None and f is w) else invariants(f)
        g += rec.genus
        sig += rec.signature
        if certify and cert is None and rec.abs_signature < 2 * rec.genus:
            cert = defect_certificate(f)
    s = abs(sig)
    lo, hi = g4_interval(g, s)
    torus = None
    if len(parts) == 1 and parts[0] is w:
        fp = _fingerprint_of(record) if record is not None else fingerprint(w)
        torus = _torus_name(fp)
    summands = tuple(str(f) for f in parts) if (len(parts) != 1 or parts[0] is not w) else ()
    return ClassificationResult(g=g, abs_sigma=s, g4_lo=lo, g4_hi=hi, method=method_for(g, s),
                                certificate=cert, torus=torus, summands=summands)


# -- maximal torus knots -----------------------------------------------------------

def fingerprint(w: BraidWord) -> tuple:
    """(g, |sigma|, normalized Alexander coefficients, components)."""
    from .seifert import invariants
    return _fingerprint_of(invariants(w))


def _fingerprint_of(rec) -> tuple:
    return (rec.genus, rec.abs_signature, rec.alexander.coeffs, rec.components)


@lru_cache(maxsize=None)
def _torus_fingerprint(name: str) -> tuple:
    p, q = map(int, name[2:-1].split(","))
    if p == 2:
        word = BraidWord(2, [(1, q)])
    else:
        word = parse_braid(" ".join(["s1 s2"] * q))
    return fingerprint(word)


def max_torus_names(max_genus: int) -> list[str]:
    names = [f"T(2,{2 * g + 1})" for g in range(1, max_genus + 1)]
    names += [n for n, g in (("T(3,4)", 3), ("T(3,5)", 4)) if g <= max_genus]
    return names


def is_max_torus(w: BraidWord) -> Optional[str]:
    """Name of the maximal-4-genus torus knot with the same fingerprint, if any."""
    if not is_knot(w):
        return None
    counts = w.generator_counts()
    if any(k < 2 for k in counts.values()):
        return None
    return _torus_name(fingerprint(w))


def _torus_name(fp: tuple) -> Optional[str]:
    if fp[3] != 1 or fp[1] != 2 * fp[0]:
        return None
    candidates = [f"T(2,{2 * fp[0] + 1})"] if fp[0] >= 1 else []
    candidates += ["T(3,4)", "T(3,5)"]
    for name in candidates:
        if _torus_fingerprint(name) == fp:
            return name
    return None
