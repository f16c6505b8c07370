"""Positive braid words: parsing, closure permutation, symmetries,
normalization and subword search.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

from . import kernels


class BraidParseError(ValueError):
    pass


@dataclass(frozen=True)
class BraidWord:
    """A positive braid word on ``strands`` strands.

    ``syllables`` is a tuple of ``(generator, exponent)`` pairs; adjacent
    syllables with the same generator are merged on construction.  The
    word is taken as written: first and last syllables are never merged,
    even if the closure would join them.
    """

    strands: int
    syllables: tuple[tuple[int, int], ...]

    def __init__(self, strands: int, syllables: Iterable[Sequence[int]] = ()):
        merged: list[list[int]] = []
        for gen, exp in syllables:
            gen, exp = int(gen), int(exp)
            if exp < 1:
                raise ValueError(f"exponent must be positive, got {exp}")
            if merged and merged[-1][0] == gen:
                merged[-1][1] += exp
            else:
                merged.append([gen, exp])
        strands = int(strands)
        if strands < 2:
            raise ValueError("a braid needs at least 2 strands")
        for gen, _ in merged:
            if not 1 <= gen <= strands - 1:
                raise ValueError(f"generator s{gen} out of range for {strands} strands")
        object.__setattr__(self, "strands", strands)
        object.__setattr__(self, "syllables", tuple((g, e) for g, e in merged))

    @classmethod
    def from_letters(cls, letters: Iterable[int], strands: Optional[int] = None) -> "BraidWord":
        letters = list(letters)
        if strands is None:
            strands = max(letters, default=1) + 1
        return cls(strands, [(g, 1) for g in letters])

    @cached_property
    def letters(self) -> tuple[int, ...]:
        out: list[int] = []
        for gen, exp in self.syllables:
            out.extend([gen] * exp)
        return tuple(out)

    @property
    def crossings(self) -> int:
        return sum(e for _, e in self.syllables)

    def __len__(self) -> int:
        return self.crossings

    def generator_counts(self) -> dict[int, int]:
        counts = {i: 0 for i in range(1, self.strands)}
        for gen, exp in self.syllables:
            counts[gen] += exp
        return counts

    def __str__(self) -> str:
        body = " ".join(f"s{g}" if e == 1 else f"s{g}^{e}" for g, e in self.syllables)
        max_gen = max((g for g, _ in self.syllables), default=0)
        if self.strands != max_gen + 1:
            body += f" @{self.strands}"
        return body

    def compact(self) -> str:
        """Digit-string form (only for generators below 10)."""
        return "".join(str(g) for g in self.letters)


_SYLLABLE = re.compile(r"^[sσ](\d+)(?:\^(\d+))?$")


def parse_braid(text: str) -> BraidWord:
    """Parse ``"s1^4 s2 s1^3 s2^2"``, ``"s1 s2 @4"`` or the digit form ``"1121"``."""
    s = text.strip()
    strands = None
    m = re.search(r"@\s*(\d+)\s*$", s)
    if m:
        strands = int(m.group(1))
        s = s[:m.start()].strip()
    if not s:
        raise BraidParseError("empty braid word")
    if re.fullmatch(r"[0-9]+", s):
        if "0" in s:
            raise BraidParseError("generator index 0 in compact word")
        letters = [int(ch) for ch in s]
        syl = [(g, 1) for g in letters]
    else:
        syl = []
        for tok in s.replace(",", " ").split():
            m = _SYLLABLE.match(tok)
            if not m:
                raise BraidParseError(f"malformed token {tok!r}")
            gen = int(m.group(1))
            exp = int(m.group(2)) if m.group(2) is not None else 1
            if gen == 0:
                raise BraidParseError(f"generator index 0 in {tok!r}")
            if exp == 0:
                raise BraidParseError(f"exponent 0 in {tok!r}")
            syl.append((gen, exp))
    max_gen = max(g for g, _ in syl)
    if strands is None:
        strands = max_gen + 1
    elif max_gen >= strands:
        raise BraidParseError(f"generator s{max_gen} needs more than {strands} strands")
    return BraidWord(strands, syl)


# -- closure combinatorics ------------------------------------------------------

@dataclass(frozen=True)
class Permutation:
    """A permutation of ``{1..n}``; ``images[k-1]`` is the image of ``k``."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError("not a permutation")

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cyc = []
            k = start
            while k not in seen:
                seen.add(k)
                cyc.append(k)
                k = self.images[k - 1]
            out.append(tuple(cyc))
        return out

    def cycle_count(self) -> int:
        return len(self.cycles())

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted(len(c) for c in self.cycles()))


def closure_permutation(w: BraidWord) -> Permutation:
    """Where each strand ends up after running through the word once."""
    pos = list(range(w.strands))  # pos[slot] = strand currently in slot
    for g in w.letters:
        pos[g - 1], pos[g] = pos[g], pos[g - 1]
    images = [0] * w.strands
    for slot, strand in enumerate(pos):
        images[strand] = slot + 1
    return Permutation(tuple(images))


def component_count(w: BraidWord) -> int:
    return kernels.cycle_count(w.letters, w.strands)


def is_knot(w: BraidWord) -> bool:
    return component_count(w) == 1


# -- symmetries ---------------------------------------------------------------

def rotate(w: BraidWord, k: int) -> BraidWord:
    """Move the first ``k`` letters to the end (conjugation)."""
    L = w.letters
    if not L:
        return w
    k %= len(L)
    return BraidWord.from_letters(L[k:] + L[:k], w.strands)


def reverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, reversed(w.syllables))


def flip_indices(w: BraidWord) -> BraidWord:
    """``s_i -> s_{n-i}``: conjugation by the half twist."""
    n = w.strands
    return BraidWord(n, [(n - g, e) for g, e in w.syllables])


def shift_indices(w: BraidWord, k: int, strands: Optional[int] = None) -> BraidWord:
    return BraidWord(strands if strands is not None else w.strands + k,
                     [(g + k, e) for g, e in w.syllables])


# -- braid relation normalization ---------------------------------------------------

def _find_exposable_triple(L: Sequence[int]) -> Optional[tuple[int, int, int]]:
    """Positions (p, q, r), read cyclically, of letters i, i+1, i that far
    commutations can make adjacent.

    That happens exactly when p and r are cyclically consecutive
    occurrences of s_i, exactly one s_{i+1} (at q) lies between them and
    no s_{i-1} does.  Returns the candidate with the smallest p, preferring
    non-wrapping candidates.
    """
    c = len(L)
    occ: dict[int, list[int]] = {}
    for pos, g in enumerate(L):
        occ.setdefault(g, []).append(pos)
    best_plain = None
    best_wrap = None
    for i, positions in occ.items():
        if len(positions) < 2 or (i + 1) not in occ:
            continue
        for a, p in enumerate(positions):
            r = positions[(a + 1) % len(positions)]
            wrap = r <= p
            span = range(p + 1, r) if not wrap else list(range(p + 1, c)) + list(range(0, r))
            q = None
            ok = True
            for s in span:
                g = L[s]
                if g == i + 1:
                    if q is not None:
                        ok = False
                        break
                    q = s
                elif g == i - 1:
                    ok = False
                    break
            if not ok or q is None:
                continue
            if not wrap:
                if best_plain is None or p < best_plain[0]:
                    best_plain = (p, q, r)
            elif best_wrap is None or p < best_wrap[0]:
                best_wrap = (p, q, r)
    return best_plain if best_plain is not None else best_wrap


def _apply_right_push(L: list[int], p: int, q: int, r: int) -> list[int]:
    """Rewrite s_i s_{i+1} s_i -> s_{i+1} s_i s_{i+1} at cyclic positions p, q, r.

    The word is first rotated so that p is at 0.  Letters between p and q
    commute with s_i and move in front; letters between q and r commute
    with s_i and move behind.
    """
    c = len(L)
    R = L[p:] + L[:p]
    q, r = (q - p) % c, (r - p) % c
    i = R[0]
    front = R[1:q]
    back = R[q + 1:r]
    return front + [i + 1, i, i + 1] + back + R[r + 1:]


def push_right_normal_form(w: BraidWord) -> BraidWord:
    """Apply ``s_i s_{i+1} s_i -> s_{i+1} s_i s_{i+1}`` until no such factor
    can be exposed by far commutations and rotation.

    Each rewrite raises the index sum by one and the index sum is
    bounded, so this terminates.  The result represents the same closure.
    """
    L = list(w.letters)
    while True:
        hit = _find_exposable_triple(L)
        if hit is None:
            return BraidWord.from_letters(L, w.strands)
        L = _apply_right_push(L, *hit)


# -- subwords -------------------------------------------------------------------

@dataclass(frozen=True)
class SubwordWitness:
    """Where a pattern sits inside a transformed host word.

    The host is transformed in this order: optional reversal, optional
    index flip, rotation by ``offset``, then the pattern is shifted by
    ``shift``.  ``positions`` index letters of the transformed host.
    """

    positions: tuple[int, ...]
    offset: int
    reversed: bool
    shift: int
    flipped: bool = False

    def to_dict(self) -> dict:
        return {"positions": list(self.positions), "offset": self.offset,
                "reversed": self.reversed, "shift": self.shift, "flipped": self.flipped}

    @classmethod
    def from_dict(cls, d: dict) -> "SubwordWitness":
        return cls(tuple(d["positions"]), d["offset"], d["reversed"], d["shift"],
                   d.get("flipped", False))


def transformed_host(host: BraidWord, witness: SubwordWitness) -> BraidWord:
    h = host
    if witness.reversed:
        h = reverse(h)
    if witness.flipped:
        h = flip_indices(h)
    return rotate(h, witness.offset)


def contains_subword(host: BraidWord, pattern: BraidWord, cyclic: bool = True,
                     reversal: bool = True, index_shift: bool = True,
                     flip: bool = False) -> Optional[SubwordWitness]:
    """Find ``pattern`` inside ``host`` by deleting letters.

    Deleting letters of a positive braid gives a subsurface of its fibre
    surface, so this is the certificate the proofs use.  Allowed host
    transformations are rotation, reversal, index flip and a uniform
    shift of the pattern's indices; each can be switched off.
    """
    P = pattern.letters
    if not P:
        raise ValueError("pattern must be nonempty")
    H0 = host.letters
    c = len(H0)
    if len(P) > c:
        return None
    pmin, pmax = min(P), max(P)
    if index_shift:
        shifts = range(1 - pmin, host.strands - pmax)
    else:
        shifts = range(0, 1) if pmax <= host.strands - 1 else range(0)
    variants = []
    for rev in ((False, True) if reversal else (False,)):
        for fl in ((False, True) if flip else (False,)):
            H = H0[::-1] if rev else H0
            if fl:
                H = tuple(host.strands - g for g in H)
            variants.append((rev, fl, H))
    offsets = range(c) if cyclic else range(1)
    for rev, fl, H in variants:
        counts = [0] * (host.strands + 1)
        for g in H:
            counts[g] += 1
        for k in shifts:
            Pk = tuple(g + k for g in P)
            need = [0] * (host.strands + 1)
            for g in Pk:
                need[g] += 1
            if any(need[g] > counts[g] for g in range(host.strands + 1)):
                continue
            pos = kernels.cyclic_subsequence(H, Pk, offsets.stop)
            if pos is not None:
                off, positions = pos
                return SubwordWitness(tuple(positions), off, rev, k, fl)
    return None


def verify_subword_witness(host: BraidWord, pattern: BraidWord, w: SubwordWitness) -> bool:
    H = transformed_host(host, w).letters
    P = [g + w.shift for g in pattern.letters]
    pos = w.positions
    if len(pos) != len(P) or any(b <= a for a, b in zip(pos, pos[1:])):
        return False
    if pos and (pos[0] < 0 or pos[-1] >= len(H)):
        return False
    return all(H[p] == g for p, g in zip(pos, P))


# -- Lemma-5 style index reduction -----------------------------------------------

def _match_path_form(I: Sequence[int], a: int) -> Optional[tuple[int, int]]:
    """If ``I`` is ``a^k b a b^l`` (b = a+1, k, l >= 1) return (k, l)."""
    b = a + 1
    n = len(I)
    k = 0
    while k < n and I[k] == a:
        k += 1
    if k == 0 or n < k + 3:
        return None
    if I[k] != b or I[k + 1] != a:
        return None
    rest = I[k + 2:]
    if not rest or any(x != b for x in rest):
        return None
    return k, len(rest)


def _merge_columns(L: list[int], i: int) -> Optional[list[int]]:
    """Merge columns i, i+1 of a linear word whose induced {i, i+1} subword
    is ``s_i^k s_{i+1} s_i s_{i+1}^l``.

    Lower letters (< i) after the last s_i are carried round to the front
    and higher letters (> i+1) before the first s_{i+1} round to the back;
    both moves are far commutations followed by a rotation.  The adjacent
    pair ``s_{i+1} s_i`` in the middle becomes a single letter of the
    merged column and indices above i drop by one.
    """
    lower = lambda g: g < i
    higher = lambda g: g > i + 1
    pos_a = [p for p, g in enumerate(L) if g == i]
    a_last = pos_a[-1]
    tail_lower = [g for p, g in enumerate(L) if p > a_last and lower(g)]
    L = tail_lower + [g for p, g in enumerate(L) if not (p > a_last and lower(g))]
    b_first = next(p for p, g in enumerate(L) if g == i + 1)
    head_higher = [g for p, g in enumerate(L) if p < b_first and higher(g)]
    L = [g for p, g in enumerate(L) if not (p < b_first and higher(g))] + head_higher
    b_first = next(p for p, g in enumerate(L) if g == i + 1)
    a_last = max(p for p, g in enumerate(L) if g == i)
    if not b_first < a_last:
        return None
    middle = L[b_first + 1:a_last]
    if any(g in (i, i + 1) for g in middle):
        return None
    mid_lower = [g for g in middle if lower(g)]
    mid_higher = [g for g in middle if higher(g)]
    merged = L[:b_first] + mid_lower + [i] + mid_higher + L[a_last + 1:]
    return [g if g <= i else g - 1 for g in merged]


@dataclass
class ReductionResult:
    word: Optional[BraidWord]
    column: Optional[int] = None
    flagged: list[str] = field(default_factory=list)


def reduce_index_lemma5_detailed(w: BraidWord) -> ReductionResult:
    """Try to merge two adjacent columns whose induced linking pattern is a path.

    Every candidate output is checked against the input on component
    count, genus, signature and Alexander polynomial; a mismatch is
    recorded in ``flagged`` and the candidate dropped.
    """
    from .seifert import core_invariants  # circular: seifert imports braid

    result = ReductionResult(None)
    if w.strands < 3:
        return result
    counts = w.generator_counts()
    if any(v == 0 for v in counts.values()):
        return result
    ref = None
    for i in range(1, w.strands - 1):
        base = list(w.letters)
        for rev in (False, True):
            W = base[::-1] if rev else base
            idx = [p for p, g in enumerate(W) if g in (i, i + 1)]
            I = [W[p] for p in idx]
            for s in range(len(I)):
                if _match_path_form(I[s:] + I[:s], i) is None:
                    continue
                start = idx[s]
                cand = _merge_columns(W[start:] + W[:start], i)
                if cand is None:
                    continue
                out = BraidWord.from_letters(cand, w.strands - 1)
                if ref is None:
                    ref = core_invariants(w)
                got = core_invariants(out)
                if got != ref:
                    result.flagged.append(f"column {i}: invariants changed for {out}")
                    continue
                result.word = out
                result.column = i
                return result
    return result


def reduce_index_lemma5(w: BraidWord) -> Optional[BraidWord]:
    return reduce_index_lemma5_detailed(w).word
