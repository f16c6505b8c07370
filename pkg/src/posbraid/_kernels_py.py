"""Pure-Python versions of the hot loops.

Same signatures as the compiled ``_kernels`` extension; ``kernels``
picks one of the two at import time.
"""

from __future__ import annotations

from typing import Optional, Sequence


def cycle_count(letters: Sequence[int], strands: int) -> int:
    """Number of cycles of the closure permutation."""
    pos = list(range(strands))
    for g in letters:
        pos[g - 1], pos[g] = pos[g], pos[g - 1]
    seen = [False] * strands
    cycles = 0
    for s in range(strands):
        if not seen[s]:
            cycles += 1
            k = s
            while not seen[k]:
                seen[k] = True
                k = pos[k]
    return cycles


def cyclic_subsequence(host: Sequence[int], pattern: Sequence[int],
                       n_offsets: int) -> Optional[tuple[int, list[int]]]:
    """First rotation offset (< n_offsets) of ``host`` containing ``pattern``
    as a subsequence, with the greedy (leftmost) matching positions."""
    c = len(host)
    m = len(pattern)
    for off in range(n_offsets):
        positions = []
        j = 0
        for t in range(c):
            if host[(off + t) % c] == pattern[j]:
                positions.append(t)
                j += 1
                if j == m:
                    return off, positions
    return None


def linking_edges(cols: Sequence[int], tops: Sequence[int],
                  bottoms: Sequence[int]) -> list[tuple[int, int]]:
    """Edges of the linking pattern for bricks given as parallel arrays.

    Same column: the bricks share a defining letter.  Adjacent columns:
    exactly one endpoint of one brick lies strictly inside the other.
    """
    n = len(cols)
    edges = []
    for u in range(n):
        cu, a, b = cols[u], tops[u], bottoms[u]
        for v in range(u + 1, n):
            cv = cols[v]
            if cv == cu:
                if bottoms[v] == a or tops[v] == b:
                    edges.append((u, v))
            elif cv == cu + 1 or cv == cu - 1:
                c, d = tops[v], bottoms[v]
                if (a < c < b) != (a < d < b):
                    edges.append((u, v))
    return edges


def alexander_det(A: Sequence[Sequence[int]]) -> list[int]:
    """Coefficients (low to high) of det(A - t A^T)."""
    from .algebra import alexander_matrix_det
    return list(alexander_matrix_det(A).coeffs)


def signature(S: Sequence[Sequence[int]]) -> int:
    from .algebra import symmetric_signature
    return symmetric_signature(S)


def _min_rotation(w: Sequence[int]) -> tuple[int, ...]:
    c = len(w)
    return min(tuple(w[k:]) + tuple(w[:k]) for k in range(c))


def census_words(alphabet: int, length: int, knots_only: bool) -> list[tuple[int, ...]]:
    """Necklaces of the given length over letters 1..alphabet in which every
    letter occurs at least twice and which are no larger than their index
    flip's necklace; optionally only those closing to a knot on
    ``alphabet + 1`` strands."""
    out = []
    k, n = alphabet, length
    w = [-1]
    while w:
        w[-1] += 1
        m = len(w)
        if n % m == 0:
            word = tuple(x + 1 for x in w) * (n // m)
            if _keep(word, k, knots_only):
                out.append(word)
        while len(w) < n:
            w.append(w[len(w) - m])
        while w and w[-1] == k - 1:
            w.pop()
    return out


def _keep(word: tuple[int, ...], k: int, knots_only: bool) -> bool:
    counts = [0] * (k + 1)
    for g in word:
        counts[g] += 1
    if min(counts[1:]) < 2:
        return False
    if _min_rotation(tuple(k + 1 - g for g in word)) < word:
        return False
    return not knots_only or cycle_count(word, k + 1) == 1
