"""Exact arithmetic: Laurent polynomials over Z, polynomial determinants,
signature and rank of integer matrices.

Nothing in here touches floating point.  Integers are Python ints, so
coefficient growth is never a concern.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Matrix = list[list[int]]


@dataclass(frozen=True)
class LaurentPoly:
    """An element of Z[t, 1/t].

    ``coeffs[j]`` is the coefficient of ``t**(min_degree + j)``.  The
    constructor strips zero coefficients from both ends, so two equal
    polynomials always have equal fields.  The zero polynomial has
    ``coeffs == ()`` and ``min_degree == 0``.
    """

    min_degree: int
    coeffs: tuple[int, ...]

    def __init__(self, min_degree: int = 0, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        lo, hi = 0, len(c)
        while lo < hi and c[lo] == 0:
            lo += 1
        while hi > lo and c[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            object.__setattr__(self, "min_degree", 0)
            object.__setattr__(self, "coeffs", ())
        else:
            object.__setattr__(self, "min_degree", int(min_degree) + lo)
            object.__setattr__(self, "coeffs", tuple(c[lo:hi]))

    @classmethod
    def const(cls, a: int) -> "LaurentPoly":
        return cls(0, (a,))

    @classmethod
    def monomial(cls, a: int, k: int) -> "LaurentPoly":
        return cls(k, (a,))

    @classmethod
    def from_dict(cls, d: dict) -> "LaurentPoly":
        return cls(d["min_degree"], d["coeffs"])

    def to_dict(self) -> dict:
        return {"min_degree": self.min_degree, "coeffs": list(self.coeffs)}

    @property
    def max_degree(self) -> int:
        return self.min_degree + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def span(self) -> int:
        """Degree span ``max_degree - min_degree`` (-1 for zero)."""
        return len(self.coeffs) - 1

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.min_degree, other.min_degree)
        hi = max(self.max_degree, other.max_degree)
        out = [0] * (hi - lo + 1)
        for p in (self, other):
            off = p.min_degree - lo
            for j, a in enumerate(p.coeffs):
                out[off + j] += a
        return LaurentPoly(lo, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.min_degree, [-a for a in self.coeffs])

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return LaurentPoly.const(other) - self

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other)
        if self.is_zero() or other.is_zero():
            return LaurentPoly()
        return LaurentPoly(self.min_degree + other.min_degree,
                           _pmul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __call__(self, x):
        """Evaluate at ``x`` (an int or Fraction; ``x != 0`` if min_degree < 0)."""
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        if self.min_degree >= 0:
            return acc * x ** self.min_degree
        return Fraction(acc) / Fraction(x) ** (-self.min_degree)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``t**k``."""
        return LaurentPoly(self.min_degree + k, self.coeffs)

    def normalized(self) -> "LaurentPoly":
        """Shift to min_degree 0 and make the leading coefficient positive."""
        if self.is_zero():
            return self
        c = self.coeffs if self.coeffs[-1] > 0 else tuple(-a for a in self.coeffs)
        return LaurentPoly(0, c)

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient; raises ``ArithmeticError`` if ``other`` does not divide."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return self
        q = _pdivexact(list(self.coeffs), list(other.coeffs))
        return LaurentPoly(self.min_degree - other.min_degree, q)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for j, a in enumerate(self.coeffs):
            if a == 0:
                continue
            k = self.min_degree + j
            if k == 0:
                mono = ""
            elif k == 1:
                mono = "t"
            else:
                mono = f"t^{k}"
            if mono and abs(a) == 1:
                body = mono
            else:
                body = f"{abs(a)}{'*' if mono else ''}{mono}"
            sign = "-" if a < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


T = LaurentPoly(1, (1,))
ONE = LaurentPoly.const(1)


def _pmul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _psub(a: Sequence[int], b: Sequence[int]) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    while out and out[-1] == 0:
        out.pop()
    return out


def _pdivexact(a: list[int], b: list[int]) -> list[int]:
    """Exact division of integer polynomials (low-to-high coefficient lists)."""
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    if not a:
        return []
    if len(b) > len(a):
        raise ArithmeticError("inexact polynomial division")
    a = list(a)
    lead = b[-1]
    q = [0] * (len(a) - len(b) + 1)
    for k in range(len(q) - 1, -1, -1):
        num = a[k + len(b) - 1]
        if num % lead:
            raise ArithmeticError("inexact polynomial division")
        c = num // lead
        q[k] = c
        if c:
            for j, y in enumerate(b):
                a[k + j] -= c * y
    if any(a):
        raise ArithmeticError("inexact polynomial division")
    return q


# -- ring predicates ---------------------------------------------------------

def lp_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def lp_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def lp_neg(p: LaurentPoly) -> LaurentPoly:
    return -p


def is_unit(p: LaurentPoly) -> bool:
    """True iff ``p = +-t^k``."""
    return len(p.coeffs) == 1 and abs(p.coeffs[0]) == 1


def lp_equal_up_to_unit(p: LaurentPoly, q: LaurentPoly) -> bool:
    """True iff ``p = +-t^k q`` for some integer k."""
    if p.is_zero() or q.is_zero():
        return p.is_zero() and q.is_zero()
    return p.normalized() == q.normalized()


# -- determinants ---------------------------------------------------------------

def poly_det(M: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Determinant of a square matrix of Laurent polynomials.

    Rows are first cleared of negative powers, then fraction-free
    (Bareiss) elimination runs over Z[t]; every division is exact.
    """
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("poly_det needs a square matrix")
    if n == 0:
        return ONE
    shift = 0
    rows: list[list[list[int]]] = []
    for row in M:
        lo = min((p.min_degree for p in row if not p.is_zero()), default=0)
        shift += lo
        rows.append([[0] * (p.min_degree - lo) + list(p.coeffs) if not p.is_zero() else []
                     for p in row])
    det = bareiss_poly(rows)
    return LaurentPoly(shift, det)


def bareiss_poly(m: list[list[list[int]]]) -> list[int]:
    """Bareiss determinant of a matrix with entries in Z[t] (coefficient lists)."""
    n = len(m)
    m = [[list(e) for e in row] for row in m]
    sign = 1
    prev: list[int] = [1]
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return []
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            for j in range(k + 1, n):
                num = _psub(_pmul(pivot, m[i][j]), _pmul(mik, m[k][j]))
                m[i][j] = _pdivexact(num, prev) if num else []
            m[i][k] = []
        prev = pivot
    det = m[n - 1][n - 1]
    return [sign * a for a in det]


def alexander_matrix_det(A: Sequence[Sequence[int]]) -> LaurentPoly:
    """``det(A - t A^T)`` for an integer matrix A."""
    n = len(A)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append(_trim([A[i][j], -A[j][i]]))
        rows.append(row)
    if n == 0:
        return ONE
    return LaurentPoly(0, bareiss_poly(rows))


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


# -- integer / rational matrices -------------------------------------------------

def transpose(A: Sequence[Sequence[int]]) -> Matrix:
    return [list(col) for col in zip(*A)] if A else []


def is_symmetric(S: Sequence[Sequence[int]]) -> bool:
    n = len(S)
    return all(len(S[i]) == n for i in range(n)) and all(
        S[i][j] == S[j][i] for i in range(n) for j in range(i + 1, n))


def symmetric_signature(S: Sequence[Sequence[int]]) -> int:
    """Signature (#positive - #negative eigenvalues) of a symmetric integer matrix.

    Symmetric Gaussian elimination over Q.  A nonzero diagonal pivot
    contributes its sign; when the remaining diagonal is zero but an
    off-diagonal entry ``b`` is not, the 2x2 block ``[[0, b], [b, 0]]``
    contributes +1 and -1 and is eliminated as a unit.
    """
    if not is_symmetric(S):
        raise ValueError("signature needs a symmetric matrix")
    m = [[Fraction(x) for x in row] for row in S]
    sig = 0
    while m:
        n = len(m)
        k = next((i for i in range(n) if m[i][i] != 0), None)
        if k is not None:
            p = m[k][k]
            sig += 1 if p > 0 else -1
            rest = [i for i in range(n) if i != k]
            m = [[m[u][v] - m[u][k] * m[k][v] / p for v in rest] for u in rest]
            continue
        pair = next(((i, j) for i in range(n) for j in range(i + 1, n) if m[i][j] != 0), None)
        if pair is None:
            break
        i, j = pair
        b = m[i][j]
        rest = [u for u in range(n) if u not in (i, j)]
        m = [[m[u][v] - (m[u][i] * m[j][v] + m[u][j] * m[i][v]) / b for v in rest]
             for u in rest]
    return sig


def matrix_rank_rational(M: Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free row reduction."""
    m = [list(map(int, row)) for row in M]
    if not m:
        return 0
    rows, cols = len(m), len(m[0])
    rank = 0
    for c in range(cols):
        piv = next((r for r in range(rank, rows) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][c]
        for r in range(rows):
            if r != rank and m[r][c]:
                f = m[r][c]
                m[r] = [p * x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
        if rank == rows:
            break
    return rank
