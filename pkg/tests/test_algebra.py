import random

import numpy as np
import pytest
import sympy
from hypothesis import given, strategies as st

from posbraid.algebra import (LaurentPoly, alexander_matrix_det, is_unit, lp_add,
                              lp_equal_up_to_unit, lp_mul, lp_neg, matrix_rank_rational,
                              poly_det, symmetric_signature)

t = LaurentPoly(1, (1,))
one = LaurentPoly.const(1)


def P(*coeffs, lo=0):
    return LaurentPoly(lo, coeffs)


def test_ring_operations():
    assert lp_mul(one - t, one + t) == P(1, 0, -1)
    assert lp_add(P(1, 2), P(0, -2)) == P(1)
    assert lp_neg(P(1, -1)) == P(-1, 1)
    assert (t * P(1, lo=-1)) == one


def test_laurent_poly_strips_zeros():
    p = P(0, 0, 3, 0, lo=-2)
    assert p.min_degree == 0 and p.coeffs == (3,)
    assert P(0, 0).is_zero()


def test_equal_up_to_unit():
    assert lp_equal_up_to_unit(P(1, -1, 1), P(1, -1, 1, lo=-1))
    assert lp_equal_up_to_unit(P(1, -1, 1), P(-1, 1, -1, lo=5))
    assert not lp_equal_up_to_unit(P(1, -1, 1), P(1, 1, 1))


def test_is_unit():
    assert is_unit(P(-1, lo=3))
    assert not is_unit(one - t)
    assert not is_unit(LaurentPoly())


def test_serialization_round_trip():
    p = P(2, 0, -5, lo=-3)
    assert LaurentPoly.from_dict(p.to_dict()) == p
    assert p.to_dict() == {"min_degree": -3, "coeffs": [2, 0, -5]}


def test_poly_det_examples():
    assert poly_det([[one - t]]) == one - t
    # trefoil: det([[1-t, 1], [-t, 1-t]]) = 1 - t + t^2
    assert poly_det([[one - t, one], [-t, one - t]]) == P(1, -1, 1)
    I3 = [[(one - t) if i == j else LaurentPoly() for j in range(3)] for i in range(3)]
    assert poly_det(I3) == (one - t) * (one - t) * (one - t)


def test_poly_det_handles_negative_powers():
    s = LaurentPoly(-1, (1,))
    assert poly_det([[s, one], [one, t]]).is_zero()
    assert poly_det([[s, one], [LaurentPoly(), t * t]]) == t


def _sympy_alexander(A):
    x = sympy.Symbol("x")
    M = sympy.Matrix(A) - x * sympy.Matrix(A).T
    return sympy.Poly(sympy.expand(M.det()), x)


@pytest.mark.parametrize("seed", range(40))
def test_alexander_det_matches_sympy(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 5)
    A = [[rng.choice([0, 0, 1, -1, 2]) for _ in range(n)] for _ in range(n)]
    ours = alexander_matrix_det(A)
    ref = _sympy_alexander(A)
    coeffs = [int(c) for c in reversed(ref.all_coeffs())]
    assert LaurentPoly(0, coeffs) == ours


def _brute_det(M):
    n = len(M)
    if n == 1:
        return M[0][0]
    total = LaurentPoly()
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * _brute_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


@pytest.mark.parametrize("seed", range(20))
def test_poly_det_matches_cofactor_expansion(seed):
    rng = random.Random(100 + seed)
    n = rng.randint(1, 5)
    M = [[LaurentPoly(rng.randint(-2, 1), [rng.randint(-2, 2) for _ in range(rng.randint(0, 3))])
          for _ in range(n)] for _ in range(n)]
    assert poly_det(M) == _brute_det(M)


def test_signature_examples():
    assert symmetric_signature([[2, 1], [1, 2]]) == 2
    assert symmetric_signature([[0, 1], [1, 0]]) == 0
    assert symmetric_signature([[0] * 3 for _ in range(3)]) == 0
    assert symmetric_signature([]) == 0


def test_signature_rejects_non_symmetric():
    with pytest.raises(ValueError):
        symmetric_signature([[1, 2], [0, 1]])


symmetric_matrices = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.integers(-3, 3), min_size=n * (n + 1) // 2,
                       max_size=n * (n + 1) // 2).map(lambda v: _sym_from(n, v)))


def _sym_from(n, vals):
    S = [[0] * n for _ in range(n)]
    it = iter(vals)
    for i in range(n):
        for j in range(i, n):
            S[i][j] = S[j][i] = next(it)
    return S


@given(symmetric_matrices)
def test_signature_matches_eigenvalues(S):
    ev = np.linalg.eigvalsh(np.array(S, dtype=float))
    ref = int(np.sum(ev > 1e-9)) - int(np.sum(ev < -1e-9))
    assert symmetric_signature(S) == ref


@given(symmetric_matrices, st.randoms(use_true_random=False))
def test_signature_congruence_invariant(S, rnd):
    n = len(S)
    # unimodular G: product of elementary column operations
    G = np.eye(n, dtype=object)
    for _ in range(3 * n):
        i, j = rnd.randrange(n), rnd.randrange(n)
        if i != j:
            G[:, i] = G[:, i] + rnd.choice([-1, 1]) * G[:, j]
    S2 = (G.T @ np.array(S, dtype=object) @ G).tolist()
    assert symmetric_signature(S2) == symmetric_signature(S)


@given(symmetric_matrices)
def test_signature_parity_and_bound(S):
    s = symmetric_signature(S)
    r = matrix_rank_rational(S)
    assert (s - r) % 2 == 0
    assert abs(s) <= r


def test_rank_examples():
    assert matrix_rank_rational([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3
    assert matrix_rank_rational([[0, 0], [0, 0]]) == 0
    assert matrix_rank_rational([[0, 1], [-1, 0]]) == 2
    assert matrix_rank_rational([[1, 2], [2, 4]]) == 1


@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=5))
def test_rank_matches_sympy(rows):
    assert matrix_rank_rational(rows) == sympy.Matrix(rows).rank()
