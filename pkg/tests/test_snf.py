from itertools import combinations
from math import gcd

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from maghom.snf import normalize_diagonal, rank, smith_normal_form
from maghom.sparse import SparseIntMatrix


def determinant_divisor_factors(rows):
    """Invariant factors from gcds of k x k minors (independent of any elimination)."""
    m, n = len(rows), len(rows[0]) if rows else 0
    M = sympy.Matrix(rows) if m and n else None
    divisors = [1]
    for k in range(1, min(m, n) + 1):
        g = 0
        for r in combinations(range(m), k):
            for c in combinations(range(n), k):
                g = gcd(g, int(M.extract(list(r), list(c)).det()))
        if g == 0:
            break
        divisors.append(g)
    return [divisors[i] // divisors[i - 1] for i in range(1, len(divisors))]


matrices = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=m, max_size=m)))


def test_sparse_basics():
    a = SparseIntMatrix.from_dense([[1, 0], [2, 3]])
    assert a.to_dense() == [[1, 0], [2, 3]]
    assert (a @ SparseIntMatrix.identity(2)) == a
    assert a.transpose().to_dense() == [[1, 2], [0, 3]]
    assert a.apply([1, 1]) == {0: 1, 1: 5}
    assert a.nnz == 3
    assert SparseIntMatrix.zeros(3, 2).is_zero()
    assert a.hstack(SparseIntMatrix.from_dense([[7], [8]])).to_dense() == [[1, 0, 7], [2, 3, 8]]


def test_identity_has_unit_factors():
    r = smith_normal_form(SparseIntMatrix.identity(5))
    assert r.factors == (1, 1, 1, 1, 1) and r.rank == 5 and r.torsion == ()


def test_small_torsion_matrix():
    r = smith_normal_form(SparseIntMatrix.from_dense([[1, 1], [1, -1]]))
    assert r.factors == (1, 2)
    assert r.torsion == (2,)


def test_zero_matrix():
    r = smith_normal_form(SparseIntMatrix.zeros(3, 4))
    assert r.rank == 0 and r.factors == ()


def test_empty_shapes():
    assert smith_normal_form(SparseIntMatrix(0, 3)).rank == 0
    assert smith_normal_form(SparseIntMatrix(4, 0)).rank == 0


def test_normalize_diagonal_builds_divisibility_chain():
    assert normalize_diagonal([4, 6]) == [2, 12]
    assert normalize_diagonal([3, 1, 2]) == [1, 1, 6]


@settings(max_examples=300, deadline=None)
@given(matrices)
def test_factors_match_determinant_divisors(rows):
    r = smith_normal_form(SparseIntMatrix.from_dense(rows))
    assert list(r.factors) == determinant_divisor_factors(rows)
    assert r.rank == sympy.Matrix(rows).rank()


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_transforms_diagonalize(rows):
    a = SparseIntMatrix.from_dense(rows)
    r = smith_normal_form(a, transforms=True)
    d = (r.U @ a @ r.V).to_dense()
    m, n = a.shape
    for i in range(m):
        for j in range(n):
            want = r.factors[i] if i == j and i < len(r.factors) else 0
            assert d[i][j] == want
    assert abs(int(sympy.Matrix(r.U.to_dense()).det())) == 1
    assert abs(int(sympy.Matrix(r.V.to_dense()).det())) == 1


def test_entry_growth_stays_exact():
    # a Hilbert-like integer matrix; big cofactors, unimodular-looking rows
    rows = [[(i + 1) ** j + 3 * i * j for j in range(7)] for i in range(7)]
    r = smith_normal_form(SparseIntMatrix.from_dense(rows))
    assert list(r.factors) == determinant_divisor_factors(rows)


@pytest.mark.parametrize("rows,expected", [([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], (2, 6, 12)),
                                           ([[6, 0], [0, 4]], (2, 12))])
def test_known_normal_forms(rows, expected):
    assert smith_normal_form(SparseIntMatrix.from_dense(rows)).factors == expected
    assert rank(SparseIntMatrix.from_dense(rows)) == len(expected)
