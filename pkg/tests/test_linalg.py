from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from quiverfpd.linalg import RationalMatrix, kernel_basis, kernel_mod, rank, rank_mod, solve


@st.composite
def int_matrices(draw, max_side=5, lo=-3, hi=3):
    r = draw(st.integers(0, max_side))
    c = draw(st.integers(0, max_side))
    rows = [[draw(st.integers(lo, hi)) for _ in range(c)] for _ in range(r)]
    return RationalMatrix.from_rows(rows, c)


def test_rank_examples():
    assert rank(RationalMatrix.zeros(0, 0)) == 0
    assert rank(RationalMatrix.identity(4)) == 4
    assert rank(RationalMatrix.from_rows([[1, 2], [2, 4]])) == 1


def test_kernel_examples():
    assert kernel_basis(RationalMatrix.identity(3)).cols == 0
    assert kernel_basis(RationalMatrix.zeros(3, 3)).cols == 3
    k = kernel_basis(RationalMatrix.from_rows([[1, 1]]))
    assert k.cols == 1
    v = k.column(0)
    assert v[0] == -v[1] != 0


def test_entries_are_exact():
    m = RationalMatrix.from_rows([[1, 3], [2, 7]])
    x = solve(m, RationalMatrix.from_rows([[1], [0]]))
    assert all(isinstance(e, Fraction) for e in x.entries)
    assert m @ x == RationalMatrix.from_rows([[1], [0]])


def test_solve_inconsistent():
    with pytest.raises(ValueError):
        solve(RationalMatrix.from_rows([[1, 1], [2, 2]]), RationalMatrix.from_rows([[1], [3]]))


def test_shape_validation():
    with pytest.raises(ValueError):
        RationalMatrix(2, 2, (Fraction(1),))
    with pytest.raises(ValueError):
        RationalMatrix.from_rows([[1, 2], [3]])


@given(int_matrices())
def test_rank_nullity(m):
    k = kernel_basis(m)
    assert rank(m) + k.cols == m.cols
    if k.cols:
        assert (m @ k).is_zero()
        assert rank(k) == k.cols


@given(int_matrices())
def test_rank_matches_sympy(m):
    expected = sympy.Matrix(m.rows, m.cols, list(m.entries)).rank() if m.rows and m.cols else 0
    assert rank(m) == expected


@given(int_matrices(), st.randoms(use_true_random=False))
def test_rank_invariant_under_transpose_and_row_permutation(m, rnd):
    rows = m.to_rows()
    rnd.shuffle(rows)
    assert rank(m) == rank(m.T) == rank(RationalMatrix.from_rows(rows, m.cols))


@given(int_matrices(), st.integers(1, 3))
def test_solve_round_trip(a, k):
    x = RationalMatrix.from_rows([[(i * 7 + j) % 5 - 2 for j in range(k)] for i in range(a.cols)], k)
    b = a @ x
    assert a @ solve(a, b) == b


@given(int_matrices(), st.sampled_from([2, 3, 5]))
def test_mod_p_kernel(m, p):
    rows = [[int(x) for x in r] for r in m.to_rows()]
    basis = kernel_mod(rows, m.cols, p)
    assert len(basis) == m.cols - rank_mod(rows, m.cols, p)
    for v in basis:
        assert all(sum(a * b for a, b in zip(r, v)) % p == 0 for r in rows)
    assert rank_mod(rows, m.cols, p) <= rank(m)
