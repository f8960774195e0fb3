from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from apolarity.kernel import (
    Matrix,
    NumberField,
    NumberFieldElement,
    det_cofactor,
    det_fraction_free,
    det_leibniz,
    kernel_basis,
    rank,
    rational_roots,
    row_reduce,
    solve,
)

small = st.integers(min_value=-6, max_value=6)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(small, min_size=r * c, max_size=r * c).map(
                lambda e: Matrix(r, c, [Fraction(x) for x in e]))))


def square(max_n=5):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(small, min_size=n * n, max_size=n * n).map(
            lambda e: Matrix(n, n, [Fraction(x) for x in e])))


@given(matrices())
def test_rank_nullity(M):
    assert rank(M) + len(kernel_basis(M)) == M.cols


@given(matrices())
def test_kernel_vectors_are_killed(M):
    for v in kernel_basis(M):
        assert all(x == 0 for x in M.apply(v))


@given(square())
def test_bareiss_agrees_with_leibniz(M):
    assert det_fraction_free(M) == det_leibniz(M)


@given(square(4))
def test_cofactor_agrees_with_leibniz(M):
    assert det_cofactor(M) == det_leibniz(M)


@given(square(4), square(4))
def test_det_multiplicative(A, B):
    if A.rows != B.rows:
        return
    assert det_fraction_free(A @ B) == det_fraction_free(A) * det_fraction_free(B)


@given(matrices())
def test_rref_is_reduced(M):
    rows, pivots = row_reduce(M)
    for r, p in enumerate(pivots):
        assert rows[r][p] == 1
        assert all(rows[i][p] == 0 for i in range(len(rows)) if i != r)
    assert list(pivots) == sorted(pivots)


@given(matrices(), st.data())
def test_solve_consistent_systems(M, data):
    x = [Fraction(data.draw(small)) for _ in range(M.cols)]
    b = M.apply(x)
    y = solve(M, b)
    assert y is not None
    assert M.apply(y) == b


def test_solve_inconsistent():
    M = Matrix.from_rows([[1, 1], [1, 1]])
    assert solve(M, [1, 2]) is None


def test_matrix_basics():
    M = Matrix.from_rows([[1, 2, 3], [4, 5, 6]])
    assert M.shape == (2, 3)
    assert M.transpose().transpose() == M
    assert M.transpose()[2, 1] == 6
    assert (Matrix.identity(2) @ M) == M
    assert Matrix.zeros(2, 2).is_zero()
    assert Matrix.from_rows([[1, 2], [2, 1]]).is_symmetric()
    with pytest.raises(ValueError):
        M @ M


def test_rational_roots():
    # (2t - 1)(t + 3)(t^2 + 1)
    coeffs = [-3, 5, -1, 5, 2]
    assert sorted(rational_roots(coeffs)) == [Fraction(-3), Fraction(1, 2)]
    assert rational_roots([1, 0, 1]) == []
    assert Fraction(0) in rational_roots([0, 1, 1])


def test_number_field_rejects_reducible():
    with pytest.raises(ValueError):
        NumberField([-1, 0, 1])
    with pytest.raises(ValueError):
        NumberField([0, 0, 0, 0, 1])


def test_cube_root_of_two():
    K = NumberField([-2, 0, 0, 1])
    t = K.generator()
    assert t ** 3 == 2
    assert (t * t) * t.inverse() == t
    assert 1 / t == t * t / 2


nf_coeffs = st.lists(st.integers(-5, 5), min_size=3, max_size=3)


@settings(max_examples=60)
@given(nf_coeffs, nf_coeffs)
def test_number_field_inverse(a, b):
    K = NumberField([-2, 0, 0, 1])
    x = NumberFieldElement(a, K)
    y = NumberFieldElement(b, K)
    if not x:
        return
    assert (x * y) * x.inverse() == y
    assert (x + y) - y == x


def test_bareiss_over_number_field():
    K = NumberField([1, 1, 1])  # t^2 + t + 1
    w = K.generator()
    M = Matrix.from_rows([[w, 1], [1, w * w]])
    assert det_fraction_free(M) == w ** 3 - 1
    assert det_fraction_free(M) == 0
