"""Exact and integer linear algebra."""
from __future__ import annotations

from fractions import Fraction

from hypothesis import given, strategies as st

from monoidkit.linalg import (det, determinantal_divisors, integer_kernel, integer_solve,
                              invariant_factors, inverse, mat_mul, primitive, rank, solve)

small = st.integers(-5, 5)
matrices = st.integers(1, 3).flatmap(
    lambda r: st.integers(r, 4).flatmap(
        lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


def test_det_and_inverse():
    a = [[2, 1], [7, 4]]
    assert det(a) == 1
    assert mat_mul(a, inverse(a)) == [[1, 0], [0, 1]]


def test_primitive():
    assert primitive((Fraction(1, 2), Fraction(1, 2))) == (1, 1)
    assert primitive((4, -6)) == (2, -3)


def test_solve_inconsistent():
    assert solve([[1, 0], [-1, 0]], [1, 1]) is None


def test_invariant_factors():
    assert invariant_factors([[2, 0], [0, 3]]) == [1, 6]
    assert determinantal_divisors([[1, 1], [1, -1]]) == [1, 2]


@given(matrices)
def test_integer_kernel_is_saturated_basis(a):
    ker = integer_kernel(a)
    n = len(a[0])
    assert len(ker) == n - rank(a)
    for v in ker:
        assert all(sum(x * y for x, y in zip(r, v)) == 0 for r in a)
    if ker:
        assert invariant_factors([list(v) for v in ker]) == [1] * len(ker)


@given(matrices, st.lists(small, min_size=4, max_size=4))
def test_integer_solve_finds_preimage(a, x):
    x = x[:len(a[0])]
    b = [sum(r * y for r, y in zip(row, x)) for row in a]
    y = integer_solve(a, b)
    assert y is not None
    assert [sum(r * z for r, z in zip(row, y)) for row in a] == b


def test_integer_solve_rejects_non_integral():
    assert integer_solve([[2, 4]], [1]) is None
