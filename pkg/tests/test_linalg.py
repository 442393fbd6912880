import itertools
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from conftest import ring
from splitalg import linalg
from splitalg.errors import UnsupportedBaseRing

small_ints = st.integers(-6, 6)


def matrices(rows, cols, elems=small_ints):
    return st.lists(st.lists(elems, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


def apply_left(v, M, R):
    return [linalg._dot(R, v, [row[j] for row in M]) for j in range(len(M[0]))]


def test_hermite_example():
    assert linalg.hermite([[2, 4], [6, 3]]) == [[2, 4], [0, 9]]


def test_howell_keeps_annihilator_rows():
    assert linalg.left_kernel([[2], [2]], ring("Zmod(4)"), 1) == [[1, 1], [0, 2]]


def test_rref_example():
    rows, piv = linalg.rref([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]], ring("Q"), 2)
    assert rows == [[1, 2]] and piv == [0]


def test_solve_left():
    Q = ring("Q")
    assert linalg.solve_left([[Fraction(1), Fraction(0)], [Fraction(1), Fraction(1)]], [3, 2], Q) == [1, 2]
    assert linalg.solve_left([[Fraction(1), Fraction(1)]], [1, 2], Q) is None


def test_polynomial_determinant():
    P = ring("Poly(Z; a)")
    a = P.parse("a").value
    assert P.to_str(linalg.determinant([[a, P.one], [P.one, a]], P)) == "a^2 - 1"


def test_unsupported_base():
    with pytest.raises(UnsupportedBaseRing):
        linalg.left_kernel([[1]], ring("Poly(Z; a)"), 1)


@given(matrices(4, 4))
def test_integer_determinant_matches_sympy(M):
    assert linalg.determinant(M, ring("Z")) == sympy.Matrix(M).det()


@given(matrices(3, 3, st.integers(0, 6)))
def test_field_determinant_matches_sympy(M):
    F = ring("Fp(7)")
    assert linalg.determinant(M, F) == sympy.Matrix(M).det() % 7


@given(matrices(3, 3, st.integers(0, 5)))
def test_zmod_determinant_matches_sympy(M):
    assert linalg.determinant(M, ring("Zmod(6)")) == sympy.Matrix(M).det() % 6


@given(matrices(4, 3))
def test_integer_left_kernel(M):
    Z = ring("Z")
    ker = linalg.left_kernel(M, Z, 3)
    for v in ker:
        assert apply_left(v, M, Z) == [0, 0, 0]
    assert len(ker) == 4 - sympy.Matrix(M).rank()


@given(matrices(3, 2, st.integers(0, 3)))
def test_zmod_left_kernel_is_complete(M):
    R = ring("Zmod(4)")
    ker = linalg.left_kernel(M, R, 2)
    brute = [v for v in itertools.product(range(4), repeat=3) if apply_left(list(v), M, R) == [0, 0]]
    span = set()
    for coeffs in itertools.product(range(4), repeat=len(ker)):
        span.add(tuple(sum(c * x for c, x in zip(coeffs, col)) % 4 for col in zip(*ker)) if ker else (0, 0, 0))
    assert span == set(brute)


@given(matrices(3, 4, st.integers(0, 4)))
def test_field_kernel_dimension(M):
    F = ring("Fp(5)")
    ker = linalg.left_kernel(M, F, 4)
    assert len(ker) + linalg.rank(M, F, 4) == 3
    for v in ker:
        assert apply_left(v, M, F) == [0] * 4


@given(matrices(3, 3))
def test_row_space_contains_own_rows(M):
    Z = ring("Z")
    for row in M:
        assert linalg.row_space_contains(M, row, Z)
