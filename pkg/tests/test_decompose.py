import math

import pytest

from conftest import algebra
from splitalg.decompose import TensorAlgebra, crt_split, shuffle_decomposition, shuffles
from splitalg.errors import EmptyBlock, NonInvertibleResult, NotCoprime, ProductMismatch, UndecidableForRing


@pytest.mark.parametrize("comp, count", [((1, 1), 2), ((2, 1), 3), ((2, 2), 6), ((1, 1, 1), 6), ((3, 2), 10)])
def test_shuffle_counts(comp, count):
    shs = shuffles(comp)
    assert len(shs) == count
    assert len(shs) * math.prod(math.factorial(k) for k in comp) == math.factorial(sum(comp))
    for s in shs:
        for block in s.blocks():
            assert [s.perm(i) for i in block] == sorted(s.perm(i) for i in block)


def test_shuffles_of_two_points():
    assert [s.perm.images for s in shuffles((1, 1))] == [(1, 2), (2, 1)]


def test_empty_block():
    with pytest.raises(EmptyBlock):
        shuffles((2, 0))


def test_crt_split_linear_factors():
    split = crt_split(algebra("Q", "(t-1)*(t-2)"), ["t-1", "t-2"])
    comps = [(str(c.base), str(c.upsilon), c.h.degree) for c in split.components]
    assert comps == [("Q", "1", 1), ("Q", "2", 1)]
    assert split.rank == 2


def test_crt_split_quadratic_factor():
    split = crt_split(algebra("Q", "(t^2+1)*(t-1)"), ["t^2+1", "t-1"])
    bases = [c.base.spec for c in split.components]
    assert bases == ["Quot(Poly(Q; v1), v1^2 + 1)", "Q"]
    assert sum(len(c.algebra.basis) * g for c, g in zip(split.components, (2, 1))) == 6


def test_crt_split_over_finite_field_uses_extension():
    split = crt_split(algebra("Fp(3)", "(t^2+1)*(t-1)"), ["t^2+1", "t-1"])
    assert split.components[0].base.is_field


def test_not_coprime():
    with pytest.raises(NotCoprime) as exc:
        crt_split(algebra("Q", "(t-1)^2"), ["t-1", "t-1"])
    assert exc.value.pair == (0, 1)


def test_product_mismatch():
    with pytest.raises(ProductMismatch):
        crt_split(algebra("Q", "(t-1)*(t-2)"), ["t-1", "t-3"])


def test_non_field_needs_cofactors():
    A = algebra("Zmod(6)", "t^2+t")
    with pytest.raises(UndecidableForRing):
        crt_split(A, ["t", "t+1"])
    with pytest.raises(NotCoprime):
        crt_split(A, ["t", "t+1"], bezout={(0, 1): ([1], [-1])})
    split = crt_split(A, ["t", "t+1"], bezout={(0, 1): ([-1], [1])})
    assert split.rank == 2


def test_integer_coprimality_is_exact():
    # t and t - 2 generate (t, 2), not the unit ideal of Z[t]
    with pytest.raises(NotCoprime):
        shuffle_decomposition(algebra("Z", "t*(t-2)"), ["t", "t-2"])


def test_shuffle_decomposition_two_roots():
    d = shuffle_decomposition(algebra("Q", "(t-1)*(t-2)"), ["t-1", "t-2"])
    assert d.size == 2 and len(d.shuffles) == 2 and str(d.determinant) == "-1"


def test_shuffle_decomposition_rank_six():
    d = shuffle_decomposition(algebra("Q", "(t^2+1)*(t-1)"), ["t^2+1", "t-1"])
    assert len(d.shuffles) == 3 and len(d.tensor.basis) == 2 and d.size == 6


def test_shuffle_decomposition_integer_unit():
    d = shuffle_decomposition(algebra("Z", "t^2-3*t+2"), ["t-1", "t-2"])
    assert str(d.determinant) in ("1", "-1")


def test_inverse_reading_is_not_an_isomorphism():
    with pytest.raises(NonInvertibleResult):
        shuffle_decomposition(algebra("Q", "(t^2+1)*(t-1)"), ["t^2+1", "t-1"], reading="inverse")


def test_tensor_algebra():
    T = TensorAlgebra([algebra("Q", "t^2+1"), algebra("Q", "t^2-2")])
    assert len(T.basis) == 4
    assert (T.rho(1, 1) + T.rho(2, 1)).is_zero()
    assert T.rho(2, 2) ** 2 == T.one_elem() * 2
