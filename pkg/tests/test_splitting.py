import math

import pytest

from conftest import algebra, ring, seeded
from splitalg.errors import AlgebraMismatch, DegreeMismatch, DegreeTooLarge, NotACompleteFactorization, NotAHomomorphism
from splitalg.poly import MonicPoly
from splitalg.splitting import (
    AlgebraHom,
    Permutation,
    SplitAlgebra,
    apply_permutation,
    conjugate_product,
    discriminant,
    elementary_symmetric,
    extend_scalars,
)
from splitalg.oracles import resolvent


def generic(n):
    names = ", ".join(f"f{k}" for k in range(1, n + 1))
    P = ring(f"Poly(Z; {names})")
    return SplitAlgebra(P, MonicPoly.from_signed(P, [P.parse(f"f{k}") for k in range(1, n + 1)]))


def test_degree_three_basis():
    A = algebra("Q", "t^3-2")
    monos = [str(A.wrap(A._monomial(e, A.base.one))) for e in A.basis]
    assert monos == ["1", "tau2", "tau3", "tau2*tau3", "tau3^2", "tau2*tau3^2"]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_rank_is_factorial(n):
    assert len(algebra("Fp(5)", f"t^{n}+1").basis) == math.factorial(n)


def test_degree_guard():
    with pytest.raises(DegreeTooLarge):
        algebra("Q", "t^4+1").__class__(ring("Q"), MonicPoly.parse(ring("Q"), "t^4+1"), max_degree=3)


def test_generic_tower():
    G = generic(2)
    assert [str(p) for p in G.tower] == ["t^2 - f1*t + f2", "t + (tau2 - f1)"]


def test_multiplication_reduces():
    G = generic(2)
    assert str(G.parse("tau2*tau2")) == "f1*tau2 - f2"
    x = G.parse("3*tau2 + f2")
    assert x * G.one_elem() == x


def test_normalize_example():
    assert str(algebra("Q", "t^2-3*t+2").parse("tau2^2")) == "3*tau2 - 2"


def test_roots():
    G = generic(2)
    assert str(G.root(2)) == "tau2"
    assert G.root(1) == G.parse("f1 - tau2")


@pytest.mark.parametrize("spec, poly", [("Z", "t^3-t+5"), ("Fp(5)", "t^4+2*t+1"), ("Q", "t^2+1")])
def test_roots_satisfy_f(spec, poly):
    A = algebra(spec, poly)
    fa = A.f.change_ring(A)
    for r in A.roots():
        assert fa(r).is_zero()


@pytest.mark.parametrize("n", [2, 3, 4])
def test_universal_splitting_generic(n):
    G = generic(n)
    for k in range(1, n + 1):
        assert elementary_symmetric(G, k) == G.parse(f"f{k}")


def test_hom_from_nilpotent_roots():
    D = algebra("Quot(Poly(Fp(2); d), d^2)", "t^2")
    d = D.base.parse("d")
    h = AlgebraHom(D, D.base, None, [d, -d])
    assert h(D.root(2)) == d


def test_hom_rejects_wrong_roots():
    Q2 = algebra("Q", "t^2")
    with pytest.raises(NotACompleteFactorization):
        AlgebraHom(Q2, Q2.base, None, [Q2.base(1), Q2.base(2)])


def test_hom_evaluates():
    B = algebra("Q", "t^2-3*t+2")
    h = AlgebraHom(B, B.base, None, [B.base(1), B.base(2)])
    assert h(B.root(2)) == B.base(2)
    assert h(B.parse("tau2^3 + tau1")) == B.base(9)


def test_transposition_swaps_roots():
    G = generic(2)
    s = Permutation.transposition(2, 1, 2)
    assert apply_permutation(s, G.root(2)) == G.root(1)


def test_identity_action():
    A = algebra("Z", "t^3-2*t+7")
    x = A.parse("tau2*tau3^2 - 4*tau3")
    assert apply_permutation(Permutation.identity(3), x) == x


def test_permutation_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        apply_permutation(Permutation.identity(2), algebra("Z", "t^3-2").root(2))


def test_permutation_composition_convention():
    s = Permutation.from_cycles(3, [(1, 2)])
    r = Permutation.from_cycles(3, [(2, 3)])
    # left to right: (s*r)(i) = r(s(i))
    assert [(s * r)(i) for i in (1, 2, 3)] == [r(s(i)) for i in (1, 2, 3)]
    assert len(Permutation.all(4)) == 24


def test_cross_algebra_arithmetic_rejected():
    with pytest.raises(AlgebraMismatch):
        algebra("Q", "t^2+1").root(2) + algebra("Q", "t^2+2").root(2)


@pytest.mark.parametrize(
    "spec, poly, expected",
    [("Q", "t^2+1", "-4"), ("Z", "t^2-3*t+2", "1"), ("Poly(Z; f1, f2)", "t^2-f1*t+f2", "f1^2 - 4*f2")],
)
def test_discriminant(spec, poly, expected):
    assert str(discriminant(algebra(spec, poly))) == expected


def test_depressed_cubic_discriminant():
    assert discriminant(algebra("Poly(Q; p, q)", "t^3+p*t+q")) == ring("Poly(Q; p, q)").parse("-4*p^3 - 27*q^2")


def test_extend_scalars_to_q():
    A = algebra("Z", "t^3-t+5")
    ext = extend_scalars(A, ring("Q"))
    assert len(ext.algebra.basis) == 6
    x = A.parse("7*tau2*tau3 + 3")
    assert str(ext(x)) == "7*tau2*tau3 + 3"


def test_extend_scalars_reduces_mod_5():
    A = algebra("Z", "t^3-t+5")
    ext = extend_scalars(A, ring("Zmod(5)"))
    assert str(ext.algebra.f) == "t^3 + 4*t"
    assert str(ext(A.parse("7*tau2*tau3 + 3"))) == "2*tau2*tau3 + 3"


def test_extend_scalars_rejects_bad_map():
    A = algebra("Zmod(4)", "t^2+1")
    with pytest.raises(NotAHomomorphism):
        extend_scalars(A, ring("Zmod(3)"), phi=lambda c: c % 3)


def test_extend_scalars_multiplicative():
    A = algebra("Z", "t^3+2*t-1")
    ext = extend_scalars(A, ring("Fp(3)"))
    rng = seeded(3)
    for _ in range(20):
        x, y = A.wrap(A.random(rng)), A.wrap(A.random(rng))
        assert ext(x * y) == ext(x) * ext(y)


def test_conjugate_product_of_root():
    A = algebra("Q", "t^2+1")
    assert str(conjugate_product(A, A.root(2))) == "t^2 + 1"


def test_conjugate_product_of_constant():
    A = algebra("Q", "t^3-2")
    p = conjugate_product(A, A.parse("3"))
    assert p.degree == 6 and p == MonicPoly.parse(ring("Q"), "(t-3)^6")


def test_conjugate_product_matches_resolvent():
    A = algebra("Q", "t^3-2")
    P = ring("Poly(Q; t1, t2, t3)")
    oracle = resolvent(A.f, P.parse("t2 + t3"))
    assert conjugate_product(A, A.parse("tau2 + tau3")).coefficients() == [ring("Q").wrap(c) for c in oracle]


def test_json_round_trip():
    A = algebra("Z", "t^3-2")
    x = A.parse("tau2*tau3^2 - 5*tau3 + 1")
    assert A.from_json(x.to_json()) == x
