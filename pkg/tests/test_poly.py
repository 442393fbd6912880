import pytest

from conftest import algebra, ring
from splitalg.errors import IndexOutOfRange, NonMonicInput, NotAField, NotFiniteField
from splitalg.poly import (
    MonicPoly,
    UPoly,
    are_mutually_prime,
    derivative,
    factor_over_finite_field,
    is_irreducible,
    signed_coefficient,
    synthetic_divide,
)


def parse(spec, text):
    return MonicPoly.parse(ring(spec), text)


@pytest.mark.parametrize(
    "spec, text, expected",
    [("Z", "t^2-3*t+2", ["3", "2"]), ("Z", "t^3", ["0", "0", "0"]), ("Q", "t^2+1", ["0", "1"])],
)
def test_signed_coefficients(spec, text, expected):
    f = parse(spec, text)
    assert [str(c) for c in f.signed_coefficients()] == expected
    assert [str(signed_coefficient(f, k)) for k in range(1, f.degree + 1)] == expected


@pytest.mark.parametrize("k", [0, 3, -1])
def test_signed_coefficient_out_of_range(k):
    with pytest.raises(IndexOutOfRange):
        signed_coefficient(parse("Z", "t^2+1"), k)


def test_from_signed_round_trip():
    Z = ring("Z")
    f = MonicPoly.from_signed(Z, [3, 2])
    assert str(f) == "t^2 - 3*t + 2"


def test_non_monic_rejected():
    with pytest.raises(NonMonicInput):
        parse("Z", "2*t^2+1")


def test_synthetic_divide_integer_root():
    q, r = synthetic_divide(parse("Z", "t^2-3*t+2"), ring("Z")(1))
    assert str(q) == "t - 2" and r.is_zero()


def test_synthetic_divide_by_universal_root():
    alg = algebra("Poly(Z; f1, f2)", "t^2-f1*t+f2")
    q, r = synthetic_divide(alg.f.change_ring(alg), alg.root(2))
    assert r.is_zero()
    assert q.coeff(0) == alg.parse("tau2 - f1")


def test_synthetic_divide_t_cubed():
    q, r = synthetic_divide(parse("Z", "t^3"), ring("Z")(0))
    assert str(q) == "t^2" and r.is_zero()


@pytest.mark.parametrize(
    "spec, text, expected",
    [("Z", "t^2+1", "2*t"), ("Frac(Poly(Fp(3); s))", "t^3-s", "0"), ("Z", "t^2-3*t+2", "2*t - 3")],
)
def test_derivative(spec, text, expected):
    assert str(derivative(parse(spec, text))) == expected


def test_mutually_prime_over_q():
    c = are_mutually_prime(parse("Q", "t-1"), parse("Q", "t-2"))
    assert c.coprime
    assert c.u * parse("Q", "t-1") + c.v * parse("Q", "t-2") == 1


def test_not_mutually_prime():
    assert not are_mutually_prime(parse("Q", "t^2+1"), parse("Q", "t^2+1")).coprime


def test_inseparable_cubic():
    f = parse("Frac(Poly(Fp(3); s))", "t^3-s")
    assert not are_mutually_prime(f, f.derivative()).coprime


def test_mutually_prime_needs_field():
    with pytest.raises(NotAField):
        are_mutually_prime(parse("Z", "t"), parse("Z", "t-1"))


@pytest.mark.parametrize(
    "spec, text, expected",
    [
        ("Fp(5)", "t^2+1", [("t + 2", 1), ("t + 3", 1)]),
        ("Fp(3)", "t^2+1", [("t^2 + 1", 1)]),
        ("Fp(2)", "t^4+1", [("t + 1", 4)]),
        ("Fp(7)", "t^3-2", [("t^3 + 5", 1)]),
        # every monic irreducible of degree 1 or 2 over F_3
        (
            "Fp(3)",
            "t^9-t",
            [("t", 1), ("t + 1", 1), ("t + 2", 1), ("t^2 + 1", 1), ("t^2 + t + 2", 1), ("t^2 + 2*t + 2", 1)],
        ),
    ],
)
def test_factorization(spec, text, expected):
    got = [(str(g), m) for g, m in factor_over_finite_field(parse(spec, text))]
    assert sorted(got) == sorted(expected)


def test_factorization_over_extension_field():
    F = ring("GF(2,2)")
    f = MonicPoly.parse(F, "t^2+t+1")
    assert [g.degree for g, _ in factor_over_finite_field(f)] == [1, 1]


def test_factorization_needs_finite_field():
    with pytest.raises(NotFiniteField):
        factor_over_finite_field(parse("Q", "t^2+1"))


def test_irreducibility():
    assert is_irreducible(parse("Fp(2)", "t^4+t+1"))
    assert not is_irreducible(parse("Fp(2)", "t^4+1"))


def test_upoly_divmod():
    Q = ring("Q")
    a, b = UPoly.parse(Q, "t^3+2*t+1"), UPoly.parse(Q, "t^2+1")
    q, r = divmod(a, b)
    assert q * b + r == a and r.degree < b.degree


def test_evaluation():
    f = parse("Z", "t^2-3*t+2")
    assert f(ring("Z")(2)).is_zero()
