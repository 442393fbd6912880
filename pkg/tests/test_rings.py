import pytest

from conftest import ring
from splitalg.errors import ElementRingMismatch, InfiniteRing, MalformedSpec, NonPrimeModulus
from splitalg.rings import Verdict, enumerate_elements, is_regular, is_unit


def test_zmod8_size_and_characteristic():
    R = ring("Zmod(8)")
    assert R.cardinality == 8
    assert R.characteristic == 8


def test_fp7_is_field():
    R = ring("Fp(7)")
    assert R.is_field and R.cardinality == 7


def test_dual_numbers_over_f2():
    R = ring("Quot(Poly(Fp(2); u), u^2)")
    u = R.parse("u")
    assert R.cardinality == 4
    assert (u * u).is_zero()
    assert sorted(str(x) for x in enumerate_elements(R)) == ["0", "1", "u", "u + 1"]


def test_gf9_size():
    assert len(list(enumerate_elements(ring("GF(3,2)")))) == 9


def test_zmod4_size():
    assert len(list(enumerate_elements(ring("Zmod(4)")))) == 4


def test_enumerate_infinite_ring():
    with pytest.raises(InfiniteRing):
        list(enumerate_elements(ring("Z")))


@pytest.mark.parametrize(
    "spec, text, verdict, witness",
    [
        ("Z", "2", Verdict.REGULAR, None),
        ("Zmod(8)", "2", Verdict.ZERO_DIVISOR_OR_ZERO, "4"),
        ("Quot(Poly(Fp(2); u), u^2)", "u", Verdict.ZERO_DIVISOR_OR_ZERO, "u"),
        ("Q", "0", Verdict.ZERO_DIVISOR_OR_ZERO, None),
    ],
)
def test_regularity(spec, text, verdict, witness):
    R = ring(spec)
    r = is_regular(R, R.parse(text))
    assert r.verdict is verdict
    if witness is not None:
        assert str(r.witness) == witness


def test_regularity_witness_is_valid():
    R = ring("Zmod(12)")
    for x in enumerate_elements(R):
        r = is_regular(R, x)
        if r.witness is not None:
            assert not r.witness.is_zero() and (x * r.witness).is_zero()


@pytest.mark.parametrize(
    "spec, text, expected",
    [("Fp(7)", "3", "5"), ("Z", "2", None), ("Quot(Poly(Fp(2); u), u^2)", "1+u", "u + 1"), ("Z", "-1", "-1")],
)
def test_is_unit(spec, text, expected):
    R = ring(spec)
    ok, inv = is_unit(R, R.parse(text))
    assert ok == (expected is not None)
    if ok:
        assert str(inv) == expected
        assert inv * R.parse(text) == R.one_elem()


def test_element_from_other_ring_rejected():
    with pytest.raises(ElementRingMismatch):
        is_regular(ring("Fp(5)"), ring("Fp(7)").parse("3"))


@pytest.mark.parametrize("bad", ["Fp(6)", "GF(4,2)"])
def test_non_prime_modulus(bad):
    with pytest.raises(NonPrimeModulus):
        ring(bad)


@pytest.mark.parametrize("bad", ["", "Foo(3)", "Zmod(x)", "Poly(Z)"])
def test_malformed_specs(bad):
    with pytest.raises(MalformedSpec):
        ring(bad)


@pytest.mark.parametrize(
    "spec", ["Z", "Q", "Zmod(6)", "Fp(5)", "GF(2,3)", "Poly(Z; a, b)", "Frac(Poly(Fp(3); s))", "Quot(Poly(Q; x), x^2 + 1)"]
)
def test_spec_round_trip(spec):
    R = ring(spec)
    assert ring(R.spec) == R


def test_fraction_field_arithmetic():
    K = ring("Frac(Poly(Q; s))")
    x = K.parse("1/(s+1)")
    assert str(x * K.parse("s+1")) == "1"
    assert str(x + x) == "2/(s + 1)"


def test_product_ring_componentwise():
    R = ring("Prod(Zmod(2), Zmod(3))")
    assert R.cardinality == 6 and R.characteristic == 6
    assert R.parse("5") == R.parse("-1")
