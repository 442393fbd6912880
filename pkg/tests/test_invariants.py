import itertools

import pytest

from conftest import algebra, ring
from splitalg.errors import MalformedSpec, NotSymmetric, SearchSpaceTooLarge
from splitalg.invariants import (
    _exhaustive_span,
    check_symmetric,
    invariant_module,
    is_invariant,
    reduce_symmetric_polynomial,
    search_exceptional,
    substitute_elementary,
    verify_invariants_theorem,
)
from splitalg.oracles import exhaustive_invariants

DUAL = "Quot(Poly(Fp(2); u), u^2)"


def gens(spec, poly, **kw):
    return [str(g) for g in invariant_module(algebra(spec, poly), **kw).generators]


def test_f3_quadratic_invariants_are_constants():
    assert gens("Fp(3)", "t^2+1") == ["1"]


@pytest.mark.parametrize("f2", ["0", "1", "u", "u+1"])
def test_dual_numbers_have_extra_invariant(f2):
    mod = invariant_module(algebra(DUAL, f"t^2-u*t+{f2}"))
    assert [str(g) for g in mod.generators] == ["1", "u*tau2"]
    assert not mod.is_base_ring


def test_generic_cubic_invariants_truncated():
    mod = invariant_module(algebra("Poly(Z; f1, f2, f3)", "t^3-f1*t^2+f2*t-f3"))
    assert [str(g) for g in mod.generators] == ["1"]
    assert mod.degree_bound == 4


@pytest.mark.parametrize(
    "spec, poly, method",
    [("Q", "t^2+1", "FieldKernel"), ("Z", "t^3-2", "IntegerKernel"), ("Zmod(4)", "t^2", "HowellKernel")],
)
def test_method_labels(spec, poly, method):
    assert invariant_module(algebra(spec, poly)).method == method


def test_zmod4_extra_invariant():
    assert gens("Zmod(4)", "t^2") == ["1", "2*tau2"]


def test_product_ring_exhaustive():
    mod = invariant_module(algebra("Prod(Zmod(2), Zmod(3))", "t^2+1"))
    assert mod.method == "Exhaustive"
    assert [str(g) for g in mod.generators] == ["1", "(1, 0)*tau2"]


def test_generators_are_invariant():
    A = algebra(DUAL, "t^2-u*t+1")
    for g in invariant_module(A).generators:
        assert is_invariant(A, g)


def test_contains():
    A = algebra(DUAL, "t^2-u*t")
    mod = invariant_module(A)
    assert mod.contains(A.parse("u*tau2 + u + 1"))
    assert not mod.contains(A.parse("tau2"))


@pytest.mark.parametrize("spec, poly", [(DUAL, "t^2-u*t"), ("Fp(3)", "t^2+1"), ("Fp(2)", "t^2+t+1"), ("Zmod(4)", "t^2")])
def test_kernel_matches_enumeration(spec, poly):
    A = algebra(spec, poly)
    span = _exhaustive_span(A, invariant_module(A).generators)
    brute = {A.element(d).value for d in exhaustive_invariants(A)}
    assert span == brute


def test_theorem_report_integer():
    r = verify_invariants_theorem(algebra("Z", "t^2-t"))
    assert r.two.is_regular and r.invariants.is_base_ring and r.consistent


def test_theorem_report_dual_numbers():
    r = verify_invariants_theorem(algebra(DUAL, "t^2-u*t"))
    assert not r.two.is_regular and not r.dis.is_regular
    assert str(r.discriminant) == "0"
    assert not r.invariants.is_base_ring and r.consistent


def test_theorem_report_inseparable():
    r = verify_invariants_theorem(algebra("Frac(Poly(Fp(3); s))", "t^3-s"))
    assert r.two.is_regular and r.invariants.is_base_ring


def test_search_dual_quadratics():
    found = search_exceptional({"rings": [DUAL], "degrees": [2]})
    polys = [d["poly"] for d in found]
    assert len(polys) == 8
    # exactly the quadratics with f1 in {0, u}
    assert all(p.startswith("t^2 + u*t") or "*t" not in p for p in polys)


def test_search_zmod5_finds_nothing():
    assert search_exceptional({"rings": ["Zmod(5)"], "degrees": [2]}) == []


def test_search_zmod4_t_squared():
    found = search_exceptional('{"rings": ["Zmod(4)"], "polys": ["t^2"]}')
    assert found == [{"ring": "Zmod(4)", "poly": "t^2", "extra_invariants": ["2*tau2"]}]


def test_search_cap():
    with pytest.raises(SearchSpaceTooLarge):
        search_exceptional({"rings": ["Zmod(4)"], "degrees": [3], "max_algebra_size": 1000})


def test_search_needs_rings():
    with pytest.raises(MalformedSpec):
        search_exceptional({"degrees": [2]})


@pytest.mark.parametrize(
    "expr, n, expected",
    [("t1^2 + t2^2", 2, "f1^2 - 2*f2"), ("t1*t2", 2, "f2"), ("t1^3 + t2^3 + t3^3", 3, "f1^3 - 3*f1*f2 + 3*f3")],
)
def test_symmetric_reduction(expr, n, expected):
    P = ring("Poly(Z; " + ", ".join(f"t{i}" for i in range(1, n + 1)) + ")")
    h = P.parse(expr)
    r = reduce_symmetric_polynomial(h)
    assert str(r) == expected
    assert substitute_elementary(r, P) == h


@pytest.mark.parametrize("k", [1, 2, 3])
def test_elementary_reduces_to_coefficient(k):
    P = ring("Poly(Z; t1, t2, t3)")
    e = " + ".join("*".join(c) for c in itertools.combinations(["t1", "t2", "t3"], k))
    assert str(reduce_symmetric_polynomial(P.parse(e))) == f"f{k}"


def test_not_symmetric():
    P = ring("Poly(Z; t1, t2, t3)")
    with pytest.raises(NotSymmetric) as exc:
        check_symmetric(P.parse("t1^2 + t2 + t3"))
    assert exc.value.transposition == (1, 2)
    with pytest.raises(NotSymmetric) as exc:
        check_symmetric(P.parse("t1 + t2"))
    assert exc.value.transposition == (2, 3)
