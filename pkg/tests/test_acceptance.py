"""Acceptance criteria 1-11.

Each criterion is a function returning ``(ok, detail)``; the tests time it
against its limit and print one PASS/FAIL line. Running this file directly
prints the same lines without pytest.
"""

import itertools
import math
import random
import time

import pytest

from splitalg.decompose import certify_coprime, shuffle_decomposition, shuffles
from splitalg.errors import NotCoprime
from splitalg.galois import galois_group, inseparable_demo, maximal_ideals, residue_isomorphism, transitivity_check
from splitalg.invariants import (
    _exhaustive_span,
    invariant_module,
    is_invariant,
    reduce_symmetric_polynomial,
    substitute_elementary,
    verify_invariants_theorem,
)
from splitalg.oracles import exhaustive_invariants, gauss_symmetric_reduction, resultant_discriminant
from splitalg.poly import MonicPoly
from splitalg.rings import is_regular
from splitalg.ringspec import construct_ring
from splitalg.splitting import Permutation, SplitAlgebra, apply_permutation, discriminant, elementary_symmetric

DUAL = "Quot(Poly(Fp(2); u), u^2)"
SEED = 20240611


def random_monic(R, n, rng):
    return MonicPoly(R, [R.random(rng) for _ in range(n)] + [R.one])


def criterion_1():
    bad = []
    for spec in ("Q", "Fp(5)"):
        R = construct_ring(spec)
        for n in (2, 3, 4, 5):
            A = SplitAlgebra(R, MonicPoly(R, [R.from_int(k + 1) for k in range(n)] + [R.one]))
            if len(A.basis) != math.factorial(n):
                bad.append((spec, n, len(A.basis)))
    return not bad, "ranks n! for n = 2..5 over Q, F5" if not bad else f"wrong ranks {bad}"


def criterion_2():
    rng = random.Random(SEED)
    checked = 0
    for spec in ("Z", "Fp(5)", DUAL):
        R = construct_ring(spec)
        for i in range(20):
            n = 1 + i % 5
            f = random_monic(R, n, rng)
            A = SplitAlgebra(R, f)
            for k in range(1, n + 1):
                if elementary_symmetric(A, k) != A(f.signed_coefficient(k)):
                    return False, f"e_{k} != f_{k} for {f} over {spec}"
                checked += 1
    return True, f"{checked} identities e_k(tau) = f_k"


def criterion_3():
    rng = random.Random(SEED + 3)
    configs = 0
    for spec in ("Z", "Fp(5)", DUAL):
        R = construct_ring(spec)
        for n in (2, 3, 4):
            A = SplitAlgebra(R, random_monic(R, n, rng))
            configs += 1
            for _ in range(200):
                x, y, z = (A.wrap(A.random(rng)) for _ in range(3))
                if (x * y) * z != x * (y * z) or x * y != y * x or x * (y + z) != x * y + x * z:
                    return False, f"ring axiom fails in {A}"
            perms = Permutation.all(n)
            for _ in range(100):
                s, r = rng.choice(perms), rng.choice(perms)
                x = A.wrap(A.random(rng))
                if apply_permutation(Permutation.identity(n), x) != x:
                    return False, f"identity acts nontrivially in {A}"
                if apply_permutation(s * r, x) != apply_permutation(s, apply_permutation(r, x)):
                    return False, f"action law fails for {s}, {r} in {A}"
    return True, f"{configs} configurations, 200 triples and 100 action checks each"


def criterion_4():
    rng = random.Random(SEED + 4)
    tested = skipped = 0
    for spec in ("Z", "Q", "Fp(3)", "Fp(5)", "Fp(7)"):
        R = construct_ring(spec)
        for n in (2, 3, 4):
            for _ in range(20):
                A = SplitAlgebra(R, random_monic(R, n, rng))
                report = verify_invariants_theorem(A, strict=False)
                if not report.hypothesis_holds:
                    skipped += 1
                    continue
                tested += 1
                if not report.invariants.is_base_ring:
                    return False, f"{A.f} over {spec}: invariants {report.invariants}"
    return True, f"{tested} algebras with invariants = A, {skipped} without a regular hypothesis"


def criterion_5():
    R = construct_ring(DUAL)
    u = R.parse("u")
    for f2 in R.elements():
        A = SplitAlgebra(R, MonicPoly(R, [f2, R.neg(u.value), R.one]))
        mod = invariant_module(A)
        utau = A.parse("u*tau2")
        if mod.is_base_ring or not is_invariant(A, utau) or not mod.contains(utau):
            return False, f"{A.f}: {mod}"
        brute = {A.element(d).value for d in exhaustive_invariants(A)}
        if _exhaustive_span(A, mod.generators) != brute or len(brute) != 8:
            return False, f"{A.f}: kernel and enumeration differ"
    return True, "u*tau2 invariant for all four f2; 8 invariants, matching enumeration"


def criterion_6():
    rng = random.Random(SEED + 6)
    for i in range(50):
        spec = ("Z", "Fp(2)", "Fp(3)", "Fp(5)", "Fp(7)")[i % 5]
        R = construct_ring(spec)
        f = random_monic(R, 1 + i % 5, rng)
        if discriminant(SplitAlgebra(R, f)) != resultant_discriminant(f):
            return False, f"discriminants differ for {f} over {spec}"
    P = construct_ring("Poly(Q; p, q)")
    cubic = MonicPoly.parse(P, "t^3+p*t+q")
    expected = P.parse("-4*p^3 - 27*q^2")
    if discriminant(SplitAlgebra(P, cubic)) != expected or resultant_discriminant(cubic) != expected:
        return False, "depressed cubic discriminant"
    return True, "50 random discriminants agree; -4p^3 - 27q^2 for the depressed cubic"


def random_symmetric(rng):
    n = rng.randint(1, 4)
    P = construct_ring("Poly(Z; " + ", ".join(f"t{i}" for i in range(1, n + 1)) + ")")
    h = P.zero_elem()
    for _ in range(rng.randint(1, 3)):
        d = rng.randint(0, 6)
        parts = [0] * n
        for _ in range(d):
            parts[rng.randrange(n)] += 1
        c = rng.randint(-5, 5)
        for e in set(itertools.permutations(parts)):
            h = h + P.wrap(P.monomial(list(e), c))
    return h


def criterion_7():
    rng = random.Random(SEED + 7)
    for _ in range(50):
        h = random_symmetric(rng)
        r = reduce_symmetric_polynomial(h)
        if gauss_symmetric_reduction(h, r.ring.names) != r:
            return False, f"reductions of {h} differ"
        if substitute_elementary(r, h.ring) != h:
            return False, f"round trip fails for {h}"
    return True, "50 random symmetric polynomials agree and round-trip"


def coprime_factorization(R, rng, n):
    """Random monic factors of total degree ``n`` that certify as pairwise coprime."""
    while True:
        degrees = []
        left = n
        while left:
            d = rng.randint(1, left)
            degrees.append(d)
            left -= d
        if len(degrees) < 2:
            continue
        factors = [random_monic(R, d, rng) for d in degrees]
        try:
            certify_coprime(factors)
        except NotCoprime:
            continue
        return factors


def criterion_8():
    rng = random.Random(SEED + 8)
    done = 0
    for spec in ("Q", "Fp(5)", "Z"):
        R = construct_ring(spec)
        for i in range(20):
            n = 2 + i % 4
            factors = coprime_factorization(R, rng, n)
            f = MonicPoly(R, [R.one])
            for g in factors:
                f = f * g
            dec = shuffle_decomposition(SplitAlgebra(R, MonicPoly(R, f.coeffs)), factors)
            comp = [g.degree for g in factors]
            if dec.size != math.factorial(n) or any(len(r) != dec.size for r in dec.matrix):
                return False, f"matrix for {f} is not {math.factorial(n)} square"
            if len(shuffles(comp)) * math.prod(math.factorial(k) for k in comp) != math.factorial(n):
                return False, f"shuffle count for {comp}"
            if spec == "Z" and str(dec.determinant) not in ("1", "-1"):
                return False, f"determinant {dec.determinant} is not a unit of Z"
            done += 1
    return True, f"{done} factored polynomials give invertible n! x n! matrices"


def criterion_9():
    cases = [("Fp(3)", "t^2+1", 2), ("Fp(7)", "t^3-2", 3), ("Fp(2)", "t^4+t+1", 4)]
    for spec, poly, order in cases:
        g = galois_group(MonicPoly.parse(construct_ring(spec), poly))
        ok = (
            g.group_order == order == g.residue_degree
            and g.checks["is_group"]
            and g.checks["fixed_field_is_base"]
            and (order != 4 or g.is_cyclic)
        )
        if not ok:
            return False, f"{poly} over {spec}: {g.to_json()}"
    return True, "orders 2, 3, 4 (cyclic) with |G| = [L:K] and fixed field K"


TRANSITIVITY_POLYS = [
    "(t-1)*(t-2)",
    "(t-1)^2",
    "(t-1)*(t-2)*(t-3)",
    "(t-1)^2*(t-2)",
    "(t-1)^3",
    "t^2+2",
    "(t^2+2)*(t-1)",
    "t^3+t+1",
    "(t-1)^2*(t-2)^2",
    "(t-1)*(t-2)*(t-3)*(t-4)",
]


def criterion_10():
    F5 = construct_ring("Fp(5)")
    for poly in TRANSITIVITY_POLYS:
        A = SplitAlgebra(F5, MonicPoly.parse(F5, poly))
        report = transitivity_check(A)
        if not report.transitive:
            return False, f"{poly}: S_n is not transitive"
        ideals = maximal_ideals(A)
        iso = residue_isomorphism(ideals[0], ideals[-1])
        if not all(iso.checks.values()):
            return False, f"{poly}: residue fields not isomorphic"
    return True, f"{len(TRANSITIVITY_POLYS)} polynomials over F5: transitive, residue fields isomorphic"


def criterion_11():
    data = inseparable_demo()
    return all(data["checks"].values()), ", ".join(f"{k}={v}" for k, v in data["checks"].items())


# criterion number -> (function, runtime limit in seconds or None)
CRITERIA = {
    1: (criterion_1, 1),
    2: (criterion_2, 10),
    3: (criterion_3, 30),
    4: (criterion_4, 300),
    5: (criterion_5, None),
    6: (criterion_6, None),
    7: (criterion_7, None),
    8: (criterion_8, 120),
    9: (criterion_9, None),
    10: (criterion_10, None),
    11: (criterion_11, 5),
}


def evaluate(k):
    fn, limit = CRITERIA[k]
    start = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as e:  # report, then fail
        ok, detail = False, f"{type(e).__name__}: {e}"
    elapsed = time.perf_counter() - start
    in_time = limit is None or elapsed < limit
    budget = f"limit {limit}s" if limit else "no limit"
    status = "PASS" if ok and in_time else "FAIL"
    line = f"criterion {k:2d}: {status}  {elapsed:7.2f}s ({budget})  {detail}"
    if not in_time:
        line += "  [over time]"
    return ok and in_time, line


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k, capsys):
    ok, line = evaluate(k)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(k) for k in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    raise SystemExit(0 if all(ok for ok, _ in results) else 1)
