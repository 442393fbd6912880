"""Galois-theoretic structure of ``K_f`` over a finite field ``K``.

Maximal ideals are found by walking the tower: choose a root of ``f_n`` in
some finite extension of ``K`` (one per distinct irreducible factor), push it
into ``f_{n-1}``, factor again and so on. Every leaf of this search is a
surjection ``K_f -> L`` onto a field, and distinct leaves have distinct
kernels.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg
from .errors import (
    InternalInvariantViolation,
    NotFiniteField,
    NotSeparable,
)
from .invariants import invariant_module
from .poly import MonicPoly, are_mutually_prime, factor_over_finite_field
from .ringspec import construct_ring
from .splitting import AlgebraHom, Permutation, SplitAlgebra
from .tower import ExtensionField

FIELD_CHECK_CAP = 2048


def _require_finite_field(alg):
    K = alg.base
    if not (K.is_field and K.is_finite):
        raise NotFiniteField(f"{K} is not a finite field")
    return K


def require_separable(f):
    if f.degree >= 1 and not are_mutually_prime(f, f.derivative()).coprime:
        raise NotSeparable(f"{f} is not separable")


def flat_vector(L, K, x):
    """Coordinates of ``x in L`` over ``K`` through a tower of extensions."""
    if L is K or L == K:
        return [x]
    out = []
    for c in L.vector(x):
        out.extend(flat_vector(L.base, K, c))
    return out


def _partial_eval(alg, x, F, roots, coeff):
    """Evaluate an element supported on ``tau_{i+1}..tau_n`` at assigned roots."""
    acc = F.zero
    for e, c in alg.coords(x).items():
        term = coeff(c)
        for k, m in enumerate(e):
            if m:
                term = F.mul(term, F.pow(roots[k + 2], m))
        acc = F.add(acc, term)
    return acc


@dataclass
class MaximalIdealDesc:
    algebra: SplitAlgebra
    hom: AlgebraHom
    field: object
    kernel_rows: list
    residue_degree: int
    checks: dict = field(default_factory=dict)

    @property
    def kernel_basis(self):
        return [self.algebra.wrap(self.algebra.from_vector(r)) for r in self.kernel_rows]

    @property
    def key(self):
        K = self.algebra.base
        return tuple(tuple(K.sort_key(c) for c in r) for r in self.kernel_rows)

    @property
    def roots(self):
        return [self.field.wrap(r) for r in self.hom.roots]

    def maps_onto(self, sigma, J):
        """Whether ``phi_sigma(I) = J``.

        ``phi_J o phi_sigma`` sends ``tau_i`` to the ``sigma^-1(i)``-th root of
        ``J``; it kills ``I`` exactly when ``phi_sigma(I)`` is contained in ``J``,
        and both are maximal.
        """
        inv = sigma.inverse()
        roots = [J.field.wrap(J.hom.roots[inv(i) - 1]) for i in range(1, sigma.n + 1)]
        psi = AlgebraHom(self.algebra, J.field, J.hom.coeff_map, roots, check=False)
        alg = self.algebra
        return all(J.field.is_zero(psi.apply_payload(alg.from_vector(r))) for r in self.kernel_rows)

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.kernel_basis) + ")"


def _dot(K, a, b):
    acc = K.zero
    for x, y in zip(a, b):
        if not K.is_zero(x) and not K.is_zero(y):
            acc = K.add(acc, K.mul(x, y))
    return acc


def _ideal_from_hom(alg, hom):
    K, L = alg.base, hom.target
    imgs = hom._monomial_images()
    rows = [flat_vector(L, K, imgs[e]) for e in alg.basis]
    ker = linalg.left_kernel(rows, K, len(rows[0]))
    ker = linalg.rref(ker, K, len(alg.basis))[0] if ker else []
    d = len(alg.basis) - len(ker)
    return MaximalIdealDesc(alg, hom, L, ker, d)


def _leaves(alg):
    """All surjections onto fields from the tower search, in deterministic order."""
    K = alg.base
    n = alg.degree
    out = []

    def coeff_into(F):
        return lambda c: F.coerce(K.wrap(c))

    def rec(i, F, roots):
        if i == 1:
            # f_1 = t - tau_1 expression
            f1 = alg._tower[1]
            r1 = F.neg(_partial_eval(alg, f1[0], F, roots, coeff_into(F)))
            full = [r1] + [roots[k] for k in range(2, n + 1)]
            out.append(AlgebraHom(alg, F, coeff_into(F), [F.wrap(r) for r in full]))
            return
        fi = alg._tower[i]
        coeffs = [_partial_eval(alg, c, F, roots, coeff_into(F)) for c in fi]
        g = MonicPoly(F, coeffs)
        for h, _ in factor_over_finite_field(g):
            if h.degree == 1:
                r = F.neg(h.coeffs[0])
                rec(i - 1, F, {**roots, i: r})
            else:
                E = ExtensionField(F, f"r{i}", list(h.coeffs), check=False)
                lifted = {k: E.embed(v) for k, v in roots.items()}
                lifted[i] = E.generator(0)
                rec(i - 1, E, lifted)

    if n == 0:
        out.append(AlgebraHom(alg, K, None, []))
    elif n == 1:
        rec(1, K, {})
    else:
        rec(n, K, {})
    return out


def maximal_ideals(alg, check=True):
    """All maximal ideals of ``K_f``, each as the kernel of a map onto a field."""
    _require_finite_field(alg)
    ideals = [_ideal_from_hom(alg, h) for h in _leaves(alg)]
    if len({I.key for I in ideals}) != len(ideals):
        raise InternalInvariantViolation("tower search produced a repeated maximal ideal")
    if check:
        for I in ideals:
            check_maximal_ideal(I)
    return ideals


def _in_rref_span(K, rows, pivots, y):
    y = list(y)
    for r, p in zip(rows, pivots):
        c = y[p]
        if not K.is_zero(c):
            y = [K.sub(a, K.mul(c, b)) for a, b in zip(y, r)]
    return all(K.is_zero(c) for c in y)


def check_maximal_ideal(I):
    """Check that the kernel is an ideal of the right codimension with a field quotient."""
    alg = I.algebra
    K = alg.base
    rows = I.kernel_rows
    pivots = [next(j for j, c in enumerate(r) if not K.is_zero(c)) for r in rows]
    closed = True
    for x in rows:
        px = alg.from_vector(x)
        for i in range(2, alg.degree + 1):
            y = alg.vector(alg.mul(px, alg.root_payload(i)))
            if not _in_rref_span(K, rows, pivots, y):
                closed = False
    L = I.field
    codim_ok = len(alg.basis) - len(rows) == I.residue_degree and L.cardinality == K.cardinality**I.residue_degree
    field_ok = None
    if L.cardinality <= FIELD_CHECK_CAP:
        field_ok = all(L.unit_inverse(y)[0] for y in L.elements() if not L.is_zero(y))
    I.checks = {"ideal": closed, "codimension": codim_ok, "quotient_is_field": field_ok}
    if not closed or not codim_ok or field_ok is False:
        raise InternalInvariantViolation(f"kernel {I} failed its checks: {I.checks}")
    return I.checks


def primitive_idempotents(alg):
    """Orthogonal idempotents summing to 1, one per field factor of ``K_f``."""
    K = _require_finite_field(alg)
    require_separable(alg.f)
    ideals = maximal_ideals(alg)
    blocks = []
    for I in ideals:
        imgs = I.hom._monomial_images()
        blocks.append([flat_vector(I.field, K, imgs[e]) for e in alg.basis])
    H = [sum((b[i] for b in blocks), []) for i in range(len(alg.basis))]
    out = []
    offset = 0
    width = len(H[0])
    for I in ideals:
        target = [K.zero] * width
        target[offset] = K.one  # the unit of L has flat coordinates (1, 0, ..., 0)
        offset += I.residue_degree
        v = linalg.solve_left(H, target, K)
        if v is None:
            raise InternalInvariantViolation("K_f is not the product of its residue fields")
        out.append(alg.wrap(alg.from_vector(v)))
    _check_idempotents(alg, out)
    return out


def _check_idempotents(alg, es):
    total = alg.zero
    for i, e in enumerate(es):
        if e * e != e or e.is_zero():
            raise InternalInvariantViolation(f"{e} is not a nonzero idempotent")
        for e2 in es[i + 1 :]:
            if not (e * e2).is_zero():
                raise InternalInvariantViolation("idempotents are not orthogonal")
        total = alg.add(total, e.value)
    if total != alg.one:
        raise InternalInvariantViolation("idempotents do not sum to 1")


# -- group computations ------------------------------------------------------


def closure(gens, n):
    group = {Permutation.identity(n)}
    frontier = list(group)
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = g * s
                if h not in group:
                    group.add(h)
                    nxt.append(h)
        frontier = nxt
    return group


def is_group(elems, n):
    S = set(elems)
    if Permutation.identity(n) not in S:
        return False
    return all(a * b in S for a in S for b in S) and all(a.inverse() in S for a in S)


def small_generating_set(elems, n):
    gens, gen = [], {Permutation.identity(n)}
    for s in sorted(elems):
        if s not in gen:
            gens.append(s)
            gen = closure(gens, n)
    return gens


def stabilizer(I):
    return [s for s in Permutation.all(I.algebra.degree) if I.maps_onto(s, I)]


def _preimages(I):
    """``x_j in K_f`` with ``phi(x_j)`` the ``K``-basis vectors of ``L``."""
    alg = I.algebra
    K = alg.base
    imgs = I.hom._monomial_images()
    H = [flat_vector(I.field, K, imgs[e]) for e in alg.basis]
    d = I.residue_degree
    out = []
    for j in range(d):
        target = [K.one if k == j else K.zero for k in range(d)]
        v = linalg.solve_left(H, target, K)
        out.append(alg.from_vector(v))
    return out


def induced_action_matrix(I, J, sigma, pre=None):
    """Matrix over ``K`` of ``L_I -> L_J``, ``phi_I(x) -> phi_J(phi_sigma(x))``."""
    alg = I.algebra
    K = alg.base
    pre = _preimages(I) if pre is None else pre
    act = alg.action(sigma)
    return [flat_vector(J.field, K, J.hom.apply_payload(act.apply_payload(x))) for x in pre]


def fixed_field_dimension(I, group):
    """``dim_K`` of the subfield of ``L`` fixed by the induced action of ``group``."""
    K = I.algebra.base
    d = I.residue_degree
    pre = _preimages(I)
    rows = [[] for _ in range(d)]
    for s in group:
        M = induced_action_matrix(I, I, s, pre)
        for i in range(d):
            rows[i].extend(K.sub(M[i][j], K.one if i == j else K.zero) for j in range(d))
    if not rows[0]:
        return d
    return len(linalg.left_kernel(rows, K, len(rows[0])))


@dataclass
class GaloisReport:
    poly: str
    ring: str
    group: list
    generators: list
    residue_degree: int
    ideal: MaximalIdealDesc
    checks: dict

    @property
    def group_order(self):
        return len(self.group)

    @property
    def is_cyclic(self):
        return any(s.order() == len(self.group) for s in self.group)

    def to_json(self):
        return {
            "ring": self.ring,
            "poly": self.poly,
            "group_order": self.group_order,
            "generators": [list(s.images) for s in self.generators],
            "residue_degree": self.residue_degree,
            "cyclic": self.is_cyclic,
            "checks": self.checks,
        }


def galois_group(f):
    """Stabilizer in ``S_n`` of the lexicographically least maximal ideal of ``K_f``."""
    K = f.ring
    if not (K.is_field and K.is_finite):
        raise NotFiniteField(f"{K} is not a finite field")
    require_separable(f)
    alg = SplitAlgebra(K, f)
    ideals = maximal_ideals(alg)
    I = min(ideals, key=lambda J: J.key)
    G = stabilizer(I)
    n = alg.degree
    fixed_dim = fixed_field_dimension(I, G)
    checks = {
        "order_equals_residue_degree": len(G) == I.residue_degree,
        "is_group": is_group(G, n),
        "fixed_field_is_base": fixed_dim == 1,
        "orbit_stabilizer": len(G) * len(ideals) == len(Permutation.all(n)),
        "ideal": all(I.checks.values()) if I.checks else True,
    }
    if not all(checks.values()):
        raise InternalInvariantViolation(f"Galois group checks failed: {checks}")
    return GaloisReport(str(f), K.spec, sorted(G), small_generating_set(G, n), I.residue_degree, I, checks)


@dataclass
class TransitivityReport:
    ideals: list
    orbit: dict
    transitive: bool

    def to_json(self):
        return {
            "ideal_count": len(self.ideals),
            "transitive": self.transitive,
            "ideals": [
                {"kernel": [str(g) for g in I.kernel_basis], "residue_degree": I.residue_degree} for I in self.ideals
            ],
        }


def transitivity_check(alg):
    """Check that ``S_n`` moves the first maximal ideal onto every other one."""
    _require_finite_field(alg)
    ideals = maximal_ideals(alg)
    first = ideals[0]
    perms = Permutation.all(alg.degree)
    orbit = {}
    for idx, J in enumerate(ideals):
        s = next((s for s in perms if first.maps_onto(s, J)), None)
        if s is not None:
            orbit[idx] = s
    return TransitivityReport(ideals, orbit, len(orbit) == len(ideals))


@dataclass
class ResidueIsomorphism:
    source: MaximalIdealDesc
    target: MaximalIdealDesc
    sigma: Permutation
    matrix: list
    checks: dict


def residue_isomorphism(I, J):
    """A ``K``-isomorphism ``K_f/I -> K_f/J`` induced by some ``sigma`` with ``phi_sigma(I) = J``."""
    alg = I.algebra
    K = alg.base
    sigma = next((s for s in Permutation.all(alg.degree) if I.maps_onto(s, J)), None)
    if sigma is None:
        raise InternalInvariantViolation("maximal ideals are not conjugate")
    pre = _preimages(I)
    M = induced_action_matrix(I, J, sigma, pre)
    LI, LJ = I.field, J.field
    d = I.residue_degree

    def image(y):
        v = flat_vector(LI, K, y)
        return [_dot(K, v, [M[i][j] for i in range(d)]) for j in range(len(M[0]))]

    basis_I = [LI.wrap(I.hom.apply_payload(x)) for x in pre]
    mult_ok = True
    for a in basis_I:
        for b in basis_I:
            lhs = image((a * b).value)
            ra, rb = image(a.value), image(b.value)
            # multiply in L_J by lifting coordinates back through preimages of J
            pa = _from_flat(J, ra)
            pb = _from_flat(J, rb)
            if flat_vector(LJ, K, LJ.mul(pa, pb)) != lhs:
                mult_ok = False
    det = linalg.determinant(M, K) if len(M) == len(M[0]) else K.zero
    checks = {
        "same_degree": I.residue_degree == J.residue_degree,
        "bijective": not K.is_zero(det),
        "multiplicative": mult_ok,
        "unital": image(LI.one) == flat_vector(LJ, K, LJ.one),
    }
    if not all(checks.values()):
        raise InternalInvariantViolation(f"induced residue map is not an isomorphism: {checks}")
    return ResidueIsomorphism(I, J, sigma, M, checks)


def _from_flat(I, vec):
    """Element of ``I.field`` with the given flat coordinates."""
    L = I.field
    K = I.algebra.base

    def build(R, it):
        if R is K or R == K:
            return next(it)
        return R.from_vector([build(R.base, it) for _ in range(len(R.basis))])

    return build(L, iter(vec))


# -- inseparable example -----------------------------------------------------


def inseparable_demo():
    """``f = t^3 - s`` over ``F_3(s)``: nilpotent root differences and a trivial residue action."""
    K = construct_ring("Frac(Poly(Fp(3); s))")
    f = MonicPoly.parse(K, "t^3 - s")
    alg = SplitAlgebra(K, f)
    n = alg.degree
    roots = [alg.root_payload(i) for i in range(1, n + 1)]
    diffs = [alg.sub(roots[i], roots[j]) for i in range(n) for j in range(i + 1, n)]
    squares_vanish = all(alg.mul(d, d) is None for d in diffs)
    # I as a K-subspace: products of the generators with every basis monomial
    ideal_rows = []
    for d in diffs:
        for e in alg.basis:
            ideal_rows.append(alg.vector(alg.mul(d, alg._monomial(e, K.one))))
    ideal = linalg.echelon(ideal_rows, K, len(alg.basis))
    key = linalg.span_key(ideal, K, len(alg.basis))
    stable = True
    trivial = True
    for s in Permutation.all(n):
        act = alg.action(s)
        moved = [alg.vector(act.apply_payload(alg.from_vector(r))) for r in ideal]
        if linalg.span_key(ideal + moved, K, len(alg.basis)) != key:
            stable = False
        for r in roots:
            delta = alg.vector(alg.sub(act.apply_payload(r), r))
            if not linalg.row_space_contains(ideal, delta, K):
                trivial = False
    mod = invariant_module(alg)
    return {
        "ring": K.spec,
        "poly": str(f),
        "ideal_dimension": len(ideal),
        "checks": {
            "root_differences_square_to_zero": squares_vanish,
            "ideal_stable": stable,
            "trivial_residue_action": trivial,
            "invariants_are_base_field": mod.is_base_ring,
        },
        "invariants": [str(g) for g in mod.generators],
    }

