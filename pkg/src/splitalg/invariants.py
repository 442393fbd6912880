"""Invariants of a splitting algebra under the symmetric group.

The fixed module is the common left kernel of ``phi_s - id`` over the
adjacent transpositions ``s``. When the base ring ``A`` has no echelon form of
its own it is *linearized*: ``A`` is written as a free module over a scalar
ring ``S`` (Z, a field or Z/m) and the kernel is taken over ``S``.
"""

from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass, field

from . import linalg
from .errors import (
    InternalInvariantViolation,
    MalformedSpec,
    NotSymmetric,
    SearchSpaceTooLarge,
    UnsupportedBaseRing,
)
from .poly import MonicPoly
from .rings import (
    Integers,
    IntegersMod,
    PolynomialRing,
    ProductRing,
    Regularity,
    Verdict,
    is_regular,
)
from .ringspec import construct_ring
from .splitting import Permutation, SplitAlgebra, discriminant, extend_scalars
from .tower import QuotientRing

DEFAULT_DEGREE_BOUND = 4
DEFAULT_MAX_ALGEBRA_SIZE = 65536


def max_algebra_size():
    return int(os.environ.get("SPLITALG_MAX_ALGEBRA_SIZE", DEFAULT_MAX_ALGEBRA_SIZE))


def adjacent_transpositions(n):
    return [Permutation.transposition(n, i, i + 1) for i in range(1, n)]


@dataclass
class InvariantModule:
    algebra: SplitAlgebra
    generators: list
    method: str
    degree_bound: int | None = None
    _linear: object = field(default=None, repr=False)

    @property
    def extra(self):
        """Generators beyond the constant 1."""
        return [g for g in self.generators if not g.is_constant()]

    @property
    def is_base_ring(self):
        return not self.extra

    def contains(self, x):
        """Whether ``x`` lies in the span of the generators."""
        if self._linear is None:
            return x in _exhaustive_span(self.algebra, self.generators)
        return self._linear.in_span(self.generators, x.value)

    def to_json(self):
        return {
            "ring": self.algebra.base.spec,
            "poly": str(self.algebra.f),
            "generators": [str(g) for g in self.generators],
            "method": self.method,
            "degree_bound": self.degree_bound,
            "is_base_ring": self.is_base_ring,
        }

    def __str__(self):
        return "{" + ", ".join(str(g) for g in self.generators) + "}"


def is_invariant(alg, x):
    return all(alg.action(s).apply_payload(x.value) == x.value for s in adjacent_transpositions(alg.degree))


# -- linearization -----------------------------------------------------------


class _Linear:
    """Coordinates of ``A_f`` over a scalar ring ``S``.

    ``betas`` is an ``S``-basis (or truncated spanning set) of ``A``;
    ``expand`` writes an ``A`` payload as ``{key: S payload}``.
    """

    def __init__(self, alg, S, betas, expand, keys=None):
        self.alg = alg
        self.S = S
        self.betas = betas
        self.expand = expand
        self.keys = keys

    @property
    def width(self):
        return len(self.alg.basis) * len(self.betas)

    def to_unknowns(self, x):
        """Vector over ``S`` indexed by (basis monomial, beta); ``None`` if not representable."""
        alg, S = self.alg, self.S
        cs = alg.coords(x)
        d = len(self.betas)
        vec = [S.zero] * self.width
        for bi, e in enumerate(alg.basis):
            c = cs.get(e)
            if c is None:
                continue
            for key, s in self.expand(c).items():
                j = self.keys.get(key) if self.keys is not None else key
                if j is None:
                    return None
                vec[bi * d + j] = s
        return vec

    def from_unknowns(self, v):
        alg, A = self.alg, self.alg.base
        d = len(self.betas)
        cs = {}
        for bi, e in enumerate(alg.basis):
            acc = A.zero
            for j in range(d):
                s = v[bi * d + j]
                if not self.S.is_zero(s):
                    acc = A.add(acc, A.mul(self.betas[j], A.embed(s) if A is not self.S else s))
            if not A.is_zero(acc):
                cs[e] = acc
        return alg.from_coords(cs)

    def kernel(self):
        alg, A, S = self.alg, self.alg.base, self.S
        mats = []
        for s in adjacent_transpositions(alg.degree):
            M = alg.action_matrix(s)
            for i in range(len(M)):
                M[i][i] = A.sub(M[i][i], A.one)
            mats.append(M)
        cols = {}
        rows = []
        for bi in range(len(alg.basis)):
            for beta in self.betas:
                row = {}
                for mi, M in enumerate(mats):
                    for c, a in enumerate(M[bi]):
                        if A.is_zero(a):
                            continue
                        for key, val in self.expand(A.mul(beta, a)).items():
                            col = cols.setdefault((mi, c, key), len(cols))
                            row[col] = val
                rows.append(row)
        width = len(cols)
        dense = [[row.get(j, S.zero) for j in range(width)] for row in rows]
        if width == 0:
            return [[S.one if i == j else S.zero for j in range(len(rows))] for i in range(len(rows))]
        return linalg.left_kernel(dense, S, width)

    def span_rows(self, gens):
        rows = []
        A = self.alg.base
        for g in gens:
            for beta in self.betas:
                v = self.to_unknowns(self.alg._scale(g.value, beta, 0))
                if v is not None:
                    rows.append(v)
        return rows

    def in_span(self, gens, x):
        v = self.to_unknowns(x)
        if v is None:
            return False
        return linalg.row_space_contains(self.span_rows(gens), v, self.S)


def _scalar_method(S):
    if S.is_field:
        return "FieldKernel"
    if isinstance(S, Integers):
        return "IntegerKernel"
    if isinstance(S, IntegersMod):
        return "HowellKernel"
    return None


def _linearize(alg, degree_bound):
    A = alg.base
    if _scalar_method(A):
        return _Linear(alg, A, [A.one], lambda c: {0: c}), None
    if isinstance(A, QuotientRing) and _scalar_method(A.base):
        S = A.base
        d = A.degrees[0]
        betas = [A.from_dense([S.zero] * j + [S.one]) for j in range(d)]

        def expand(c):
            return {j: x for j, x in enumerate(A.dense(c)) if not S.is_zero(x)}

        return _Linear(alg, S, betas, expand), None
    if isinstance(A, PolynomialRing) and _scalar_method(A.base):
        S = A.base
        D = DEFAULT_DEGREE_BOUND if degree_bound is None else degree_bound
        monos = [e for e in itertools.product(range(D + 1), repeat=A.nvars) if sum(e) <= D]
        monos.sort(key=lambda e: (sum(e), e))
        betas = [A.monomial(e) for e in monos]
        keys = {e: j for j, e in enumerate(monos)}

        def expand(c):
            return dict(c)

        return _Linear(alg, S, betas, expand, keys), D
    return None, None


def invariant_module(alg, degree_bound=None, max_size=None):
    """Generators of the ``A``-module of ``S_n``-invariants of ``A_f``.

    For polynomial base rings only coordinates of total degree at most
    ``degree_bound`` are searched.
    """
    A = alg.base
    lin, D = _linearize(alg, degree_bound)
    if lin is not None:
        gens = _kernel_generators(alg, lin)
        mod = InvariantModule(alg, gens, _scalar_method(lin.S), D, lin)
    elif isinstance(A, ProductRing):
        mod = _product_invariants(alg, degree_bound, max_size)
    elif A.is_finite:
        mod = _exhaustive_module(alg, max_size)
    else:
        raise UnsupportedBaseRing(f"cannot compute invariants over {A}")
    for g in mod.generators:
        if not is_invariant(alg, g):
            raise InternalInvariantViolation(f"generator {g} is not invariant")
    return mod


def _kernel_generators(alg, lin):
    S = lin.S
    d = len(lin.betas)
    ker = lin.kernel()
    # 1 is always invariant: drop constant coordinates and add it back explicitly
    trimmed = []
    for v in ker:
        v = list(v)
        for j in range(d):
            v[j] = S.zero
        if any(not S.is_zero(x) for x in v):
            trimmed.append(v)
    gens = [alg.one_elem()]
    if not trimmed:
        return gens
    span = lin.span_rows(gens)
    for v in linalg.echelon(trimmed, S, lin.width):
        if span and linalg.row_space_contains(span, v, S):
            continue
        g = alg.wrap(lin.from_unknowns(v))
        gens.append(g)
        span = lin.span_rows(gens)
    return gens


# -- finite rings by enumeration ---------------------------------------------


def _check_size(alg, max_size):
    cap = max_algebra_size() if max_size is None else max_size
    size = alg.cardinality
    if size is None or size > cap:
        raise SearchSpaceTooLarge(f"algebra has {size} elements (cap {cap})", size)
    return size


def _exhaustive_span(alg, gens):
    """All ``A``-linear combinations of ``gens`` (finite ``A``)."""
    A = alg.base
    span = {None}
    for g in gens:
        multiples = {alg._scale(g.value, a, 0) for a in A.elements()}
        span = {alg.add(x, y) for x in span for y in multiples}
    return span


def _exhaustive_module(alg, max_size=None):
    _check_size(alg, max_size)
    fixed = [x for x in alg.elements() if x is None or is_invariant(alg, alg.wrap(x))]
    gens = [alg.one_elem()]
    span = _exhaustive_span(alg, gens)
    for x in fixed:
        if x not in span:
            gens.append(alg.wrap(x))
            span = _exhaustive_span(alg, gens)
    return InvariantModule(alg, gens, "Exhaustive")


def _product_invariants(alg, degree_bound, max_size):
    A = alg.base
    cap = max_algebra_size() if max_size is None else max_size
    if alg.cardinality <= cap:
        return _exhaustive_module(alg, max_size)
    # A_f over a product is the product of the factor algebras
    gens, methods = [alg.one_elem()], []
    for i, R in enumerate(A.factors):
        ext = extend_scalars(alg, R, lambda c, i=i: c[i])
        sub = invariant_module(ext.algebra, degree_bound, max_size)
        methods.append(sub.method)
        for g in sub.extra:
            cs = {
                e: tuple(c if j == i else S.zero for j, S in enumerate(A.factors))
                for e, c in ext.algebra.coords(g.value).items()
            }
            gens.append(alg.wrap(alg.from_coords(cs)))
    method = "HowellKernel" if "HowellKernel" in methods else methods[0]
    return InvariantModule(alg, gens, method)


# -- theorem check -----------------------------------------------------------


@dataclass
class TheoremReport:
    ring: str
    poly: str
    two: Regularity
    discriminant: object
    dis: Regularity
    invariants: InvariantModule
    consistent: bool

    @property
    def hypothesis_holds(self):
        return self.two.is_regular or self.dis.is_regular

    @property
    def hypothesis_unverified(self):
        return not self.hypothesis_holds and Verdict.UNKNOWN in (self.two.verdict, self.dis.verdict)

    def to_json(self):
        return {
            "ring": self.ring,
            "poly": self.poly,
            "two": self.two.verdict.value,
            "two_witness": None if self.two.witness is None else str(self.two.witness),
            "discriminant": str(self.discriminant),
            "discriminant_regularity": self.dis.verdict.value,
            "discriminant_witness": None if self.dis.witness is None else str(self.dis.witness),
            "invariants": [str(g) for g in self.invariants.generators],
            "invariants_are_base_ring": self.invariants.is_base_ring,
            "method": self.invariants.method,
            "hypothesis_unverified": self.hypothesis_unverified,
            "consistent": self.consistent,
        }


def verify_invariants_theorem(alg, degree_bound=None, strict=True):
    """Check "2 regular or Dis(f) regular implies invariants = A" on one algebra.

    Dis(f) lies in ``A`` and ``A_f`` is free over ``A``, so regularity of
    Dis(f) in ``A`` is the same as in ``A_f``.
    """
    A = alg.base
    two = is_regular(A, A(2))
    dis_value = discriminant(alg) if alg.degree >= 1 else A.one_elem()
    dis = is_regular(A, dis_value)
    mod = invariant_module(alg, degree_bound)
    ok = mod.is_base_ring or not (two.is_regular or dis.is_regular)
    report = TheoremReport(A.spec, str(alg.f), two, dis_value, dis, mod, ok)
    if strict and not ok:
        raise InternalInvariantViolation(
            f"invariants of {alg} exceed A although a regularity hypothesis holds: {mod}"
        )
    return report


# -- search harness ----------------------------------------------------------


def monic_polynomials(R, n):
    """All monic polynomials of degree ``n`` over a finite ring, in enumeration order."""
    elems = list(R.elements())
    for tail in itertools.product(elems, repeat=n):
        yield MonicPoly(R, list(reversed(tail)) + [R.one])


def search_exceptional(spec):
    """Scan (ring, f) pairs for invariants beyond the base ring.

    ``spec`` is a dict or JSON string with keys ``rings``, ``degrees``,
    optional ``polys`` and ``max_algebra_size``.
    """
    if isinstance(spec, str):
        spec = json.loads(spec)
    try:
        rings = spec["rings"]
    except (KeyError, TypeError):
        raise MalformedSpec("search spec needs a 'rings' list") from None
    degrees = spec.get("degrees", [2])
    cap = spec.get("max_algebra_size", max_algebra_size())
    findings = []
    for rs in rings:
        R = construct_ring(rs)
        if not R.is_finite:
            raise MalformedSpec(f"search rings must be finite, got {rs}")
        if "polys" in spec:
            polys = [MonicPoly.parse(R, p) for p in spec["polys"]]
        else:
            polys = []
            for n in degrees:
                size = R.cardinality ** _factorial(n)
                if size > cap:
                    raise SearchSpaceTooLarge(f"{rs} with degree {n}: algebra of {size} elements exceeds {cap}", size)
                polys.extend(monic_polynomials(R, n))
        for f in polys:
            alg = SplitAlgebra(R, f)
            if alg.cardinality > cap:
                raise SearchSpaceTooLarge(f"{rs}, {f}: algebra of {alg.cardinality} elements exceeds {cap}", alg.cardinality)
            mod = invariant_module(alg, max_size=cap)
            if mod.extra:
                findings.append({"ring": R.spec, "poly": str(f), "extra_invariants": [str(g) for g in mod.extra]})
    return findings


def _factorial(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


# -- symmetric reduction -----------------------------------------------------


def _swap_payload(P, h, i):
    out = {}
    for e, c in h:
        e = list(e)
        e[i], e[i + 1] = e[i + 1], e[i]
        out[tuple(e)] = c
    return P._pack(out)


def check_symmetric(h):
    """Raise :class:`NotSymmetric` unless ``h`` is fixed by adjacent variable swaps."""
    P = h.ring
    for i in range(P.nvars - 1):
        if _swap_payload(P, h.value, i) != h.value:
            raise NotSymmetric(
                f"{h} changes under swapping {P.names[i]} and {P.names[i + 1]}",
                (i + 1, i + 2),
            )


def generic_algebra(A, n, names=None):
    """``A[f_1..f_n]_f`` for the generic ``f = t^n - f_1 t^(n-1) + ... ``."""
    names = names or [f"f{k}" for k in range(1, n + 1)]
    P = PolynomialRing(A, names)
    g = P.gens()
    f = MonicPoly.from_signed(P, [g[x] for x in names])
    return SplitAlgebra(P, f)


def reduce_symmetric_polynomial(h, names=None):
    """Write a symmetric ``h(t_1, ..., t_n)`` as a polynomial in ``f_1, ..., f_n``.

    ``h`` is evaluated at the universal roots of the generic polynomial; the
    result is a constant of the splitting algebra.
    """
    Pt = h.ring
    check_symmetric(h)
    alg = generic_algebra(Pt.base, Pt.nvars, names)
    roots = [alg.root_payload(i) for i in range(1, alg.degree + 1)]
    powers = [[alg.one] for _ in roots]
    acc = alg.zero
    for e, c in h.value:
        term = alg.embed(alg.base.embed(c))
        for i, k in enumerate(e):
            pw = powers[i]
            while len(pw) <= k:
                pw.append(alg.mul(pw[-1], roots[i]))
            if k:
                term = alg.mul(term, pw[k])
        acc = alg.add(acc, term)
    return alg.base.wrap(alg.constant_of(acc, "symmetric reduction"))


def substitute_elementary(expr, Pt):
    """Replace ``f_k`` by ``e_k(t_1, ..., t_n)`` and expand in ``Pt``."""
    n = Pt.nvars
    t = [Pt.gens()[x] for x in Pt.names]
    es = []
    for k in range(1, n + 1):
        acc = Pt.zero_elem()
        for combo in itertools.combinations(t, k):
            term = Pt.one_elem()
            for x in combo:
                term = term * x
            acc = acc + term
        es.append(acc.value)
    return Pt.wrap(expr.ring.evaluate(expr.value, es, Pt))
