"""Decompositions of ``A_f`` along a coprime factorization ``f = g_1 ... g_r``.

Two structural maps are built and checked to be isomorphisms:

* the CRT split ``A_f -> prod_i A[v_i]_{h_i}`` with ``A[v_i] = A[t]/(g_i)`` and
  ``h_i = f / (t - v_i)``;
* the shuffle map ``A_f -> prod_sigma A_{g_1} (x) ... (x) A_{g_r}``, one factor
  per shuffle of the composition ``(deg g_1, ..., deg g_r)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import _upoly, linalg
from .errors import (
    EmptyBlock,
    NonInvertibleResult,
    NotCoprime,
    ProductMismatch,
    UndecidableForRing,
)
from .poly import MonicPoly, UPoly, are_mutually_prime, is_irreducible, synthetic_divide
from .rings import Integers, Rationals, is_unit
from .splitting import AlgebraHom, Permutation, SplitAlgebra
from .tower import ExtensionField, QuotientRing, TowerRing


@dataclass(frozen=True)
class Shuffle:
    composition: tuple
    perm: Permutation

    def blocks(self):
        """Positions ``p_{j-1}+1 .. p_j`` of each block."""
        out, p = [], 0
        for nj in self.composition:
            out.append(list(range(p + 1, p + nj + 1)))
            p += nj
        return out


def shuffles(composition):
    """Permutations increasing on every block, in lexicographic order of images."""
    composition = tuple(composition)
    if any(nj < 1 for nj in composition):
        raise EmptyBlock(f"composition {composition} has an empty block")
    n = sum(composition)
    out = []
    for sigma in Permutation.all(n):
        s = Shuffle(composition, sigma)
        if all(all(sigma(a) < sigma(b) for a, b in zip(bl, bl[1:])) for bl in s.blocks()):
            out.append(s)
    return out


class TensorAlgebra(TowerRing):
    """``A_{g_1} (x)_A ... (x)_A A_{g_r}`` with roots ``rho_{ij}``."""

    def __init__(self, factors):
        factors = list(factors)
        base = factors[0].base
        if any(F.base != base for F in factors):
            raise ProductMismatch("tensor factors need a common base ring")
        self.factors = factors
        names, degrees, self.offsets = [], [], []
        for j, F in enumerate(factors, start=1):
            self.offsets.append(len(degrees))
            names += [f"rho{i}_{j}" for i in range(2, F.degree + 1)]
            degrees += list(F.degrees)
        super().__init__(base, names, degrees)
        for j, F in enumerate(factors):
            for l, rel in enumerate(F._rels):
                k = self.offsets[j] + l
                self._rels[k] = tuple(self._lift(j, c, l + 1) for c in rel)

    @property
    def spec(self):
        return "Tensor(" + ", ".join(F.spec for F in self.factors) + ")"

    def _lift(self, j, x, level):
        """Factor-``j`` payload at its level ``level`` -> payload at the matching global level."""
        F = self.factors[j]
        inner = self.offsets[j] + F.L
        return F._map_leaves(x, lambda c: self._const(c, inner), level)

    def inject(self, j, x):
        """Image of a factor-``j`` payload in the tensor product."""
        return self._wrap_outer(self._lift(j, x, 0), self.offsets[j])

    def rho(self, i, j):
        """Root ``rho_{ij}``: the ``i``-th universal root of factor ``j`` (both 1-based)."""
        F = self.factors[j - 1]
        return self.wrap(self.inject(j - 1, F.root_payload(i)))


def _check_product(f, factors):
    R = f.ring
    prod = UPoly(R, [R.one])
    for g in factors:
        prod = prod * g
    if prod != f:
        raise ProductMismatch(f"product of the factors is {prod}, not {f}")


def _bezout_over_z(g, h):
    Q = Rationals()
    gc, s, t = _upoly.xgcd(Q, [Fraction(c) for c in g.coeffs], [Fraction(c) for c in h.coeffs])
    if len(gc) != 1 or any(c.denominator != 1 for c in s + t):
        return None
    Z = g.ring
    return UPoly(Z, [int(c) for c in s]), UPoly(Z, [int(c) for c in t])


def certify_coprime(factors, bezout=None):
    """Pairwise Bezout certificates ``u g_i + v g_j = 1``.

    Over fields they are computed; over Z they come from the rational extended
    gcd when its cofactors are integral (exact for monic polynomials). Other
    rings need ``bezout[(i, j)] = (u, v)`` from the caller.
    """
    R = factors[0].ring
    certs = {}
    for i, j in itertools.combinations(range(len(factors)), 2):
        g, h = factors[i], factors[j]
        if bezout and (i, j) in bezout:
            u, v = (x if isinstance(x, UPoly) else UPoly(R, x) for x in bezout[(i, j)])
            if u * g + v * h != 1:
                raise NotCoprime(f"supplied cofactors for ({g}, {h}) are not a Bezout identity", (i, j))
            certs[(i, j)] = (u, v)
        elif R.is_field:
            c = are_mutually_prime(g, h)
            if not c.coprime:
                raise NotCoprime(f"{g} and {h} are not coprime", (i, j))
            certs[(i, j)] = (c.u, c.v)
        elif isinstance(R, Integers):
            uv = _bezout_over_z(g, h)
            if uv is None:
                raise NotCoprime(f"{g} and {h} do not generate the unit ideal of Z[t]", (i, j))
            certs[(i, j)] = uv
        else:
            raise UndecidableForRing(f"coprimality over {R} needs caller-supplied Bezout cofactors")
    return certs


def _as_monic(R, g):
    if isinstance(g, str):
        return MonicPoly.parse(R, g)
    if g.ring != R:
        g = g.change_ring(R)
    return g if isinstance(g, MonicPoly) else MonicPoly(R, g.coeffs)


def _flat_coords(R, A, x):
    """Coordinates of ``x in R`` over ``A`` (``R`` is ``A`` or free over ``A``)."""
    if R is A or R == A:
        return [x]
    out = []
    for c in R.vector(x):
        out.extend(_flat_coords(R.base, A, c))
    return out


def _require_unit(A, det, what):
    ok = A.is_field and not A.is_zero(det)
    if not ok:
        try:
            ok, _ = is_unit(A, A.wrap(det))
        except UndecidableForRing:
            ok = False
    if not ok:
        raise NonInvertibleResult(f"{what}: determinant {A.to_str(det)} is not a unit in {A}")


@dataclass
class CRTComponent:
    index: int
    base: object
    upsilon: object
    h: MonicPoly
    algebra: SplitAlgebra
    projection: AlgebraHom


@dataclass
class CRTSplit:
    components: list
    determinant: object
    rank: int


def crt_split(alg, factors, bezout=None):
    """Split ``A_f`` along ``A[tau_n] = A[t]/(f) = prod A[t]/(g_i)``."""
    A, f, n = alg.base, alg.f, alg.degree
    factors = [_as_monic(A, g) for g in factors]
    _check_product(f, factors)
    certify_coprime(factors, bezout)
    comps = []
    for i, g in enumerate(factors, start=1):
        if g.degree == 1:
            B = A
            ups = B.wrap(B.neg(g.coeffs[0]))
        else:
            if A.is_field and A.is_finite and is_irreducible(g):
                B = ExtensionField(A, f"v{i}", list(g.coeffs), check=False)
            else:
                B = QuotientRing(A, f"v{i}", list(g.coeffs))
            ups = B.gens()[f"v{i}"]
        h, rem = synthetic_divide(f, ups)
        if not rem.is_zero():
            raise NonInvertibleResult(f"g_{i}(v_{i}) != 0")
        comp = SplitAlgebra(B, h)
        roots = comp.roots() + [comp(ups)]
        proj = AlgebraHom(alg, comp, None, roots)
        comps.append(CRTComponent(i, B, ups, h, comp, proj))
    rows = []
    for e in alg.basis:
        x = alg._monomial(e, A.one)
        row = []
        for c in comps:
            for y in c.algebra.vector(c.projection.apply_payload(x)):
                row.extend(_flat_coords(c.base, A, y))
        rows.append(row)
    if any(len(r) != len(rows) for r in rows):
        raise NonInvertibleResult("component ranks do not add up to n!")
    det = linalg.determinant(rows, A)
    _require_unit(A, det, "CRT split")
    return CRTSplit(comps, A.wrap(det), len(rows))


def shuffle_roots(tensor, shuffle, reading="image"):
    """Root list for ``phi_sigma``: ``tau_{sigma(p_{j-1}+k)} -> rho_{kj}``.

    ``reading="inverse"`` uses ``tau_{sigma^-1(p_{j-1}+k)}`` instead; it is kept
    only to show that this alternative does not give an isomorphism.
    """
    sigma = shuffle.perm
    pick = sigma if reading == "image" else sigma.inverse()
    n = sigma.n
    roots = [None] * n
    for j, block in enumerate(shuffle.blocks(), start=1):
        for k, pos in enumerate(block, start=1):
            roots[pick(pos) - 1] = tensor.rho(k, j)
    return roots


@dataclass
class ShuffleDecomposition:
    composition: tuple
    shuffles: list
    tensor: TensorAlgebra
    homs: list
    matrix: list
    determinant: object

    @property
    def size(self):
        return len(self.matrix)

    def to_json(self):
        return {
            "composition": list(self.composition),
            "shuffles": [list(s.perm.images) for s in self.shuffles],
            "tensor_rank": len(self.tensor.basis),
            "matrix_size": self.size,
            "determinant": str(self.determinant),
            "invertible": True,
        }


def shuffle_decomposition(alg, factors, bezout=None, reading="image"):
    """Assemble ``prod_sigma phi_sigma`` as an ``n! x n!`` matrix over ``A`` and check it is invertible."""
    A, f = alg.base, alg.f
    factors = [_as_monic(A, g) for g in factors]
    _check_product(f, factors)
    certify_coprime(factors, bezout)
    comp = tuple(g.degree for g in factors)
    tensor = TensorAlgebra([SplitAlgebra(A, g) for g in factors])
    shs = shuffles(comp)
    homs = [AlgebraHom(alg, tensor, None, shuffle_roots(tensor, s, reading)) for s in shs]
    mats = [h.matrix() for h in homs]
    rows = [list(itertools.chain.from_iterable(m[i] for m in mats)) for i in range(len(alg.basis))]
    if any(len(r) != len(rows) for r in rows):
        raise NonInvertibleResult(f"matrix is {len(rows)} x {len(rows[0])}, not square")
    det = linalg.determinant(rows, A)
    _require_unit(A, det, "shuffle decomposition")
    return ShuffleDecomposition(comp, shs, tensor, homs, rows, A.wrap(det))
