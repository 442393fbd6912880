"""The splitting algebra ``A_f`` of a monic polynomial and its symmetric-group action.

``A_f`` is built as a tower: ``f_n = f`` and ``f_{i-1}(t) = f_i(t) / (t - tau_i)``.
The relation ``f_i(tau_i) = 0`` has coefficients in ``tau_{i+1}, ..., tau_n``,
so normal forms are polynomials in ``tau_2, ..., tau_n`` with ``deg_{tau_i} < i``.
``tau_1`` is not a basis variable; it equals ``f_1 - tau_2 - ... - tau_n``.
"""

from __future__ import annotations

import itertools
import json
import os
from math import factorial

from .errors import (
    AlgebraMismatch,
    DegreeMismatch,
    DegreeTooLarge,
    IndexOutOfRange,
    InternalInvariantViolation,
    NonMonicInput,
    NotACompleteFactorization,
    NotAHomomorphism,
    RingMismatch,
)
from .poly import MonicPoly, UPoly
from .rings import RingElem
from .tower import TowerRing

MAX_DEGREE = int(os.environ.get("SPLITALG_MAX_DEGREE", "8"))


class Permutation:
    """A permutation of ``1..n`` given by its images.

    Products compose left to right: ``(s * r)(i) == r(s(i))``. With this
    convention ``phi_{s*r} = phi_s o phi_r`` for ``phi_s(tau_i) = tau_{s^-1(i)}``.
    """

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        self.images = images

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n, i, j):
        img = list(range(1, n + 1))
        img[i - 1], img[j - 1] = j, i
        return cls(img)

    @classmethod
    def from_cycles(cls, n, cycles):
        img = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b
        return cls(img)

    @classmethod
    def all(cls, n):
        """All of ``S_n`` in lexicographic order of images."""
        return [cls(p) for p in itertools.permutations(range(1, n + 1))]

    @property
    def n(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i - 1]

    def __mul__(self, other):
        if self.n != other.n:
            raise DegreeMismatch("permutations of different degrees")
        return Permutation(other(self(i)) for i in range(1, self.n + 1))

    def inverse(self):
        inv = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(inv)

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images, start=1))

    def order(self):
        k, p = 1, self
        while not p.is_identity():
            p, k = p * self, k + 1
        return k

    def cycles(self):
        seen, out = set(), []
        for i in range(1, self.n + 1):
            if i in seen or self(i) == i:
                continue
            cyc, j = [], i
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other):
        return self.images < other.images

    def __str__(self):
        cs = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cs) or "()"

    def __repr__(self):
        return f"Permutation({list(self.images)})"


class SplitElement(RingElem):
    __slots__ = ()

    def _coerce(self, other):
        if isinstance(other, SplitElement) and other.ring is not self.ring and other.ring != self.ring:
            raise AlgebraMismatch("elements of different splitting algebras")
        return super()._coerce(other)

    @property
    def algebra(self):
        return self.ring

    @property
    def coords(self):
        """``{(m_2, ..., m_n): base element}`` with zero entries omitted."""
        B = self.ring.base
        return {e: B.wrap(c) for e, c in self.ring.coords(self.value).items()}

    def is_constant(self):
        return self.ring.is_constant(self.value)

    def constant(self):
        return self.ring.base.wrap(self.ring.constant_coeff(self.value))

    def vector(self):
        return self.ring.vector(self.value)

    def to_json(self):
        alg = self.ring
        cs = alg.coords(self.value)
        items = [{"exps": list(e), "coeff": alg.base.to_str(cs[e])} for e in alg.basis if e in cs]
        return {"degree": alg.degree, "coords": items}

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True)


class SplitAlgebra(TowerRing):
    """``A_f`` with basis ``tau_2^m_2 ... tau_n^m_n``, ``0 <= m_i < i`` (graded lex)."""

    element_class = SplitElement

    def __init__(self, base, f, max_degree=None):
        if not isinstance(f, UPoly) or not f.is_monic():
            raise NonMonicInput(f"{f} is not monic")
        if f.ring != base:
            f = f.change_ring(base)
        if not isinstance(f, MonicPoly):
            f = MonicPoly(base, f.coeffs)
        n = f.degree
        limit = MAX_DEGREE if max_degree is None else max_degree
        if n > limit:
            raise DegreeTooLarge(f"degree {n} exceeds the limit {limit} ({factorial(n)} basis elements)")
        self.f = f
        self.degree = n
        super().__init__(base, [f"tau{i}" for i in range(2, n + 1)], list(range(2, n + 1)))
        self._action_cache = {}
        self._build_tower()

    def _build_tower(self):
        n = self.degree
        coeffs = [self.embed(c) for c in self.f.coeffs]
        tower = {n: coeffs}
        for i in range(n, 1, -1):
            k = i - 2
            self._rels[k] = tuple(self._unwrap_outer(c, k + 1) for c in coeffs[:-1])
            tau = self.generator(k)
            q = [None] * i
            q[i - 1] = coeffs[i]
            for j in range(i - 1, 0, -1):
                q[j - 1] = self.add(coeffs[j], self.mul(tau, q[j]))
            if self.add(coeffs[0], self.mul(tau, q[0])) is not None:
                raise InternalInvariantViolation(f"f_{i}(tau_{i}) does not vanish")
            coeffs = q
            tower[i - 1] = q
        self._tower = tower

    @property
    def spec(self):
        return f"Split({self.base.spec}; {self.f})"

    @property
    def tower(self):
        """``[f_n, f_{n-1}, ..., f_1]`` as monic polynomials over ``A_f``."""
        return [MonicPoly(self, self._tower[i]) for i in range(self.degree, 0, -1)]

    def tower_poly(self, i):
        if not 1 <= i <= self.degree:
            raise IndexOutOfRange(f"tower index {i} outside 1..{self.degree}")
        return MonicPoly(self, self._tower[i])

    def root_payload(self, i):
        if not 1 <= i <= self.degree:
            raise IndexOutOfRange(f"root index {i} outside 1..{self.degree}")
        if i == 1:
            return self.neg(self._tower[1][0])
        return self.generator(i - 2)

    def root(self, i):
        return self.wrap(self.root_payload(i))

    def roots(self):
        return [self.root(i) for i in range(1, self.degree + 1)]

    def gens(self):
        g = super().gens()
        if self.degree >= 1:
            g["tau1"] = self.root(1)
        return g

    def element(self, coords):
        """Element from ``{exps: base element or payload}``."""
        B = self.base
        cs = {}
        for e, c in coords.items():
            c = B.coerce(c) if isinstance(c, (RingElem, int, str)) else c
            if not B.is_zero(c):
                cs[tuple(e)] = c
        return self.wrap(self.from_coords(cs))

    def from_json(self, data):
        if isinstance(data, str):
            data = json.loads(data)
        if data["degree"] != self.degree:
            raise DegreeMismatch(f"serialized degree {data['degree']} != {self.degree}")
        return self.element({tuple(d["exps"]): self.base.parse(d["coeff"]) for d in data["coords"]})

    def constant_of(self, x, what="value"):
        """Base-ring payload of ``x``; non-constant input is a bug upstream."""
        if not self.is_constant(x):
            raise InternalInvariantViolation(f"{what} {self.to_str(x)} is not in the base ring")
        return self.constant_coeff(x)

    def _check(self, x):
        if not isinstance(x, RingElem) or (x.ring is not self and x.ring != self):
            raise AlgebraMismatch(f"{x!r} is not an element of {self}")
        return x

    # -- symmetric group action -----------------------------------------
    def permuted_roots(self, sigma):
        if sigma.n != self.degree:
            raise DegreeMismatch(f"permutation of degree {sigma.n} on an algebra of degree {self.degree}")
        inv = sigma.inverse()
        return [self.root(inv(i)) for i in range(1, self.degree + 1)]

    def action(self, sigma):
        """The automorphism ``phi_sigma`` as an :class:`AlgebraHom` (cached)."""
        hom = self._action_cache.get(sigma.images)
        if hom is None:
            hom = AlgebraHom(self, self, None, self.permuted_roots(sigma))
            self._action_cache[sigma.images] = hom
        return hom

    def action_matrix(self, sigma):
        """Rows: coordinates of ``phi_sigma(b)`` for each basis monomial ``b``."""
        return self.action(sigma).matrix()


def build_splitting_algebra(base, f, max_degree=None):
    return SplitAlgebra(base, f, max_degree)


def root(alg, i):
    return alg.root(i)


class AlgebraHom:
    """The ``A``-algebra map ``A_f -> B`` with ``tau_i -> roots[i-1]``.

    ``coeff_map`` sends base payloads to target payloads; ``None`` means the
    canonical map. The universal-property precondition
    ``prod (t - roots_i) == image of f`` is checked on construction.
    """

    def __init__(self, source, target, coeff_map, roots, check=True):
        if len(roots) != source.degree:
            raise DegreeMismatch(f"expected {source.degree} roots, got {len(roots)}")
        self.source = source
        self.target = target
        if coeff_map is None:
            B = source.base

            def coeff_map(c):
                return target.coerce(B.wrap(c))

        self.coeff_map = coeff_map
        vals = []
        for r in roots:
            if not isinstance(r, RingElem):
                r = target(r)
            elif r.ring is not target and r.ring != target:
                try:
                    r = target(r)
                except RingMismatch:
                    raise RingMismatch(f"root {r!r} does not live in {target}") from None
            vals.append(r.value)
        self.roots = vals
        self._images = None
        if check:
            self._validate()

    def _validate(self):
        T = self.target
        prod = UPoly(T, [T.one])
        for r in self.roots:
            prod = prod * UPoly._raw(T, (T.neg(r), T.one))
        image = UPoly(T, [self.coeff_map(c) for c in self.source.f.coeffs])
        if prod != image:
            raise NotACompleteFactorization(
                f"prod(t - roots) = {prod} differs from the image {image} of f in {T}"
            )

    def _monomial_images(self):
        if self._images is None:
            alg, T = self.source, self.target
            imgs = {}
            for e in alg.basis:
                if not any(e):
                    imgs[e] = T.one
                    continue
                k = next(j for j, m in enumerate(e) if m)
                prev = e[:k] + (e[k] - 1,) + e[k + 1 :]
                imgs[e] = T.mul(imgs[prev], self.roots[k + 1])
            self._images = imgs
        return self._images

    def apply_payload(self, x):
        T = self.target
        imgs = self._monomial_images()
        acc = T.zero
        for e, c in self.source.coords(x).items():
            acc = T.add(acc, T.mul(self.coeff_map(c), imgs[e]))
        return acc

    def __call__(self, x):
        x = self.source._check(x)
        return self.target.wrap(self.apply_payload(x.value))

    def matrix(self):
        """Rows: target coordinates of the images of the source basis (target must be free)."""
        imgs = self._monomial_images()
        T = self.target
        return [T.vector(imgs[e]) for e in self.source.basis]


def eval_hom(alg, target, coeff_map, roots):
    return AlgebraHom(alg, target, coeff_map, roots)


def apply_permutation(sigma, x):
    alg = x.ring
    if not isinstance(alg, SplitAlgebra):
        raise AlgebraMismatch(f"{x!r} is not in a splitting algebra")
    return alg.action(sigma)(x)


def discriminant(alg):
    """``prod_{i>j} (tau_i - tau_j)^2`` as an element of the base ring.

    Cross-checked against ``(-1)^(n(n-1)/2) prod_j f'(tau_j)``.
    """
    n = alg.degree
    if n < 1:
        raise IndexOutOfRange("discriminant needs degree >= 1")
    roots = [alg.root_payload(i) for i in range(1, n + 1)]
    d = alg.one
    for i in range(n):
        for j in range(i):
            diff = alg.sub(roots[i], roots[j])
            d = alg.mul(d, alg.mul(diff, diff))
    value = alg.constant_of(d, "discriminant")
    fprime = alg.f.derivative().change_ring(alg)
    alt = alg.one
    for r in roots:
        alt = alg.mul(alt, fprime(alg.wrap(r)).value)
    if (n * (n - 1) // 2) % 2:
        alt = alg.neg(alt)
    if not alg.eq(alt, d):
        raise InternalInvariantViolation("the two discriminant formulas disagree")
    return alg.base.wrap(value)


class ScalarExtension:
    """``B_{phi f}`` with the coordinatewise transport ``A_f -> B_{phi f}``."""

    def __init__(self, source, algebra, phi):
        self.source = source
        self.algebra = algebra
        self.phi = phi

    def __call__(self, x):
        x = self.source._check(x)
        tgt = self.algebra
        cs = {e: self.phi(c) for e, c in self.source.coords(x.value).items()}
        return tgt.wrap(tgt.from_coords({e: c for e, c in cs.items() if not tgt.base.is_zero(c)}))

    transport = __call__


def extend_scalars(alg, target, phi=None):
    """Base change along a ring map ``phi: A -> target`` (payload map; default canonical).

    ``phi`` is checked to respect the ring operations on the coefficients of
    ``f``; the characteristic of ``A`` must also vanish in the target.
    """
    A = alg.base
    if phi is None:

        def phi(c):
            return target.coerce(A.wrap(c))

    cs = list(alg.f.coeffs)
    if not target.eq(phi(A.one), target.one):
        raise NotAHomomorphism("phi(1) != 1")
    if A.characteristic and not target.is_zero(target.from_int(A.characteristic)):
        raise NotAHomomorphism(f"no ring map from {A} to {target}: {A.characteristic} is nonzero in {target}")
    for a, b in itertools.combinations_with_replacement(cs, 2):
        if not target.eq(phi(A.add(a, b)), target.add(phi(a), phi(b))):
            raise NotAHomomorphism(f"phi is not additive on {A.to_str(a)}, {A.to_str(b)}")
        if not target.eq(phi(A.mul(a, b)), target.mul(phi(a), phi(b))):
            raise NotAHomomorphism(f"phi is not multiplicative on {A.to_str(a)}, {A.to_str(b)}")
    g = MonicPoly(target, [phi(c) for c in cs])
    return ScalarExtension(alg, SplitAlgebra(target, g), phi)


def conjugate_product(alg, x):
    """``prod_{sigma in S_n} (t - phi_sigma(x))`` as a monic polynomial over the base."""
    x = alg._check(x)
    n = alg.degree
    if n < 1:
        raise IndexOutOfRange("conjugate product needs degree >= 1")
    acc = [alg.one]
    for sigma in Permutation.all(n):
        y = alg.action(sigma).apply_payload(x.value)
        # multiply by (t - y)
        nxt = [None] * (len(acc) + 1)
        for k, c in enumerate(acc):
            nxt[k + 1] = alg.add(nxt[k + 1], c)
            nxt[k] = alg.sub(nxt[k], alg.mul(c, y))
        acc = nxt
    return MonicPoly(alg.base, [alg.constant_of(c, "conjugate product coefficient") for c in acc])


def elementary_symmetric(alg, k):
    """``e_k(tau_1, ..., tau_n)`` read off from ``prod (t - tau_i)`` in ``A_f[t]``."""
    n = alg.degree
    acc = [alg.one]
    for i in range(1, n + 1):
        r = alg.root_payload(i)
        nxt = [None] * (len(acc) + 1)
        for j, c in enumerate(acc):
            nxt[j + 1] = alg.add(nxt[j + 1], c)
            nxt[j] = alg.sub(nxt[j], alg.mul(c, r))
        acc = nxt
    c = acc[n - k]
    return alg.wrap(c if k % 2 == 0 else alg.neg(c))
