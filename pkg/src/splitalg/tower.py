"""Free algebras presented by a tower of monic relations.

A :class:`TowerRing` over ``A`` has generators ``x_0, ..., x_{L-1}`` where
``x_k`` satisfies a monic relation of degree ``d_k`` whose coefficients only
involve ``x_{k+1}, ..., x_{L-1}``. The monomials ``x^e`` with ``e_k < d_k`` form
an ``A``-basis, so every element has a unique normal form.

Payloads are nested tuples: at level ``k`` a tuple of at most ``d_k`` level
``k+1`` payloads (low degree first, trailing zeros trimmed); at level ``L`` a
nonzero base payload. Zero is ``None`` at every level.
"""

from __future__ import annotations

import itertools
from math import prod

from . import _upoly
from .errors import MalformedSpec, ReducibleModulus, RingMismatch
from .rings import ENUMERATION_CAP, Ring, Verdict, coeff_str, format_terms, monomial_str


def graded_lex_key(exps):
    return (sum(exps), tuple(-e for e in exps))


class TowerRing(Ring):
    """``A[x_0, ..., x_{L-1}]`` modulo a tower of monic relations (``x_0`` outermost)."""

    def __init__(self, base, names, degrees, relations=None):
        if len(names) != len(degrees) or any(d < 1 for d in degrees):
            raise MalformedSpec("bad tower shape")
        self.base = base
        self.names = tuple(names)
        self.degrees = tuple(degrees)
        self.L = len(degrees)
        self.rank = prod(self.degrees)
        self._rels = list(relations) if relations is not None else [None] * self.L
        self.characteristic = base.characteristic
        if base.is_finite:
            self.cardinality = base.cardinality ** self.rank
        self.zero = None
        self.one = self._const(base.one, 0)
        self._basis = None

    @property
    def spec(self):
        rels = []
        for k, rel in enumerate(self._rels):
            rels.append(f"{self.names[k]}^{self.degrees[k]}+{self._level_str(rel, k + 1)}")
        return f"Tower({self.base.spec}; {'; '.join(rels)})"

    def _level_str(self, rel, k):
        if rel is None:
            return "?"
        return "[" + ",".join("0" if c is None else self._nested_str(c, k) for c in rel) + "]"

    def _nested_str(self, x, k):
        terms = [(coeff_str(self.base, c), monomial_str(self.names[k:], e)) for e, c in self._flat_items(x, k)]
        return format_terms(terms)

    # -- nested arithmetic ----------------------------------------------
    def _const(self, c, k):
        if self.base.is_zero(c):
            return None
        x = c
        for _ in range(self.L - k):
            x = (x,)
        return x

    def _add(self, x, y, k):
        if x is None:
            return y
        if y is None:
            return x
        if k == self.L:
            s = self.base.add(x, y)
            return None if self.base.is_zero(s) else s
        if len(x) < len(y):
            x, y = y, x
        out = list(x)
        k1 = k + 1
        for i, c in enumerate(y):
            if c is not None:
                out[i] = self._add(out[i], c, k1)
        while out and out[-1] is None:
            out.pop()
        return tuple(out) if out else None

    def _neg(self, x, k):
        if x is None:
            return None
        if k == self.L:
            return self.base.neg(x)
        return tuple(None if c is None else self._neg(c, k + 1) for c in x)

    def _sub(self, x, y, k):
        return self._add(x, self._neg(y, k), k)

    def _scale(self, x, c, k):
        if x is None:
            return None
        if k == self.L:
            p = self.base.mul(x, c)
            return None if self.base.is_zero(p) else p
        out = [None if e is None else self._scale(e, c, k + 1) for e in x]
        while out and out[-1] is None:
            out.pop()
        return tuple(out) if out else None

    def _mul(self, x, y, k):
        if x is None or y is None:
            return None
        if k == self.L:
            p = self.base.mul(x, y)
            return None if self.base.is_zero(p) else p
        k1 = k + 1
        if len(x) == 1 and len(y) == 1:
            p = self._mul(x[0], y[0], k1)
            return None if p is None else (p,)
        z = [None] * (len(x) + len(y) - 1)
        for i, a in enumerate(x):
            if a is None:
                continue
            for j, b in enumerate(y):
                if b is None:
                    continue
                p = self._mul(a, b, k1)
                if p is not None:
                    z[i + j] = self._add(z[i + j], p, k1)
        d = self.degrees[k]
        if len(z) > d:
            rel = self._rels[k]
            for m in range(len(z) - 1, d - 1, -1):
                c = z[m]
                if c is None:
                    continue
                z[m] = None
                for l, r in enumerate(rel):
                    if r is not None:
                        z[m - d + l] = self._sub(z[m - d + l], self._mul(c, r, k1), k1)
            del z[d:]
        while z and z[-1] is None:
            z.pop()
        return tuple(z) if z else None

    def _map_leaves(self, x, fn, k=0):
        """Apply ``fn`` to every base coefficient, re-trimming zeros."""
        if x is None:
            return None
        if k == self.L:
            return fn(x)
        out = [self._map_leaves(c, fn, k + 1) for c in x]
        while out and out[-1] is None:
            out.pop()
        return tuple(out) if out else None

    def _flat_items(self, x, k=0, prefix=()):
        if x is None:
            return
        if k == self.L:
            yield prefix, x
            return
        for i, c in enumerate(x):
            if c is not None:
                yield from self._flat_items(c, k + 1, prefix + (i,))

    def _wrap_outer(self, x, k):
        """Embed a level-``k`` payload as a full element."""
        if x is None:
            return None
        for _ in range(k):
            x = (x,)
        return x

    def _unwrap_outer(self, x, k):
        """Inverse of :meth:`_wrap_outer`; ``x`` must not involve outer generators."""
        for _ in range(k):
            if x is None:
                return None
            if len(x) != 1:
                raise ValueError("element involves outer generators")
            x = x[0]
        return x

    # -- Ring interface --------------------------------------------------
    def add(self, a, b):
        return self._add(a, b, 0)

    def neg(self, a):
        return self._neg(a, 0)

    def sub(self, a, b):
        return self._add(a, self._neg(b, 0), 0)

    def mul(self, a, b):
        return self._mul(a, b, 0)

    def is_zero(self, a):
        return a is None

    def from_int(self, n):
        return self._const(self.base.from_int(n), 0)

    def embed(self, b):
        return self._const(b, 0)

    def scale(self, a, c):
        """Multiply by a base-ring payload."""
        return self._scale(a, c, 0)

    @property
    def basis(self):
        if self._basis is None:
            exps = itertools.product(*(range(d) for d in self.degrees))
            self._basis = sorted(exps, key=graded_lex_key)
        return self._basis

    def coords(self, a):
        """Flat ``{exps: base payload}`` map of the normal form."""
        return dict(self._flat_items(a))

    def from_coords(self, coords):
        """Build a payload from a ``{exps: base payload}`` map (exps in range)."""
        acc = None
        for e, c in coords.items():
            if any(not 0 <= m < d for m, d in zip(e, self.degrees)) or len(e) != self.L:
                raise ValueError(f"exponent vector {e} outside the basis")
            acc = self._add(acc, self._monomial(e, c), 0)
        return acc

    def _monomial(self, exps, c):
        if self.base.is_zero(c):
            return None
        x = c
        for m in reversed(exps):
            x = (None,) * m + (x,)
        return x

    def vector(self, a):
        """Coordinates as a list aligned with :attr:`basis`."""
        cs = self.coords(a)
        z = self.base.zero
        return [cs.get(e, z) for e in self.basis]

    def from_vector(self, vec):
        return self.from_coords({e: c for e, c in zip(self.basis, vec) if not self.base.is_zero(c)})

    def constant_coeff(self, a):
        return self.coords(a).get((0,) * self.L, self.base.zero)

    def is_constant(self, a):
        zero = (0,) * self.L
        return all(e == zero for e in self.coords(a))

    def generator(self, k):
        if self.degrees[k] == 1:
            x = self._neg(self._rels[k][0], k + 1)
            x = None if x is None else (x,)
        else:
            x = (None, self._const(self.base.one, k + 1))
        return self._wrap_outer(x, k)

    def gens(self):
        g = super().gens()
        for k, n in enumerate(self.names):
            g[n] = self.wrap(self.generator(k))
        return g

    def to_str(self, a):
        items = sorted(self._flat_items(a), key=lambda t: graded_lex_key(t[0]), reverse=True)
        return format_terms([(coeff_str(self.base, c), monomial_str(self.names, e)) for e, c in items])

    def sort_key(self, a):
        return tuple((e, self.base.sort_key(c)) for e, c in sorted(self._flat_items(a)))

    def elements(self):
        basis = self.basis
        for combo in itertools.product(list(self.base.elements()), repeat=len(basis)):
            yield self.from_vector(combo)

    def random(self, rng, density=1.0):
        coords = {}
        for e in self.basis:
            if rng.random() < density:
                coords[e] = self.base.random(rng)
        return self.from_coords({e: c for e, c in coords.items() if not self.base.is_zero(c)})

    def multiplication_matrix(self, a):
        """Rows: coordinates of ``a * b`` for each basis monomial ``b``."""
        rows = []
        for e in self.basis:
            rows.append(self.vector(self._mul(a, self._monomial(e, self.base.one), 0)))
        return rows

    def regularity(self, a):
        if a is not None and self.is_constant(a):
            verdict, w = self.base.regularity(self.constant_coeff(a))
            return verdict, None if w is None else self.embed(w)
        if self.is_finite and self.cardinality <= ENUMERATION_CAP:
            return super().regularity(a)
        if self.base.is_field:
            from .linalg import left_kernel

            ker = left_kernel(self.multiplication_matrix(a), self.base)
            if ker:
                return Verdict.ZERO_DIVISOR_OR_ZERO, self.from_vector(ker[0])
            return Verdict.REGULAR, None
        return Verdict.UNKNOWN, None

    def unit_inverse(self, a):
        if a is None:
            return False, None
        if self.is_constant(a):
            ok, inv = self.base.unit_inverse(self.constant_coeff(a))
            if ok:
                return True, self.embed(inv)
            if self.base.is_field:
                return False, None
        if self.base.is_field:
            from .linalg import solve_left

            sol = solve_left(self.multiplication_matrix(a), self.vector(self.one), self.base)
            return (False, None) if sol is None else (True, self.from_vector(sol))
        return super().unit_inverse(a)


class QuotientRing(TowerRing):
    """``B[u]/(g)`` for a monic ``g`` over ``B``."""

    def __init__(self, base, var, modulus):
        modulus = _upoly.trim(base, modulus)
        if not modulus or not base.eq(modulus[-1], base.one):
            raise MalformedSpec("quotient modulus must be monic")
        if len(modulus) < 2:
            raise MalformedSpec("quotient modulus must have positive degree")
        self.var = var
        self.modulus = list(modulus)
        rel = tuple(None if base.is_zero(c) else c for c in modulus[:-1])
        super().__init__(base, [var], [len(modulus) - 1], [rel])

    @property
    def spec(self):
        from .rings import PolynomialRing

        pr = PolynomialRing(self.base, [self.var])
        return f"Quot({pr.spec}, {pr.to_str(pr.from_dense(self.modulus))})"

    def dense(self, a):
        B = self.base
        return [] if a is None else [B.zero if c is None else c for c in a]

    def from_dense(self, coeffs):
        r = _upoly.rem(self.base, _upoly.trim(self.base, coeffs), self.modulus)
        out = tuple(None if self.base.is_zero(c) else c for c in r)
        return out if out else None

    def embed(self, b):
        return self._const(b, 0)

    def coerce_elem(self, x):
        from .rings import PolynomialRing

        if isinstance(x.ring, PolynomialRing) and x.ring.names == (self.var,) and x.ring.base == self.base:
            return self.from_dense(x.ring.dense(x.value))
        return super().coerce_elem(x)

    def regularity(self, a):
        if self.base.is_field:
            B = self.base
            g = _upoly.gcd(B, self.dense(a), self.modulus)
            if len(g) == 1:
                return Verdict.REGULAR, None
            return Verdict.ZERO_DIVISOR_OR_ZERO, self.from_dense(_upoly.divmod_(B, self.modulus, g)[0])
        return super().regularity(a)

    def unit_inverse(self, a):
        if self.base.is_field:
            B = self.base
            g, s, _ = _upoly.xgcd(B, self.dense(a), self.modulus)
            if len(g) != 1:
                return False, None
            return True, self.from_dense(s)
        return super().unit_inverse(a)


class ExtensionField(QuotientRing):
    """``F[u]/(g)`` for an irreducible monic ``g`` over a field ``F``."""

    is_field = True
    is_domain = True

    def __init__(self, base, var, modulus, check=True):
        if not base.is_field:
            raise MalformedSpec("extension fields need a field base")
        super().__init__(base, var, modulus)
        if check and base.is_finite:
            from .poly import is_irreducible_dense

            if not is_irreducible_dense(base, self.modulus):
                raise ReducibleModulus(f"modulus of {self.spec} is reducible")

    @property
    def order(self):
        return self.cardinality

    def regularity(self, a):
        return Ring.regularity(self, a)


class FiniteField(ExtensionField):
    """GF(p^k) presented over F_p with generator ``a``."""

    def __init__(self, p, k, modulus=None):
        from .rings import PrimeField

        Fp = PrimeField(p)
        if not isinstance(k, int) or k < 1:
            raise MalformedSpec(f"GF degree must be >= 1, got {k!r}")
        self.p, self.k = p, k
        self._explicit = modulus is not None
        if modulus is None:
            modulus = default_modulus(Fp, k)
        if len(_upoly.trim(Fp, modulus)) - 1 != k:
            raise MalformedSpec(f"GF({p},{k}) modulus must have degree {k}")
        super().__init__(Fp, "a", modulus)

    @property
    def spec(self):
        if not self._explicit:
            return f"GF({self.p},{self.k})"
        from .rings import PolynomialRing

        pr = PolynomialRing(self.base, ["a"])
        return f"GF({self.p},{self.k},{pr.to_str(pr.from_dense(self.modulus))})"

    def coerce_elem(self, x):
        if isinstance(x.ring, FiniteField) and x.ring == self:
            return x.value
        return super().coerce_elem(x)


def default_modulus(F, k):
    """First monic irreducible of degree ``k`` over the finite field ``F`` (enumeration order)."""
    from .poly import is_irreducible_dense

    elems = list(F.elements())
    if k == 1:
        return [F.zero, F.one]
    for tail in itertools.product(elems, repeat=k):
        cand = list(reversed(tail)) + [F.one]
        if F.is_zero(cand[0]):
            continue
        if is_irreducible_dense(F, cand):
            return cand
    raise RingMismatch("no irreducible polynomial found")
