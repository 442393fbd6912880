"""Univariate polynomials in ``t`` over a ring, with the alternating-sign view.

A monic polynomial of degree n is stored by its plain coefficients
``a_0, ..., a_n`` (``a_n = 1``); the signed coefficients ``f_1, ..., f_n`` are
defined by ``f(t) = t^n - f_1 t^(n-1) + f_2 t^(n-2) - ... + (-1)^n f_n``.
"""

from __future__ import annotations

import random
from typing import NamedTuple

from sympy import primefactors

from . import _upoly
from .errors import IndexOutOfRange, NonMonicInput, NotAField, NotFiniteField, RingMismatch
from .expr import evaluate
from .rings import RingElem, coeff_str, format_terms

FACTOR_SEED = 20021101


class UPoly:
    """Polynomial in ``t`` with coefficients (payloads) in ``ring``."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs=()):
        self.ring = ring
        self.coeffs = tuple(_upoly.trim(ring, [_payload(ring, c) for c in coeffs]))

    @classmethod
    def _raw(cls, ring, coeffs):
        obj = object.__new__(UPoly)
        obj.ring = ring
        obj.coeffs = tuple(coeffs)
        return obj

    @classmethod
    def t(cls, ring):
        return cls._raw(ring, (ring.zero, ring.one))

    @classmethod
    def parse(cls, ring, text):
        names = dict(ring.gens())
        names["t"] = cls.t(ring)
        value = evaluate(text, names, lambda n: cls._raw(ring, _upoly.trim(ring, [ring.from_int(n)])))
        if isinstance(value, RingElem):
            value = cls(ring, [value])
        if not isinstance(value, UPoly):
            raise RingMismatch(f"{text!r} is not a polynomial over {ring}")
        return value

    # -- basic data ------------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.ring.wrap(self.coeffs[-1]) if self.coeffs else self.ring.zero_elem()

    def coeff(self, k):
        if 0 <= k < len(self.coeffs):
            return self.ring.wrap(self.coeffs[k])
        return self.ring.zero_elem()

    def coefficients(self):
        return [self.ring.wrap(c) for c in self.coeffs]

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return bool(self.coeffs) and self.ring.eq(self.coeffs[-1], self.ring.one)

    # -- arithmetic ------------------------------------------------------
    def _other(self, other):
        if isinstance(other, UPoly):
            if other.ring is self.ring or other.ring == self.ring:
                return other.coeffs
            return NotImplemented
        try:
            c = self.ring.coerce(other)
        except RingMismatch:
            return NotImplemented
        return () if self.ring.is_zero(c) else (c,)

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return UPoly._raw(self.ring, _upoly.add(self.ring, self.coeffs, o))

    __radd__ = __add__

    def __neg__(self):
        return UPoly._raw(self.ring, _upoly.neg(self.ring, self.coeffs))

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return UPoly._raw(self.ring, _upoly.sub(self.ring, self.coeffs, o))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return UPoly._raw(self.ring, _upoly.mul(self.ring, self.coeffs, o))

    __rmul__ = __mul__

    def __pow__(self, e):
        result = UPoly._raw(self.ring, (self.ring.one,))
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        q, r = _upoly.divmod_(self.ring, self.coeffs, o)
        return UPoly._raw(self.ring, q), UPoly._raw(self.ring, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return len(o) == len(self.coeffs) and all(self.ring.eq(a, b) for a, b in zip(self.coeffs, o))

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        """Evaluate at ``x``, which may live in an extension of the coefficient ring."""
        if not isinstance(x, RingElem):
            x = self.ring(x)
        R = x.ring
        cs = [R.coerce(self.ring.wrap(c)) for c in self.coeffs]
        return R.wrap(_upoly.evaluate(R, cs, x.value))

    def derivative(self):
        return UPoly._raw(self.ring, _upoly.derivative(self.ring, self.coeffs))

    def change_ring(self, R):
        """Coefficientwise image under the canonical map into ``R``."""
        return UPoly(R, [R.coerce(self.ring.wrap(c)) for c in self.coeffs])

    def map_coeffs(self, fn, R):
        """Image under a payload map ``fn`` into ``R``."""
        return UPoly(R, [fn(c) for c in self.coeffs])

    def monic(self):
        if not self.ring.is_field:
            raise NotAField(f"{self.ring} is not a field")
        return UPoly._raw(self.ring, _upoly.monic(self.ring, self.coeffs))

    def as_monic(self):
        return MonicPoly(self.ring, self.coeffs)

    def __str__(self):
        R = self.ring
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if R.is_zero(c):
                continue
            terms.append((coeff_str(R, c), "" if k == 0 else ("t" if k == 1 else f"t^{k}")))
        return format_terms(terms)

    def __repr__(self):
        return f"UPoly({self.ring}, {str(self)!r})"


class MonicPoly(UPoly):
    """Monic polynomial; degree 0 (``f = 1``) is allowed."""

    __slots__ = ()

    def __init__(self, ring, coeffs):
        super().__init__(ring, coeffs)
        if not self.is_monic():
            raise NonMonicInput(f"{UPoly._raw(ring, self.coeffs)} is not monic")

    @classmethod
    def parse(cls, ring, text):
        p = UPoly.parse(ring, text)
        return cls(ring, p.coeffs)

    @classmethod
    def from_signed(cls, ring, signed):
        """Build ``t^n - f_1 t^(n-1) + ... + (-1)^n f_n`` from ``[f_1, ..., f_n]``."""
        n = len(signed)
        coeffs = [ring.zero] * (n + 1)
        coeffs[n] = ring.one
        for k, fk in enumerate(signed, start=1):
            c = _payload(ring, fk)
            coeffs[n - k] = ring.neg(c) if k % 2 else c
        return cls(ring, coeffs)

    @property
    def plain_coeffs(self):
        return self.coefficients()

    def signed_coefficient(self, k):
        n = self.degree
        if not 1 <= k <= n:
            raise IndexOutOfRange(f"signed coefficient index {k} outside 1..{n}")
        c = self.coeff(n - k)
        return -c if k % 2 else c

    def signed_coefficients(self):
        return [self.signed_coefficient(k) for k in range(1, self.degree + 1)]

    def change_ring(self, R):
        return MonicPoly(R, [R.coerce(self.ring.wrap(c)) for c in self.coeffs])


def _payload(ring, c):
    if isinstance(c, RingElem) and (c.ring is ring or c.ring == ring):
        return c.value
    if isinstance(c, (RingElem, int, str)):
        return ring.coerce(c)
    return c


def signed_coefficient(f, k):
    return f.signed_coefficient(k)


def synthetic_divide(f, r):
    """Divide ``f`` by ``t - r``; return ``(quotient, remainder)``.

    ``r`` may live in any ring into which the coefficients of ``f`` map; the
    quotient is a monic polynomial over that ring and the remainder is ``f(r)``.
    """
    if not isinstance(r, RingElem):
        r = f.ring(r)
    R = r.ring
    cs = [R.coerce(f.ring.wrap(c)) for c in f.coeffs]
    n = len(cs) - 1
    if n < 1:
        raise IndexOutOfRange("cannot divide a constant by t - r")
    q = [None] * n
    q[n - 1] = cs[n]
    for k in range(n - 1, 0, -1):
        q[k - 1] = R.add(cs[k], R.mul(r.value, q[k]))
    remainder = R.add(cs[0], R.mul(r.value, q[0]))
    return MonicPoly(R, q), R.wrap(remainder)


def derivative(f):
    return f.derivative()


class Coprimality(NamedTuple):
    coprime: bool
    u: UPoly | None
    v: UPoly | None


def are_mutually_prime(f, g):
    """Over a field: decide ``gcd(f, g) = 1``, certified by ``u*f + v*g = 1``."""
    R = f.ring
    if not R.is_field:
        raise NotAField(f"coprimality is only decided over fields, not {R}")
    gcd, s, t = _upoly.xgcd(R, f.coeffs, g.coeffs)
    if len(gcd) != 1:
        return Coprimality(False, None, None)
    u, v = UPoly._raw(R, s), UPoly._raw(R, t)
    assert (u * f + v * g) == 1
    return Coprimality(True, u, v)


# -- finite fields -----------------------------------------------------------


def _require_finite_field(R):
    if not (R.is_field and R.is_finite):
        raise NotFiniteField(f"{R} is not a finite field")


def _frobenius_powers(F, f, times):
    """``t^(q^times) mod f`` computed by repeated q-th powers."""
    q = F.cardinality
    h = _upoly.rem(F, [F.zero, F.one], f)
    for _ in range(times):
        h = _upoly.powmod(F, h, q, f)
    return h


def is_irreducible_dense(F, f):
    """Rabin's test for a monic dense polynomial over a finite field."""
    f = _upoly.trim(F, f)
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    t = [F.zero, F.one]
    if _upoly.sub(F, _frobenius_powers(F, f, n), t):
        return False
    for r in primefactors(n):
        h = _frobenius_powers(F, f, n // r)
        if len(_upoly.gcd(F, f, _upoly.sub(F, h, t))) != 1:
            return False
    return True


def _pth_root_poly(F, f):
    p, q = F.characteristic, F.cardinality
    return [F.pow(f[i], q // p) for i in range(0, len(f), p)]


def _squarefree(F, f):
    out = []
    p = F.characteristic
    fp = _upoly.derivative(F, f)
    if fp:
        c = _upoly.gcd(F, f, fp)
        w = _upoly.divmod_(F, f, c)[0]
        i = 1
        while len(w) > 1:
            y = _upoly.gcd(F, w, c)
            z = _upoly.divmod_(F, w, y)[0]
            if len(z) > 1:
                out.append((z, i))
            i += 1
            w = y
            c = _upoly.divmod_(F, c, y)[0]
        if len(c) > 1:
            out += [(g, e * p) for g, e in _squarefree(F, _pth_root_poly(F, c))]
    elif len(f) > 1:
        out += [(g, e * p) for g, e in _squarefree(F, _pth_root_poly(F, f))]
    return out


def _distinct_degree(F, f):
    out = []
    t = [F.zero, F.one]
    h = t
    d = 1
    q = F.cardinality
    while len(f) - 1 >= 2 * d:
        h = _upoly.powmod(F, h, q, f)
        g = _upoly.gcd(F, f, _upoly.sub(F, h, t))
        if len(g) > 1:
            out.append((g, d))
            f = _upoly.divmod_(F, f, g)[0]
            h = _upoly.rem(F, h, f)
        d += 1
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def _equal_degree(F, f, d, rng):
    n = len(f) - 1
    if n == d:
        return [f]
    q, p = F.cardinality, F.characteristic
    while True:
        a = _upoly.trim(F, [F.random(rng) for _ in range(n)])
        if len(a) < 2:
            continue
        if p != 2:
            b = _upoly.sub(F, _upoly.powmod(F, a, (q**d - 1) // 2, f), [F.one])
        else:
            k = q.bit_length() - 1
            term = b = _upoly.rem(F, a, f)
            for _ in range(k * d - 1):
                term = _upoly.mulmod(F, term, term, f)
                b = _upoly.add(F, b, term)
        g = _upoly.gcd(F, f, b)
        if 1 < len(g) < len(f):
            rest = _upoly.divmod_(F, f, g)[0]
            return _equal_degree(F, g, d, rng) + _equal_degree(F, rest, d, rng)


def factor_dense(F, f, seed=FACTOR_SEED):
    """Factor a monic dense polynomial; returns ``[(factor, multiplicity)]``."""
    rng = random.Random(seed)
    out = []
    for g, e in _squarefree(F, list(f)):
        for h, d in _distinct_degree(F, g):
            for k in _equal_degree(F, h, d, rng):
                out.append((k, e))
    out.sort(key=lambda fe: (len(fe[0]), [F.sort_key(c) for c in reversed(fe[0])], fe[1]))
    return out


def factor_over_finite_field(f, seed=FACTOR_SEED):
    """Irreducible factorization ``[(MonicPoly, multiplicity)]`` over a finite field."""
    F = f.ring
    _require_finite_field(F)
    if not f.is_monic():
        raise NonMonicInput("factorization expects a monic polynomial")
    return [(MonicPoly(F, g), e) for g, e in factor_dense(F, f.coeffs, seed)]


def is_irreducible(f):
    _require_finite_field(f.ring)
    return is_irreducible_dense(f.ring, f.coeffs)
