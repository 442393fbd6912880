"""Exact commutative rings with unity.

Each :class:`Ring` works on *payloads*: canonical, hashable, immutable Python
values (ints, Fractions, tuples). Heavy algorithms call the payload methods
(``add``, ``mul``, ...) directly; user-facing code uses :class:`RingElem`,
a thin wrapper with operator overloading.
"""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from sympy import isprime

from . import _upoly
from .errors import (
    ElementRingMismatch,
    InfiniteRing,
    MalformedSpec,
    NonPrimeModulus,
    RingMismatch,
    UndecidableForRing,
)
from .expr import evaluate

# Finite rings up to this size are searched exhaustively for zero-divisor witnesses.
ENUMERATION_CAP = 4096

_ATOMIC = re.compile(r"^[\w/.^*]+$")


def _atomic(s):
    return bool(_ATOMIC.match(s)) or _wrapped(s)


def _wrapped(s):
    """True for ``(...)`` where the outer parentheses match each other."""
    if not (s.startswith("(") and s.endswith(")")):
        return False
    depth = 0
    for i, ch in enumerate(s):
        depth += ch == "("
        depth -= ch == ")"
        if depth == 0 and i < len(s) - 1:
            return False
    return True


def coeff_str(R, c):
    """``R.to_str(c)``, except that the identity always prints as ``1``."""
    return "1" if R.eq(c, R.one) else R.to_str(c)


def format_terms(terms):
    """Join ``(coefficient string, monomial string)`` pairs into ``a*x - b``."""
    parts = []
    for c, m in terms:
        negative = False
        if c.startswith("-") and _atomic(c[1:]):
            negative, c = True, c[1:]
        elif not _atomic(c):
            c = f"({c})"
        if m:
            body = m if c == "1" else f"{c}*{m}"
        else:
            body = c
        parts.append((negative, body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] else "") + parts[0][1]
    for negative, body in parts[1:]:
        out += (" - " if negative else " + ") + body
    return out


def monomial_str(names, exps):
    return "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(names, exps) if e)


class Verdict(enum.Enum):
    REGULAR = "Regular"
    ZERO_DIVISOR_OR_ZERO = "ZeroDivisorOrZero"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Regularity:
    """Outcome of a regularity test for ``element``.

    A witness ``y`` is a nonzero element with ``element * y == 0``.
    """

    element: RingElem
    verdict: Verdict
    witness: RingElem | None = None

    def __post_init__(self):
        if self.witness is not None:
            if self.witness.is_zero() or not (self.element * self.witness).is_zero():
                raise ValueError("invalid zero-divisor witness")

    @property
    def is_regular(self):
        return self.verdict is Verdict.REGULAR

    def __str__(self):
        if self.witness is None:
            return self.verdict.value
        return f"{self.verdict.value} (witness {self.witness})"


class RingElem:
    """An element of ``ring``; ``value`` is the canonical payload."""

    __slots__ = ("ring", "value")

    def __init__(self, ring, value):
        self.ring = ring
        self.value = value

    def _coerce(self, other):
        if isinstance(other, RingElem):
            if other.ring is self.ring or other.ring == self.ring:
                return other.value
        elif not isinstance(other, (int, Fraction)) or isinstance(other, bool):
            return NotImplemented
        try:
            return self.ring.coerce(other)
        except RingMismatch:
            return NotImplemented

    def _wrap(self, v):
        return self.ring.element_class(self.ring, v)

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.ring.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.ring.sub(self.value, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.ring.sub(o, self.value))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._wrap(self.ring.mul(self.value, o))

    __rmul__ = __mul__

    def __neg__(self):
        return self._wrap(self.ring.neg(self.value))

    def __pos__(self):
        return self

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a non-negative int")
        return self._wrap(self.ring.pow(self.value, e))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        ok, inv = self.ring.unit_inverse(o)
        if not ok:
            raise ZeroDivisionError(f"{self.ring.to_str(o)} is not a unit in {self.ring}")
        return self._wrap(self.ring.mul(self.value, inv))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self._wrap(o) / self

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.ring.eq(self.value, o)

    def __hash__(self):
        return hash(self.value)

    def __bool__(self):
        return not self.ring.is_zero(self.value)

    def is_zero(self):
        return self.ring.is_zero(self.value)

    def inverse(self):
        return self.ring.one_elem() / self

    def __str__(self):
        return self.ring.to_str(self.value)

    def __repr__(self):
        return f"{self.ring}({self.ring.to_str(self.value)!r})"


class Ring:
    """Base class; subclasses define payload arithmetic and metadata."""

    element_class = RingElem
    is_field = False
    is_domain = False
    characteristic = 0
    cardinality = None
    base = None
    zero = 0
    one = 1

    # -- identity --------------------------------------------------------
    @property
    def spec(self):
        raise NotImplementedError

    def __str__(self):
        return self.spec

    def __repr__(self):
        return f"<ring {self.spec}>"

    def __eq__(self, other):
        return self is other or (isinstance(other, Ring) and type(self) is type(other) and self.spec == other.spec)

    def __hash__(self):
        return hash(self.spec)

    @property
    def is_finite(self):
        return self.cardinality is not None

    # -- payload arithmetic ---------------------------------------------
    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        raise NotImplementedError

    def eq(self, a, b):
        return a == b

    def is_zero(self, a):
        return self.eq(a, self.zero)

    def from_int(self, n):
        raise NotImplementedError

    def pow(self, a, e):
        result, base = self.one, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def inv(self, a):
        ok, inv = self.unit_inverse(a)
        if not ok:
            raise ZeroDivisionError(f"{self.to_str(a)} is not invertible in {self}")
        return inv

    def unit_inverse(self, a):
        """Return ``(True, inverse)`` or ``(False, None)``."""
        if self.is_finite and self.cardinality <= ENUMERATION_CAP:
            inv = next((y for y in self.elements() if self.eq(self.mul(a, y), self.one)), None)
            return (False, None) if inv is None else (True, inv)
        raise UndecidableForRing(f"unit test not available for {self}")

    def regularity(self, a):
        """Return ``(verdict, witness payload or None)``."""
        if self.is_domain:
            if self.is_zero(a):
                return Verdict.ZERO_DIVISOR_OR_ZERO, self.one
            return Verdict.REGULAR, None
        if self.is_finite and self.cardinality <= ENUMERATION_CAP:
            for y in self.elements():
                if not self.is_zero(y) and self.is_zero(self.mul(a, y)):
                    return Verdict.ZERO_DIVISOR_OR_ZERO, y
            return Verdict.REGULAR, None
        return Verdict.UNKNOWN, None

    def to_str(self, a):
        return str(a)

    def elements(self):
        raise InfiniteRing(f"{self} is infinite")

    def random(self, rng):
        raise NotImplementedError

    def gens(self):
        """Named generators, including those of base rings."""
        if self.base is None:
            return {}
        return {k: self(v) for k, v in self.base.gens().items()}

    def sort_key(self, a):
        return self.to_str(a)

    # -- conversions -----------------------------------------------------
    def __call__(self, x=0):
        return self.element_class(self, self.coerce(x))

    def wrap(self, payload):
        return self.element_class(self, payload)

    def one_elem(self):
        return self.wrap(self.one)

    def zero_elem(self):
        return self.wrap(self.zero)

    def parse(self, text):
        return self.wrap(self.coerce(evaluate(text, self.gens(), self)))

    def coerce(self, x):
        if isinstance(x, bool):
            raise RingMismatch("bool is not a ring element")
        if isinstance(x, int):
            return self.from_int(x)
        if isinstance(x, Fraction):
            return self.from_fraction(x)
        if isinstance(x, str):
            return self.parse(x).value
        if isinstance(x, RingElem):
            if x.ring is self or x.ring == self:
                return x.value
            return self.coerce_elem(x)
        raise RingMismatch(f"cannot interpret {x!r} in {self}")

    def from_fraction(self, q):
        num, den = self.from_int(q.numerator), self.from_int(q.denominator)
        ok, inv = self.unit_inverse(den)
        if not ok:
            raise RingMismatch(f"{q} is not defined in {self}")
        return self.mul(num, inv)

    def coerce_elem(self, x):
        if isinstance(x.ring, Integers):
            return self.from_int(x.value)
        if isinstance(x.ring, Rationals) and self.characteristic == 0:
            return self.from_fraction(x.value)
        if self.base is not None:
            try:
                b = self.base.coerce(x)
            except RingMismatch:
                pass
            else:
                return self.embed(b)
        raise RingMismatch(f"cannot map {x.ring} into {self}")

    def embed(self, b):
        """Image of a payload of ``self.base``."""
        raise RingMismatch(f"{self} has no base embedding")

    def base_chain(self):
        r, out = self, []
        while r is not None:
            out.append(r)
            r = r.base
        return out


class Integers(Ring):
    is_domain = True

    @property
    def spec(self):
        return "Z"

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_zero(self, a):
        return a == 0

    def from_int(self, n):
        return n

    def from_fraction(self, q):
        if q.denominator != 1:
            raise RingMismatch(f"{q} is not an integer")
        return q.numerator

    def unit_inverse(self, a):
        return (True, a) if a in (1, -1) else (False, None)

    def random(self, rng):
        return rng.randint(-9, 9)

    def sort_key(self, a):
        return a


class Rationals(Ring):
    is_domain = True
    is_field = True
    zero = Fraction(0)
    one = Fraction(1)

    @property
    def spec(self):
        return "Q"

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_zero(self, a):
        return a == 0

    def from_int(self, n):
        return Fraction(n)

    def from_fraction(self, q):
        return q

    def unit_inverse(self, a):
        return (False, None) if a == 0 else (True, 1 / a)

    def random(self, rng):
        return Fraction(rng.randint(-9, 9), rng.randint(1, 4))

    def sort_key(self, a):
        return a


class IntegersMod(Ring):
    """Z/m with residues in ``[0, m)``."""

    def __init__(self, m):
        if not isinstance(m, int) or m < 2:
            raise MalformedSpec(f"Zmod needs m >= 2, got {m!r}")
        self.m = m
        self.characteristic = m
        self.cardinality = m
        self.is_field = self.is_domain = isprime(m)

    @property
    def spec(self):
        return f"Zmod({self.m})"

    def add(self, a, b):
        return (a + b) % self.m

    def sub(self, a, b):
        return (a - b) % self.m

    def neg(self, a):
        return -a % self.m

    def mul(self, a, b):
        return a * b % self.m

    def is_zero(self, a):
        return a == 0

    def from_int(self, n):
        return n % self.m

    def pow(self, a, e):
        return pow(a, e, self.m)

    def unit_inverse(self, a):
        if gcd(a, self.m) != 1:
            return False, None
        return True, pow(a, -1, self.m)

    def regularity(self, a):
        g = gcd(a, self.m)
        if g == 1:
            return Verdict.REGULAR, None
        return Verdict.ZERO_DIVISOR_OR_ZERO, self.m // g

    def elements(self):
        return iter(range(self.m))

    def random(self, rng):
        return rng.randrange(self.m)

    def coerce_elem(self, x):
        if isinstance(x.ring, IntegersMod) and x.ring.m % self.m == 0:
            return x.value % self.m
        return super().coerce_elem(x)

    def sort_key(self, a):
        return a


class PrimeField(IntegersMod):
    def __init__(self, p):
        if not isinstance(p, int) or not isprime(p):
            raise NonPrimeModulus(f"Fp needs a prime, got {p!r}")
        super().__init__(p)

    @property
    def spec(self):
        return f"Fp({self.m})"

    @property
    def order(self):
        return self.m


class PolynomialRing(Ring):
    """Multivariate polynomials; payload is a sorted tuple of ``(exps, coeff)``."""

    zero = ()

    def __init__(self, base, names):
        names = tuple(names)
        if not names or len(set(names)) != len(names):
            raise MalformedSpec(f"bad variable list {names!r}")
        self.base = base
        self.names = names
        self.nvars = len(names)
        self.characteristic = base.characteristic
        self.is_domain = base.is_domain
        self._zero_exps = (0,) * self.nvars
        self.one = ((self._zero_exps, base.one),)

    @property
    def spec(self):
        return f"Poly({self.base.spec}; {', '.join(self.names)})"

    def _pack(self, d):
        B = self.base
        return tuple(sorted((e, c) for e, c in d.items() if not B.is_zero(c)))

    def add(self, a, b):
        B = self.base
        d = dict(a)
        for e, c in b:
            d[e] = B.add(d[e], c) if e in d else c
        return self._pack(d)

    def neg(self, a):
        return tuple((e, self.base.neg(c)) for e, c in a)

    def mul(self, a, b):
        B = self.base
        d = {}
        for e1, c1 in a:
            for e2, c2 in b:
                e = tuple(x + y for x, y in zip(e1, e2))
                p = B.mul(c1, c2)
                d[e] = B.add(d[e], p) if e in d else p
        return self._pack(d)

    def is_zero(self, a):
        return not a

    def from_int(self, n):
        return self.embed(self.base.from_int(n))

    def embed(self, b):
        return () if self.base.is_zero(b) else ((self._zero_exps, b),)

    def monomial(self, exps, coeff=None):
        return self._pack({tuple(exps): self.base.one if coeff is None else coeff})

    def gens(self):
        g = super().gens()
        for i, n in enumerate(self.names):
            exps = tuple(int(j == i) for j in range(self.nvars))
            g[n] = self.wrap(((exps, self.base.one),))
        return g

    def to_str(self, a):
        terms = [(coeff_str(self.base, c), monomial_str(self.names, e)) for e, c in reversed(a)]
        return format_terms(terms)

    def total_degree(self, a):
        return max((sum(e) for e, _ in a), default=-1)

    def constant_part(self, a):
        """Payload of the constant coefficient in the base ring."""
        for e, c in a:
            if e == self._zero_exps:
                return c
        return self.base.zero

    def is_constant(self, a):
        return all(e == self._zero_exps for e, _ in a)

    def regularity(self, a):
        if self.base.is_domain:
            return super().regularity(a)
        B = self.base
        if B.is_finite and B.cardinality <= ENUMERATION_CAP:
            # McCoy: a polynomial kills something iff a nonzero constant kills it.
            for c in B.elements():
                if not B.is_zero(c) and all(B.is_zero(B.mul(c, x)) for _, x in a):
                    return Verdict.ZERO_DIVISOR_OR_ZERO, self.embed(c)
            return Verdict.REGULAR, None
        return Verdict.UNKNOWN, None

    def unit_inverse(self, a):
        if self.base.is_domain:
            if self.is_constant(a) and a:
                ok, inv = self.base.unit_inverse(a[0][1])
                return (True, self.embed(inv)) if ok else (False, None)
            return False, None
        raise UndecidableForRing(f"unit test not available for {self}")

    def random(self, rng, terms=3, max_degree=2):
        d = {}
        for _ in range(terms):
            e = tuple(rng.randint(0, max_degree) for _ in range(self.nvars))
            d[e] = self.base.random(rng)
        return self._pack(d)

    def dense(self, a):
        """Univariate payload as a dense coefficient list (low to high)."""
        if self.nvars != 1:
            raise ValueError("dense form needs a univariate ring")
        B = self.base
        out = [B.zero] * (max((e[0] for e, _ in a), default=-1) + 1)
        for e, c in a:
            out[e[0]] = c
        return out

    def from_dense(self, coeffs):
        return self._pack({(i,): c for i, c in enumerate(coeffs)})

    def evaluate(self, a, values, ring):
        """Substitute ``values`` (payloads of ``ring``) for the variables."""
        acc = ring.zero
        for e, c in a:
            term = ring.coerce(self.base.wrap(c))
            for v, k in zip(values, e):
                if k:
                    term = ring.mul(term, ring.pow(v, k))
            acc = ring.add(acc, term)
        return acc


class FractionField(Ring):
    """K(s) for a univariate polynomial ring K[s] over a field K.

    Payload ``(num, den)``: dense coefficient tuples, coprime, ``den`` monic.
    """

    is_field = True
    is_domain = True

    def __init__(self, polyring):
        if not isinstance(polyring, PolynomialRing) or polyring.nvars != 1 or not polyring.base.is_field:
            raise MalformedSpec("Frac needs a univariate polynomial ring over a field")
        self.base = polyring
        self.K = polyring.base
        self.var = polyring.names[0]
        self.characteristic = self.K.characteristic
        self.zero = ((), (self.K.one,))
        self.one = ((self.K.one,), (self.K.one,))

    @property
    def spec(self):
        return f"Frac({self.base.spec})"

    def _make(self, num, den):
        K = self.K
        num, den = _upoly.trim(K, num), _upoly.trim(K, den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return self.zero
        g = _upoly.gcd(K, num, den)
        if len(g) > 1:
            num = _upoly.divmod_(K, num, g)[0]
            den = _upoly.divmod_(K, den, g)[0]
        lead = den[-1]
        if not K.eq(lead, K.one):
            inv = K.inv(lead)
            num, den = _upoly.scale(K, num, inv), _upoly.scale(K, den, inv)
        return tuple(num), tuple(den)

    def add(self, a, b):
        K = self.K
        (n1, d1), (n2, d2) = a, b
        if d1 == d2:
            return self._make(_upoly.add(K, n1, n2), d1)
        return self._make(_upoly.add(K, _upoly.mul(K, n1, d2), _upoly.mul(K, n2, d1)), _upoly.mul(K, d1, d2))

    def neg(self, a):
        return tuple(self.K.neg(c) for c in a[0]), a[1]

    def mul(self, a, b):
        K = self.K
        return self._make(_upoly.mul(K, a[0], b[0]), _upoly.mul(K, a[1], b[1]))

    def is_zero(self, a):
        return not a[0]

    def from_int(self, n):
        return self._make([self.K.from_int(n)], [self.K.one])

    def embed(self, b):
        return self._make(self.base.dense(b), [self.K.one])

    def unit_inverse(self, a):
        if not a[0]:
            return False, None
        return True, self._make(a[1], a[0])

    def gens(self):
        g = super().gens()
        g[self.var] = self.wrap(((self.K.zero, self.K.one), (self.K.one,)))
        return g

    def _poly_str(self, c):
        return self.base.to_str(self.base.from_dense(list(c)))

    def to_str(self, a):
        num = self._poly_str(a[0])
        if len(a[1]) == 1:
            return num
        den = self._poly_str(a[1])
        if not _atomic(num.lstrip("-")) or (num.startswith("-") and not _atomic(num[1:])):
            num = f"({num})"
        if not _atomic(den) or "/" in den or "*" in den:
            den = f"({den})"
        return f"{num}/{den}"

    def random(self, rng):
        K = self.K
        num = [K.random(rng) for _ in range(rng.randint(1, 3))]
        den = [K.random(rng) for _ in range(rng.randint(0, 2))] + [K.one]
        return self._make(num, den)


class ProductRing(Ring):
    """Direct product of finite rings (search harness only)."""

    def __init__(self, factors):
        factors = tuple(factors)
        if len(factors) < 2 or not all(r.is_finite for r in factors):
            raise MalformedSpec("Prod needs at least two finite rings")
        self.factors = factors
        self.characteristic = lcm(*(r.characteristic for r in factors))
        self.cardinality = 1
        for r in factors:
            self.cardinality *= r.cardinality
        self.zero = tuple(r.zero for r in factors)
        self.one = tuple(r.one for r in factors)

    @property
    def spec(self):
        return f"Prod({', '.join(r.spec for r in self.factors)})"

    def add(self, a, b):
        return tuple(r.add(x, y) for r, x, y in zip(self.factors, a, b))

    def neg(self, a):
        return tuple(r.neg(x) for r, x in zip(self.factors, a))

    def mul(self, a, b):
        return tuple(r.mul(x, y) for r, x, y in zip(self.factors, a, b))

    def eq(self, a, b):
        return all(r.eq(x, y) for r, x, y in zip(self.factors, a, b))

    def from_int(self, n):
        return tuple(r.from_int(n) for r in self.factors)

    def unit_inverse(self, a):
        invs = []
        for r, x in zip(self.factors, a):
            ok, inv = r.unit_inverse(x)
            if not ok:
                return False, None
            invs.append(inv)
        return True, tuple(invs)

    def regularity(self, a):
        for i, (r, x) in enumerate(zip(self.factors, a)):
            verdict, w = r.regularity(x)
            if verdict is Verdict.ZERO_DIVISOR_OR_ZERO:
                return verdict, tuple(w if j == i else s.zero for j, s in enumerate(self.factors))
            if verdict is Verdict.UNKNOWN:
                return verdict, None
        return Verdict.REGULAR, None

    def elements(self):
        return itertools.product(*(r.elements() for r in self.factors))

    def gens(self):
        g = {}
        for i in range(len(self.factors)):
            g[f"e{i + 1}"] = self.wrap(tuple(r.one if j == i else r.zero for j, r in enumerate(self.factors)))
        return g

    def to_str(self, a):
        return "(" + ", ".join(r.to_str(x) for r, x in zip(self.factors, a)) + ")"

    def random(self, rng):
        return tuple(r.random(rng) for r in self.factors)


def _check_owner(r, x):
    if not isinstance(x, RingElem):
        return r(x)
    if x.ring is not r and x.ring != r:
        raise ElementRingMismatch(f"{x!r} does not belong to {r}")
    return x


def is_regular(r, x):
    """Decide whether ``x`` is neither zero nor a zero divisor in ``r``."""
    x = _check_owner(r, x)
    verdict, w = r.regularity(x.value)
    return Regularity(x, verdict, None if w is None else r.wrap(w))


def is_unit(r, x):
    """Return ``(True, inverse)`` or ``(False, None)``."""
    x = _check_owner(r, x)
    ok, inv = r.unit_inverse(x.value)
    return (True, r.wrap(inv)) if ok else (False, None)


def enumerate_elements(r):
    """Yield every element of the finite ring ``r`` exactly once."""
    if not r.is_finite:
        raise InfiniteRing(f"{r} is infinite")
    for v in r.elements():
        yield r.wrap(v)
