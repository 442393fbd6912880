"""Brute-force reference computations.

Nothing here calls into the splitting, invariant or linear-algebra modules;
only ring arithmetic is shared, so agreement is meaningful evidence.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass

from .errors import NotSymmetric, SearchSpaceTooLarge, UnsupportedRing
from .rings import FractionField, Integers, IntegersMod, PolynomialRing, Rationals


@dataclass(frozen=True)
class OracleReport:
    name: str
    inputs: str
    oracle: str
    main: str
    agree: bool

    @classmethod
    def compare(cls, name, inputs, oracle_value, main_value, equal=None):
        agree = (oracle_value == main_value) if equal is None else equal(oracle_value, main_value)
        digest = hashlib.sha256(repr(inputs).encode()).hexdigest()[:12]
        return cls(name, digest, str(oracle_value), str(main_value), bool(agree))

    def to_json(self):
        return {"name": self.name, "inputs": self.inputs, "oracle": self.oracle, "main": self.main, "agree": self.agree}


# -- discriminant via the Sylvester matrix ------------------------------------


def _supported(R):
    if isinstance(R, (Integers, Rationals, IntegersMod, FractionField)):
        return True
    return isinstance(R, PolynomialRing) and _supported(R.base)


def _berkowitz_det(M, R):
    """Division-free determinant: constant term of the characteristic polynomial."""
    n = len(M)
    if n == 0:
        return R.one
    charpoly = [R.one, R.neg(M[0][0])]
    for k in range(1, n):
        col = [M[i][k] for i in range(k)]
        row = M[k][:k]
        toeplitz = [R.one, R.neg(M[k][k])]
        v = col
        for _ in range(k):
            s = R.zero
            for a, b in zip(row, v):
                s = R.add(s, R.mul(a, b))
            toeplitz.append(R.neg(s))
            v = [_inner(R, M[i][:k], v) for i in range(k)]
        charpoly = [
            _sum(R, (R.mul(toeplitz[i - j], charpoly[j]) for j in range(len(charpoly)) if 0 <= i - j < len(toeplitz)))
            for i in range(k + 2)
        ]
    det = charpoly[n]
    return det if n % 2 == 0 else R.neg(det)


def _inner(R, a, b):
    return _sum(R, (R.mul(x, y) for x, y in zip(a, b)))


def _sum(R, xs):
    acc = R.zero
    for x in xs:
        acc = R.add(acc, x)
    return acc


def sylvester_matrix(R, f, g, m=None):
    """Sylvester matrix of dense ``f`` and ``g``; ``g`` is read with formal degree ``m``."""
    n = len(f) - 1
    m = len(g) - 1 if m is None else m
    g = list(g) + [R.zero] * (m + 1 - len(g))
    size = n + m
    rows = []
    for i in range(m):
        row = [R.zero] * size
        for j, c in enumerate(reversed(f)):
            row[i + j] = c
        rows.append(row)
    for i in range(n):
        row = [R.zero] * size
        for j, c in enumerate(reversed(g)):
            row[i + j] = c
        rows.append(row)
    return rows


def resultant_discriminant(f):
    """``(-1)^(n(n-1)/2) Res(f, f')`` for monic ``f`` of degree ``n >= 1``."""
    R = f.ring
    if not _supported(R):
        raise UnsupportedRing(f"resultant oracle does not support {R}")
    a = list(f.coeffs)
    n = len(a) - 1
    if n < 1:
        raise UnsupportedRing("discriminant needs degree >= 1")
    da = [R.mul(R.from_int(k), a[k]) for k in range(1, n + 1)]
    res = _berkowitz_det(sylvester_matrix(R, a, da, n - 1), R)
    if (n * (n - 1) // 2) % 2:
        res = R.neg(res)
    return R.wrap(res)


# -- classical symmetric reduction --------------------------------------------


def _elementary(P, k):
    acc = P.zero
    for combo in itertools.combinations(range(P.nvars), k):
        acc = P.add(acc, P.monomial([int(i in combo) for i in range(P.nvars)]))
    return acc


def _is_symmetric(P, h):
    for i in range(P.nvars - 1):
        swapped = {}
        for e, c in h:
            e = list(e)
            e[i], e[i + 1] = e[i + 1], e[i]
            swapped[tuple(e)] = c
        if P._pack(swapped) != h:
            return i
    return None


def gauss_symmetric_reduction(h, names=None):
    """Leading-term elimination: ``h`` as a polynomial in ``e_1, ..., e_n``."""
    P = h.ring
    n = P.nvars
    bad = _is_symmetric(P, h.value)
    if bad is not None:
        raise NotSymmetric(f"{h} is not symmetric", (bad + 1, bad + 2))
    E = PolynomialRing(P.base, names or [f"e{k}" for k in range(1, n + 1)])
    es = [_elementary(P, k) for k in range(1, n + 1)]
    rest = h.value
    out = E.zero
    while rest:
        lead, c = max(rest, key=lambda t: t[0])
        gaps = [lead[i] - (lead[i + 1] if i + 1 < n else 0) for i in range(n)]
        term = P.embed(c)
        for ek, g in zip(es, gaps):
            term = P.mul(term, P.pow(ek, g))
        rest = P.sub(rest, term)
        out = E.add(out, E.monomial(gaps, c))
    return E.wrap(out)


# -- invariants by enumeration ------------------------------------------------


def _complete_homogeneous(P, k, vars_from):
    """``h_k`` in the variables with index ``>= vars_from``."""
    n = P.nvars
    idx = list(range(vars_from, n))
    acc = P.zero
    for combo in itertools.combinations_with_replacement(idx, k):
        e = [0] * n
        for i in combo:
            e[i] += 1
        acc = P.add(acc, P.monomial(e))
    return acc


class _GroebnerModel:
    """``A[t_1..t_n]`` modulo the ideal generated by ``e_k(t) - f_k``.

    The polynomials ``g_k = sum_j (-1)^j f_j h_{k-j}(t_k, ..., t_n)`` form a
    Groebner basis for lex order with leading terms ``t_k^k``.
    """

    def __init__(self, A, signed):
        self.A = A
        self.n = n = len(signed)
        self.P = PolynomialRing(A, [f"t{i}" for i in range(1, n + 1)])
        P = self.P
        fs = [A.one] + list(signed)
        self.g = []
        for k in range(1, n + 1):
            acc = P.zero
            for j in range(k + 1):
                c = fs[j] if j % 2 == 0 else A.neg(fs[j])
                acc = P.add(acc, P.mul(P.embed(c), _complete_homogeneous(P, k - j, k - 1)))
            self.g.append(acc)

    def reduce(self, x):
        P = self.P
        d = dict(x)
        while True:
            red = [e for e in d if any(e[k] >= k + 1 for k in range(self.n))]
            if not red:
                return P._pack(d)
            e = max(red)
            c = d[e]
            k = next(k for k in range(self.n) if e[k] >= k + 1)
            shift = list(e)
            shift[k] -= k + 1
            sub = P.mul(P.monomial(shift, c), self.g[k])
            for e2, c2 in sub:
                v = self.A.sub(d[e2], c2) if e2 in d else self.A.neg(c2)
                if self.A.is_zero(v):
                    d.pop(e2, None)
                else:
                    d[e2] = v

    def swap(self, x, i):
        out = {}
        for e, c in x:
            e = list(e)
            e[i], e[i + 1] = e[i + 1], e[i]
            out[tuple(e)] = c
        return self.reduce(self.P._pack(out))

    def standard_monomials(self):
        ranges = [range(k + 1) for k in range(self.n)]
        return [e for e in itertools.product(*ranges)]


def exhaustive_invariants(alg, cap=65536):
    """Every element of ``A_f`` fixed by all adjacent transpositions.

    Elements come back as ``{(m_2, ..., m_n): base payload}`` dictionaries.
    """
    A, f = alg.base, alg.f
    if not A.is_finite:
        raise SearchSpaceTooLarge(f"{A} is infinite")
    n = f.degree
    signed = []
    for k in range(1, n + 1):
        c = f.coeffs[n - k]
        signed.append(A.neg(c) if k % 2 else c)
    model = _GroebnerModel(A, signed)
    monos = model.standard_monomials()
    size = A.cardinality ** len(monos)
    if size > cap:
        raise SearchSpaceTooLarge(f"{size} elements exceed the cap {cap}", size)
    elems = list(A.elements())
    P = model.P
    found = []
    for combo in itertools.product(elems, repeat=len(monos)):
        x = P._pack(dict(zip(monos, combo)))
        if all(model.swap(x, i) == x for i in range(n - 1)):
            found.append({e[1:]: c for e, c in x})
    return found


# -- resolvents ---------------------------------------------------------------


def resolvent(f, x):
    """``prod_{sigma in S_n} (T - sigma(x))`` with ``x`` a polynomial in ``t_1..t_n``.

    The coefficients are symmetric; each is reduced to elementary symmetric
    polynomials and then evaluated at the signed coefficients of ``f``.
    Returns dense coefficients (low degree first) over the base ring.
    """
    P = x.ring
    A = f.ring
    n = f.degree
    conj = []
    for perm in itertools.permutations(range(n)):
        out = {}
        for e, c in x.value:
            e2 = [0] * n
            for i, k in enumerate(e):
                e2[perm[i]] += k
            out[tuple(e2)] = c
        conj.append(P._pack(out))
    coeffs = [P.one]
    for y in conj:
        nxt = [P.zero] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k + 1] = P.add(nxt[k + 1], c)
            nxt[k] = P.sub(nxt[k], P.mul(c, y))
        coeffs = nxt
    signed = []
    for k in range(1, n + 1):
        c = f.coeffs[n - k]
        signed.append(A.neg(c) if k % 2 else c)
    out = []
    for c in coeffs:
        expr = gauss_symmetric_reduction(P.wrap(c))
        out.append(expr.ring.evaluate(expr.value, signed, A))
    return out
