"""Exact row-echelon linear algebra over fields, and over Z or Z/m.

Matrices are lists of rows of ring payloads. Vectors multiply from the left,
so the row space and the *left* kernel are the natural objects.
"""

from math import gcd

from .errors import UnsupportedBaseRing
from .rings import Integers, IntegersMod


def _kind(R):
    if R.is_field:
        return "field"
    if isinstance(R, Integers):
        return "Z"
    if isinstance(R, IntegersMod):
        return "Zmod"
    raise UnsupportedBaseRing(f"no exact linear algebra over {R}")


def _ncols(rows, ncols):
    if ncols is None:
        if not rows:
            raise ValueError("cannot infer the width of an empty matrix")
        ncols = len(rows[0])
    return ncols


# -- fields --------------------------------------------------------------


def rref(rows, F, ncols=None):
    """Reduced row echelon form; returns ``(nonzero rows, pivot columns)``."""
    ncols = _ncols(rows, ncols)
    A = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(A)) if not F.is_zero(A[i][c])), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = F.inv(A[r][c])
        A[r] = [F.mul(x, inv) for x in A[r]]
        pivot_row = A[r]
        for i in range(len(A)):
            if i != r and not F.is_zero(A[i][c]):
                k = A[i][c]
                A[i] = [F.sub(x, F.mul(k, y)) for x, y in zip(A[i], pivot_row)]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A[:r], pivots


# -- integers ------------------------------------------------------------


def _gcdex(a, b):
    """``(g, s, t)`` with ``s*a + t*b = g = gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


def _combine(A, r, i, c, mod=None):
    """Unimodular 2x2 row operation putting ``gcd`` in ``A[r][c]`` and 0 in ``A[i][c]``."""
    a, b = A[r][c], A[i][c]
    g, s, t = _gcdex(a, b)
    u, v = -b // g, a // g
    ra, rb = A[r], A[i]
    new_r = [s * x + t * y for x, y in zip(ra, rb)]
    new_i = [u * x + v * y for x, y in zip(ra, rb)]
    if mod is not None:
        new_r = [x % mod for x in new_r]
        new_i = [x % mod for x in new_i]
    A[r], A[i] = new_r, new_i


def hermite(rows, ncols=None):
    """Hermite normal form over Z: positive pivots, entries above reduced."""
    ncols = _ncols(rows, ncols)
    A = [list(r) for r in rows if any(r)]
    r = 0
    for c in range(ncols):
        if r == len(A):
            break
        p = next((i for i in range(r, len(A)) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        for i in range(r + 1, len(A)):
            if A[i][c]:
                _combine(A, r, i, c)
        if A[r][c] < 0:
            A[r] = [-x for x in A[r]]
        piv = A[r][c]
        for i in range(r):
            q = A[i][c] // piv
            if q:
                A[i] = [x - q * y for x, y in zip(A[i], A[r])]
        r += 1
        A = A[:r] + [row for row in A[r:] if any(row)]
    return A[:r]


# -- Z/m -----------------------------------------------------------------


def _unit_normalizer(a, m):
    """A unit ``u`` of Z/m with ``u*a = gcd(a, m)`` mod m."""
    g = gcd(a, m)
    mp = m // g
    u = pow(a // g, -1, mp) if mp > 1 else 1
    while gcd(u, m) != 1:
        u += mp
    return u


def howell(rows, m, ncols=None):
    """Howell normal form over Z/m.

    Besides echelon shape, the row span of the rows with leading zeros in the
    first k columns equals the set of span vectors with that property.
    """
    ncols = _ncols(rows, ncols)
    A = [[x % m for x in r] for r in rows]
    A = [r for r in A if any(r)]
    r = 0
    for c in range(ncols):
        if r == len(A):
            break
        p = next((i for i in range(r, len(A)) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        for i in range(r + 1, len(A)):
            if A[i][c]:
                _combine(A, r, i, c, m)
        u = _unit_normalizer(A[r][c], m)
        if u != 1:
            A[r] = [x * u % m for x in A[r]]
        piv = A[r][c]
        for i in range(r):
            q = A[i][c] // piv
            if q:
                A[i] = [(x - q * y) % m for x, y in zip(A[i], A[r])]
        ann = m // piv
        extra = [x * ann % m for x in A[r]]
        r += 1
        rest = [row for row in A[r:] if any(row)]
        if any(extra):
            rest.append(extra)
        A = A[:r] + rest
    return A[:r]


# -- dispatch ------------------------------------------------------------


def echelon(rows, R, ncols=None):
    """Canonical echelon basis of the row space (rref, Hermite or Howell)."""
    kind = _kind(R)
    if kind == "field":
        return rref(rows, R, ncols)[0]
    if kind == "Z":
        return hermite(rows, ncols)
    return howell(rows, R.m, ncols)


def span_key(rows, R, ncols=None):
    """Hashable canonical form of the row space."""
    return tuple(tuple(r) for r in echelon(rows, R, ncols))


def same_span(rows1, rows2, R, ncols):
    return span_key(rows1, R, ncols) == span_key(rows2, R, ncols)


def left_kernel(rows, R, ncols=None):
    """Basis (generating set over Z/m) of ``{v : v * M = 0}``."""
    n = len(rows)
    if n == 0:
        return []
    ncols = _ncols(rows, ncols)
    aug = []
    for i, row in enumerate(rows):
        aug.append(list(row) + [R.one if j == i else R.zero for j in range(n)])
    E = echelon(aug, R, ncols + n)
    return [row[ncols:] for row in E if all(R.is_zero(x) for x in row[:ncols])]


def solve_left(rows, target, F):
    """Some ``v`` with ``v * M = target`` over a field, or ``None``."""
    n = len(rows)
    ncols = len(target)
    # transpose: M^T v^T = target^T
    aug = [[rows[i][j] for i in range(n)] + [target[j]] for j in range(ncols)]
    E, pivots = rref(aug, F, n + 1)
    if n in pivots:
        return None
    v = [F.zero] * n
    for row, c in zip(E, pivots):
        v[c] = row[n]
    return v


def row_space_contains(rows, v, R):
    ncols = len(v)
    return span_key(list(rows) + [v], R, ncols) == span_key(rows, R, ncols)


def rank(rows, F, ncols=None):
    return len(rref(rows, F, ncols)[1])


# -- determinants --------------------------------------------------------


def _det_field(A, F):
    A = [list(r) for r in A]
    n = len(A)
    det = F.one
    for c in range(n):
        p = next((i for i in range(c, n) if not F.is_zero(A[i][c])), None)
        if p is None:
            return F.zero
        if p != c:
            A[c], A[p] = A[p], A[c]
            det = F.neg(det)
        piv = A[c][c]
        det = F.mul(det, piv)
        inv = F.inv(piv)
        for i in range(c + 1, n):
            if not F.is_zero(A[i][c]):
                k = F.mul(A[i][c], inv)
                A[i] = [F.sub(x, F.mul(k, y)) for x, y in zip(A[i], A[c])]
    return det


def _det_bareiss(A):
    A = [list(r) for r in A]
    n = len(A)
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            p = next((i for i in range(k + 1, n) if A[i][k]), None)
            if p is None:
                return 0
            A[k], A[p] = A[p], A[k]
            sign = -sign
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * A[n - 1][n - 1] if n else 1


def _det_berkowitz(A, R):
    """Division-free determinant via Berkowitz's algorithm."""
    n = len(A)
    if n == 0:
        return R.one
    # characteristic polynomial coefficients, highest first
    poly = [R.one, R.neg(A[0][0])]
    for k in range(1, n):
        a = A[k][k]
        row = A[k][:k]
        col = [A[i][k] for i in range(k)]
        sub = [r[:k] for r in A[:k]]
        # Toeplitz column: 1, -a, -R C, -R S C, -R S^2 C, ...
        t = [R.one, R.neg(a)]
        vec = col
        for _ in range(k):
            dot = R.zero
            for x, y in zip(row, vec):
                dot = R.add(dot, R.mul(x, y))
            t.append(R.neg(dot))
            vec = [_dot(R, srow, vec) for srow in sub]
        new = []
        for i in range(k + 2):
            acc = R.zero
            for j in range(min(i, k) + 1):
                if i - j < len(t):
                    acc = R.add(acc, R.mul(t[i - j], poly[j]))
            new.append(acc)
        poly = new
    det = poly[n]
    return det if n % 2 == 0 else R.neg(det)


def _dot(R, a, b):
    acc = R.zero
    for x, y in zip(a, b):
        acc = R.add(acc, R.mul(x, y))
    return acc


def determinant(A, R):
    if not A:
        return R.one
    if R.is_field:
        return _det_field(A, R)
    if isinstance(R, Integers):
        return _det_bareiss(A)
    if isinstance(R, IntegersMod):
        return _det_bareiss(A) % R.m
    return _det_berkowitz(A, R)
