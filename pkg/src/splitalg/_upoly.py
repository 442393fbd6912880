"""Dense univariate polynomial kernels over a ring's payloads.

A polynomial is a list ``[a0, a1, ..., ad]`` of payloads with a nonzero
leading entry; ``[]`` is zero. Every function takes the coefficient ring
``R`` first and never mutates its inputs.
"""


def trim(R, a):
    a = list(a)
    while a and R.is_zero(a[-1]):
        a.pop()
    return a


def add(R, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = R.add(out[i], c)
    return trim(R, out)


def neg(R, a):
    return [R.neg(c) for c in a]


def sub(R, a, b):
    return add(R, a, neg(R, b))


def scale(R, a, c):
    return trim(R, [R.mul(x, c) for x in a])


def mul(R, a, b):
    if not a or not b:
        return []
    out = [R.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if R.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = R.add(out[i + j], R.mul(x, y))
    return trim(R, out)


def shift(R, a, k):
    return [R.zero] * k + list(a) if a else []


def divmod_(R, a, b):
    """Division with remainder; the leading coefficient of ``b`` must be a unit."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lead = b[-1]
    inv = R.one if R.eq(lead, R.one) else R.inv(lead)
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], trim(R, r)
    q = [R.zero] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        if R.is_zero(c):
            continue
        c = R.mul(c, inv)
        q[k - db] = c
        for j, bj in enumerate(b):
            r[k - db + j] = R.sub(r[k - db + j], R.mul(c, bj))
    return trim(R, q), trim(R, r[:db])


def rem(R, a, b):
    return divmod_(R, a, b)[1]


def monic(R, a):
    if not a:
        return []
    if R.eq(a[-1], R.one):
        return list(a)
    return scale(R, a, R.inv(a[-1]))


def xgcd(R, a, b):
    """Extended gcd over a field: ``(g, s, t)`` with ``s*a + t*b = g`` and ``g`` monic."""
    r0, r1 = trim(R, a), trim(R, b)
    s0, s1 = [R.one], []
    t0, t1 = [], [R.one]
    while r1:
        q, r = divmod_(R, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(R, s0, mul(R, q, s1))
        t0, t1 = t1, sub(R, t0, mul(R, q, t1))
    if not r0:
        return [], [], []
    inv = R.inv(r0[-1])
    return scale(R, r0, inv), scale(R, s0, inv), scale(R, t0, inv)


def gcd(R, a, b):
    return xgcd(R, a, b)[0]


def mulmod(R, a, b, m):
    return rem(R, mul(R, a, b), m)


def powmod(R, a, e, m):
    result = rem(R, [R.one], m)
    base = rem(R, a, m)
    while e:
        if e & 1:
            result = mulmod(R, result, base, m)
        e >>= 1
        if e:
            base = mulmod(R, base, base, m)
    return result


def derivative(R, a):
    return trim(R, [R.mul(R.from_int(k), a[k]) for k in range(1, len(a))])


def evaluate(R, a, x):
    acc = R.zero
    for c in reversed(a):
        acc = R.add(R.mul(acc, x), c)
    return acc
