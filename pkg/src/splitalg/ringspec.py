"""Parser for ring specifications.

Grammar::

    Z | Q | Zmod(m) | Fp(p) | GF(p,k[,modulus in a]) | Poly(R; x[,y...])
      | Frac(R) | Quot(R, monic poly) | Prod(R, R[, R...])
"""

import re

from .errors import MalformedSpec
from .rings import (
    FractionField,
    Integers,
    IntegersMod,
    PolynomialRing,
    PrimeField,
    ProductRing,
    Rationals,
)
from .tower import ExtensionField, FiniteField, QuotientRing

_HEAD = re.compile(r"^\s*([A-Za-z]+)\s*\((.*)\)\s*$", re.S)
_IDENT = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*$")


def split_top(text, seps):
    """Split ``text`` at separators that are not nested in parentheses."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise MalformedSpec(f"unbalanced parentheses in {text!r}")
        if depth == 0 and ch in seps:
            parts.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    if depth != 0:
        raise MalformedSpec(f"unbalanced parentheses in {text!r}")
    parts.append("".join(cur).strip())
    return parts


def _int(text):
    try:
        return int(text)
    except ValueError:
        raise MalformedSpec(f"expected an integer, got {text!r}") from None


def construct_ring(spec):
    """Build a ring from its textual specification."""
    if not isinstance(spec, str):
        raise MalformedSpec("ring spec must be a string")
    s = spec.strip()
    if s == "Z":
        return Integers()
    if s == "Q":
        return Rationals()
    m = _HEAD.match(s)
    if not m:
        raise MalformedSpec(f"malformed ring spec {spec!r}")
    head, body = m.group(1), m.group(2)
    if head == "Zmod":
        return IntegersMod(_int(body))
    if head == "Fp":
        return PrimeField(_int(body))
    if head == "GF":
        args = split_top(body, ",")
        if len(args) not in (2, 3):
            raise MalformedSpec(f"GF takes (p,k) or (p,k,modulus): {spec!r}")
        p, k = _int(args[0]), _int(args[1])
        modulus = None
        if len(args) == 3:
            Fp = PrimeField(p)
            pr = PolynomialRing(Fp, ["a"])
            modulus = pr.dense(pr.parse(args[2]).value)
        return FiniteField(p, k, modulus)
    if head == "Poly":
        args = split_top(body, ";")
        if len(args) != 2:
            raise MalformedSpec(f"Poly takes (ring; vars): {spec!r}")
        names = [v.strip() for v in args[1].split(",")]
        if not all(_IDENT.match(v) for v in names):
            raise MalformedSpec(f"bad variable names in {spec!r}")
        return PolynomialRing(construct_ring(args[0]), names)
    if head == "Frac":
        return FractionField(construct_ring(body))
    if head == "Quot":
        args = split_top(body, ",")
        if len(args) != 2:
            raise MalformedSpec(f"Quot takes (ring, modulus): {spec!r}")
        pr = construct_ring(args[0])
        if not isinstance(pr, PolynomialRing) or pr.nvars != 1:
            raise MalformedSpec("Quot needs a univariate polynomial ring")
        modulus = pr.dense(pr.parse(args[1]).value)
        base = pr.base
        if base.is_field and base.is_finite:
            from .poly import is_irreducible_dense

            if modulus and base.eq(modulus[-1], base.one) and is_irreducible_dense(base, modulus):
                return ExtensionField(base, pr.names[0], modulus, check=False)
        return QuotientRing(base, pr.names[0], modulus)
    if head == "Prod":
        return ProductRing([construct_ring(a) for a in split_top(body, ",")])
    raise MalformedSpec(f"unknown ring constructor {head!r}")
