"""Command-line front end.

Every subcommand prints plain text by default and a JSON document with
``--json``. Exit codes: 0 success, 1 usage error, 2 failed mathematical
precondition, 3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys

from .decompose import crt_split, shuffle_decomposition
from .errors import DegreeTooLarge, FatalInconsistency, SearchSpaceTooLarge, SplitAlgError, UsageError
from .galois import galois_group, inseparable_demo, primitive_idempotents, transitivity_check
from .invariants import (
    _exhaustive_span,
    invariant_module,
    reduce_symmetric_polynomial,
    search_exceptional,
    verify_invariants_theorem,
)
from .oracles import OracleReport, exhaustive_invariants, gauss_symmetric_reduction, resultant_discriminant
from .poly import MonicPoly
from .rings import PolynomialRing
from .ringspec import construct_ring
from .splitting import SplitAlgebra, discriminant

DEFAULT_MAX_DEGREE = 6


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _poly(args, ring=None):
    R = ring or construct_ring(args.ring)
    f = MonicPoly.parse(R, args.poly)
    if f.degree > args.max_degree:
        raise DegreeTooLarge(f"degree {f.degree} exceeds --max-degree {args.max_degree}")
    return f


def _algebra(args):
    f = _poly(args)
    return SplitAlgebra(f.ring, f, max_degree=args.max_degree)


def cmd_normalize(args):
    alg = _algebra(args)
    x = alg.parse(args.expr)
    return x.to_json() if args.json else str(x)


def cmd_discriminant(args):
    d = discriminant(_algebra(args))
    return {"ring": args.ring, "poly": args.poly, "discriminant": str(d)} if args.json else str(d)


def cmd_invariants(args):
    mod = invariant_module(_algebra(args), args.degree_bound)
    if args.json:
        return mod.to_json()
    return "\n".join([f"method: {mod.method}"] + [str(g) for g in mod.generators])


def cmd_verify_theorem(args):
    report = verify_invariants_theorem(_algebra(args), args.degree_bound)
    data = report.to_json()
    if args.json:
        return data
    return "\n".join(f"{k}: {v}" for k, v in data.items())


def _symmetric_input(args):
    A = construct_ring(args.ring)
    Pt = PolynomialRing(A, [f"t{i}" for i in range(1, args.nvars + 1)])
    if args.nvars > args.max_degree:
        raise DegreeTooLarge(f"{args.nvars} variables exceed --max-degree {args.max_degree}")
    return Pt.parse(args.expr)


def cmd_symreduce(args):
    r = reduce_symmetric_polynomial(_symmetric_input(args))
    return {"ring": args.ring, "expr": args.expr, "result": str(r)} if args.json else str(r)


def cmd_decompose(args):
    if not args.factor:
        raise UsageError("decompose needs at least one --factor")
    alg = _algebra(args)
    dec = shuffle_decomposition(alg, args.factor)
    data = dec.to_json()
    if args.crt:
        split = crt_split(alg, args.factor)
        degrees = [MonicPoly.parse(alg.base, g).degree for g in args.factor]
        data["crt"] = {
            "components": [
                {"base": c.base.spec, "poly": str(c.h), "rank": len(c.algebra.basis) * d}
                for c, d in zip(split.components, degrees)
            ],
            "determinant": str(split.determinant),
        }
    if args.json:
        return data
    lines = [
        f"composition: {data['composition']}",
        f"shuffles: {len(data['shuffles'])}",
        f"matrix: {data['matrix_size']} x {data['matrix_size']}",
        f"determinant: {data['determinant']}",
    ]
    if args.crt:
        for c in data["crt"]["components"]:
            lines.append(f"crt component over {c['base']}: {c['poly']} (rank {c['rank']})")
        lines.append(f"crt determinant: {data['crt']['determinant']}")
    return "\n".join(lines)


def cmd_galois(args):
    report = galois_group(_poly(args))
    data = report.to_json()
    if args.idempotents:
        data["idempotents"] = [str(e) for e in primitive_idempotents(report.ideal.algebra)]
    if args.json:
        return data
    lines = [
        f"group order: {data['group_order']}",
        "generators: " + ", ".join(str(s) for s in report.generators),
        f"residue degree: {data['residue_degree']}",
        f"cyclic: {data['cyclic']}",
    ]
    lines += [f"idempotent: {e}" for e in data.get("idempotents", [])]
    return "\n".join(lines)


def cmd_maxideals(args):
    alg = _algebra(args)
    report = transitivity_check(alg)
    data = report.to_json()
    if args.json:
        return data
    lines = [f"ideal count: {data['ideal_count']}", f"transitive: {data['transitive']}"]
    for I in report.ideals:
        lines.append(f"degree {I.residue_degree}: {I}")
    return "\n".join(lines)


def cmd_search_exceptional(args):
    text = args.spec
    if text.startswith("@"):
        with open(text[1:]) as fh:
            text = fh.read()
    try:
        spec = json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"search spec is not valid JSON: {e}") from None
    findings = search_exceptional(spec)
    if args.json:
        return findings
    if not findings:
        return "no exceptional invariants"
    return "\n".join(f"{d['ring']}  {d['poly']}: " + ", ".join(d["extra_invariants"]) for d in findings)


def cmd_demo_inseparable(args):
    data = inseparable_demo()
    if args.json:
        return data
    return "\n".join([f"{data['ring']}  {data['poly']}"] + [f"{k}: {v}" for k, v in data["checks"].items()])


def _verify_reports(args):
    reports = []
    if args.poly:
        alg = _algebra(args)
        f = alg.f
        try:
            oracle = resultant_discriminant(f)
            reports.append(OracleReport.compare("discriminant", (args.ring, args.poly), oracle, discriminant(alg)))
        except SplitAlgError as e:
            if e.exit_code != 2:
                raise
        if alg.base.is_finite:
            try:
                found = exhaustive_invariants(alg)
            except SearchSpaceTooLarge:
                found = None
            if found is not None:
                mod = invariant_module(alg)
                span = _exhaustive_span(alg, mod.generators)
                brute = {alg.element(d).value for d in found}
                reports.append(
                    OracleReport.compare(
                        "invariants", (args.ring, args.poly), len(brute), len(span), lambda a, b: brute == span
                    )
                )
        if alg.base.is_field and alg.base.is_finite:
            transitive = transitivity_check(alg).transitive
            reports.append(OracleReport.compare("transitivity", (args.ring, args.poly), True, transitive))
    if args.expr:
        h = _symmetric_input(args)
        main = reduce_symmetric_polynomial(h)
        oracle = gauss_symmetric_reduction(h, main.ring.names)
        reports.append(OracleReport.compare("symreduce", (args.ring, args.expr), oracle, main))
    if not reports:
        raise UsageError("verify needs --poly or --expr")
    return reports


def cmd_verify(args):
    reports = _verify_reports(args)
    failed = [r for r in reports if not r.agree]
    if args.json:
        out = [r.to_json() for r in reports]
    else:
        out = "\n".join(f"{'agree' if r.agree else 'DISAGREE'}  {r.name}: oracle {r.oracle}, main {r.main}" for r in reports)
    if failed:
        _emit(out, args.json)
        raise FatalInconsistency("oracle disagreement: " + ", ".join(r.name for r in failed))
    return out


COMMANDS = {
    "normalize": cmd_normalize,
    "discriminant": cmd_discriminant,
    "invariants": cmd_invariants,
    "verify-theorem": cmd_verify_theorem,
    "symreduce": cmd_symreduce,
    "decompose": cmd_decompose,
    "galois": cmd_galois,
    "maxideals": cmd_maxideals,
    "search-exceptional": cmd_search_exceptional,
    "demo-inseparable": cmd_demo_inseparable,
    "verify": cmd_verify,
}


def build_parser():
    p = _Parser(prog="splitalg", description="Splitting algebras of monic polynomials over commutative rings.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def common(name, help, poly=True, ring=True):
        sp = sub.add_parser(name, help=help)
        if ring:
            sp.add_argument("--ring", required=True, help='ring spec, e.g. "Z", "Fp(5)", "Quot(Fp(2); u; u^2)"')
        if poly:
            sp.add_argument("--poly", required=True, help='monic polynomial in t, e.g. "t^3-2"')
        sp.add_argument("--json", action="store_true", help="print JSON instead of text")
        sp.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE, help="refuse degrees above this (default 6)")
        return sp

    sp = common("normalize", "reduce an expression in tau1..taun to normal form")
    sp.add_argument("--expr", required=True)
    common("discriminant", "discriminant of f computed in A_f")
    for name, help in (("invariants", "S_n-invariants of A_f"), ("verify-theorem", "regularity report and invariants")):
        sp = common(name, help)
        sp.add_argument("--degree-bound", type=int, default=None, help="truncation for polynomial base rings")
    sp = common("symreduce", "write a symmetric polynomial in t1..tn through f1..fn", poly=False)
    sp.add_argument("--expr", required=True)
    sp.add_argument("--nvars", type=int, required=True)
    sp = common("decompose", "shuffle isomorphism for a coprime factorization")
    sp.add_argument("--factor", action="append", default=[], help="monic factor; repeat in order")
    sp.add_argument("--crt", action="store_true", help="also build the CRT split")
    sp = common("galois", "Galois group over a finite field")
    sp.add_argument("--idempotents", action="store_true", help="also list primitive idempotents")
    common("maxideals", "maximal ideals over a finite field and transitivity")
    sp = common("search-exceptional", "search for invariants beyond the base ring", poly=False, ring=False)
    sp.add_argument("--spec", required=True, help="JSON search spec, or @file")
    common("demo-inseparable", "t^3 - s over F_3(s)", poly=False, ring=False)
    sp = common("verify", "cross-check main results against the oracles", poly=False)
    sp.add_argument("--poly", default=None)
    sp.add_argument("--expr", default=None, help="symmetric polynomial to cross-check")
    sp.add_argument("--nvars", type=int, default=None)
    return p


def _emit(out, as_json):
    if as_json:
        print(json.dumps(out, sort_keys=True))
    else:
        print(out)


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("missing subcommand; see --help")
        if getattr(args, "expr", None) and args.command in ("symreduce", "verify") and args.nvars is None:
            raise UsageError("--expr needs --nvars")
        _emit(COMMANDS[args.command](args), args.json)
    except SplitAlgError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return e.exit_code
    except SystemExit as e:  # --help
        return e.code or 0
    return 0
