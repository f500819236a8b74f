"""Batch command-line interface: one JSON document per invocation.

Commands map one-to-one onto library operations and contain no computation
of their own.  Output is key-sorted and byte-identical across identical
invocations; seeds are always echoed.  Usage errors exit 2 (via argparse,
on stderr); computational errors produce a structured JSON error document
and exit 1; otherwise the exit code is 0 exactly when every requested
check or table row passes.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import identities
from .classify import TrinomialShape, classify_trinomial
from .errors import TrigalError
from .gf import parse_field
from .newton import lower_hull, tame_cycle_pattern, valued_points
from .permgrp import builtin_group, cycle_type_set, parse_group_name, type_display
from .sampler import (
    identify_group,
    reproduce_table1,
    reproduce_table2,
    sample_sectional,
    sample_trinomial,
)
from .upoly import factor, factor_pattern, parse_poly


def _emit(doc: dict, code: int = 0) -> int:
    print(json.dumps(doc, sort_keys=True, indent=2))
    return code


def _newton_witnesses(shape: TrinomialShape) -> list[dict]:
    """Newton-polygon inertia witnesses for the explain output: the
    one-segment polygon of the x^n + t specialization when p does not divide
    n, and the two-segment polygon of x^n + t^-1 x^m + 1 when it does."""
    n, m, p = shape.n, shape.m, shape.p
    if p == 0:
        return []
    out = []
    if n % p != 0:
        poly = lower_hull(valued_points([(0, 1), (n, 0)]))
        pattern = tame_cycle_pattern(poly, p)
        out.append(
            {
                "specialization": f"x^{n} + t",
                "points": [[0, "1"], [n, "0"]],
                "segments": [[str(s), r] for s, r in poly.segments],
                "wild": pattern.wild,
                "cycles": list(pattern.cycles),
            }
        )
    else:
        poly = lower_hull(valued_points([(0, 0), (m, -1), (n, 0)]))
        pattern = tame_cycle_pattern(poly, p)
        out.append(
            {
                "specialization": f"x^{n} + t^-1*x^{m} + 1",
                "points": [[0, "0"], [m, "-1"], [n, "0"]],
                "segments": [[str(s), r] for s, r in poly.segments],
                "wild": pattern.wild,
                "cycles": list(pattern.cycles),
            }
        )
    return out


def _cmd_classify(args) -> int:
    shape = TrinomialShape(args.n, args.m, args.p)
    verdict = classify_trinomial(shape)
    doc = {
        "group": str(verdict.group),
        "clause": verdict.clause,
        "n": args.n,
        "m": args.m,
        "p": args.p,
    }
    if args.explain:
        doc["gauss"] = {
            "separable": verdict.gauss.sep,
            "inseparable": verdict.gauss.insep,
            "strange": verdict.gauss.strange,
        }
        doc["notes"] = list(verdict.notes)
        doc["newton_witnesses"] = _newton_witnesses(shape)
    return _emit(doc)


def _cmd_factor(args) -> int:
    field = parse_field(args.field)
    poly = parse_poly(field, args.poly)
    fac = factor(poly, seed=args.seed)
    pattern = factor_pattern(poly, seed=args.seed)
    doc = {
        "field": field.spec_string(),
        "seed": args.seed,
        "degree": int(poly.degree),
        "unit": str(fac.unit),
        "factors": [
            {"coefficients": [str(c) for c in g.elements()], "multiplicity": mult}
            for g, mult in fac.factors
        ],
        "pattern": list(pattern.degrees),
    }
    return _emit(doc)


def _cmd_sample(args) -> int:
    field = parse_field(args.field)
    stats = sample_trinomial(args.n, args.m, field, args.trials, seed=args.seed)
    doc = stats.to_json_dict()
    if args.identify:
        doc["identification"] = identify_group(stats).to_json_dict()
    return _emit(doc)


def _cmd_sectional(args) -> int:
    field = parse_field(args.field)
    exps = tuple(int(t) for t in args.exponents.split(","))
    stats = sample_sectional(exps, field, args.trials, seed=args.seed)
    doc = stats.to_json_dict()
    doc["exponents"] = list(exps)
    if args.identify:
        doc["identification"] = identify_group(stats).to_json_dict()
    return _emit(doc)


def _table_doc(rows) -> tuple[dict, int]:
    all_match = all(r.match for r in rows)
    doc = {
        "rows": [
            {
                "label": r.label,
                "expected": sorted([list(t) for t in r.expected])
                if isinstance(r.expected, frozenset)
                else list(r.expected),
                "computed": sorted([list(t) for t in r.computed])
                if isinstance(r.computed, frozenset)
                else list(r.computed),
                "match": r.match,
                **({"note": r.note} if r.note else {}),
            }
            for r in rows
        ],
        "all_match": all_match,
    }
    return doc, 0 if all_match else 1


def _cmd_table1(args) -> int:
    doc, code = _table_doc(reproduce_table1())
    return _emit(doc, code)


def _cmd_table2(args) -> int:
    doc, code = _table_doc(reproduce_table2(seed=args.seed))
    doc["seed"] = args.seed
    print_code = _emit(doc, code)
    return print_code


def _cmd_cycletypes(args) -> int:
    name = parse_group_name(args.group)
    handle = builtin_group(name)
    types = sorted(cycle_type_set(handle))
    doc = {
        "group": str(name),
        "degree": handle.degree,
        "order": handle.order,
        "types": [list(t) for t in types],
        "display": sorted(
            {"+".join(map(str, type_display(t))) or "1" for t in types}
        ),
    }
    return _emit(doc)


def _cmd_verify_identities(args) -> int:
    reports = identities.all_identity_reports()
    numeric = {
        "psl25": identities.numeric_check_psl25(seed=args.seed),
        "m24": identities.numeric_check_m24(seed=args.seed),
        "m23": identities.numeric_check_m23(seed=args.seed),
        "pgl-2-1-3-2": identities.numeric_check_pgl(2, 1, 3, 2, seed=args.seed),
        "pgl-3-1-3-2": identities.numeric_check_pgl(3, 1, 3, 2, seed=args.seed),
        "pgl-2-2-2-1": identities.numeric_check_pgl(2, 2, 2, 1, seed=args.seed),
    }
    ok = all(r.holds for r in reports) and all(numeric.values())
    doc = {
        "symbolic": [r.to_json_dict() for r in reports],
        "numeric": numeric,
        "seed": args.seed,
        "all_hold": ok,
    }
    return _emit(doc, 0 if ok else 1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trigal",
        description="Galois groups of trinomials over function fields: "
        "classification, factorization evidence, and reference tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="classify x^n + a*x^m + b over K(a,b)")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--p", type=int, required=True, help="characteristic (0 or prime)")
    c.add_argument("--explain", action="store_true")
    c.set_defaults(fn=_cmd_classify)

    f = sub.add_parser("factor", help="factor a polynomial over a finite field")
    f.add_argument("--field", required=True, help="p, p^k, or p^k:c0,c1,...,1")
    f.add_argument(
        "--poly", required=True,
        help="comma-separated coefficients, constant first; extension-field "
        "entries as c-expressions like c+1",
    )
    f.add_argument("--seed", type=int, default=0)
    f.set_defaults(fn=_cmd_factor)

    s = sub.add_parser("sample", help="factor random trinomial specializations")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--field", required=True)
    s.add_argument("--trials", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--identify", action="store_true")
    s.set_defaults(fn=_cmd_sample)

    sec = sub.add_parser("sectional", help="sample hyperplane sections of a monomial curve")
    sec.add_argument("--exponents", required=True, help="e1,e2,... strictly increasing")
    sec.add_argument("--field", required=True)
    sec.add_argument("--trials", type=int, required=True)
    sec.add_argument("--seed", type=int, default=0)
    sec.add_argument("--identify", action="store_true")
    sec.set_defaults(fn=_cmd_sectional)

    t1 = sub.add_parser("table1", help="reproduce the Mathieu cycle-type table")
    t1.set_defaults(fn=_cmd_table1)

    t2 = sub.add_parser("table2", help="reproduce the trinomial factorization table")
    t2.add_argument("--seed", type=int, default=0)
    t2.set_defaults(fn=_cmd_table2)

    ct = sub.add_parser("cycletypes", help="enumerate a group's cycle types")
    ct.add_argument("--group", required=True, help="e.g. M24, PGL(2,5), S7")
    ct.set_defaults(fn=_cmd_cycletypes)

    v = sub.add_parser("verify-identities", help="run all identity checks")
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(fn=_cmd_verify_identities)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except TrigalError as exc:
        print(
            json.dumps(
                {"error": {"kind": type(exc).__name__, "message": str(exc)}},
                sort_keys=True,
                indent=2,
            )
        )
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
