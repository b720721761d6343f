"""Batch command-line front door.

Subcommands parse JSON inputs, run one computation, and emit deterministic
JSON or aligned text.  Exit codes: 0 ok, 1 assertion failure, 2 parse
error, 3 algebra mismatch, 4 validation failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra import (AlgebraElement, face_map, hochschild_d, is_invariant)
from .bialgebra import (DYModuleData, LieBialgebraData, adjoint_module,
                        borel_sl2, drinfeld_double, evaluate,
                        trivial_module, validate_bialgebra)
from .cohomology import cohomology_table
from .coxeter import build_central_family, build_unit_family, \
    check_coxeter_family
from .diagrams import Diagram, maximal_nested_sets, quotient_diagram
from .kacmoody import build_kac_moody_borel, validate_bialgebra_windowed
from .monoids import TRIVIAL, monoid_from_json
from .series import GradedSeries
from .twists import (GaugeObstruction, associator_2jet,
                     check_associator_axioms, gauge, solve_gauge)

OK, FAIL, PARSE, MISMATCH, INVALID = 0, 1, 2, 3, 4


def _load(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        raise SystemExit(PARSE)


def _emit(data, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        _emit_text(data)


def _emit_text(data, indent: int = 0) -> None:
    pad = " " * indent
    if isinstance(data, dict):
        for k in sorted(data):
            v = data[k]
            if isinstance(v, (dict, list)):
                print(f"{pad}{k}:")
                _emit_text(v, indent + 2)
            else:
                print(f"{pad}{k}: {v}")
    elif isinstance(data, list):
        for v in data:
            if isinstance(v, (dict, list)):
                _emit_text(v, indent)
                print()
            else:
                print(f"{pad}{v}")
    else:
        print(f"{pad}{data}")


def cmd_multiply(args) -> int:
    x = AlgebraElement.from_json(_load(args.left))
    y = AlgebraElement.from_json(_load(args.right))
    if x.n != y.n or x.monoid.key() != y.monoid.key():
        print("algebra mismatch", file=sys.stderr)
        return MISMATCH
    _emit((x * y).to_json(), args.format)
    return OK


def cmd_dh(args) -> int:
    x = AlgebraElement.from_json(_load(args.element))
    _emit(hochschild_d(x).to_json(), args.format)
    return OK


def cmd_face(args) -> int:
    x = AlgebraElement.from_json(_load(args.element))
    if not 0 <= args.index <= x.n + 1:
        print("face index out of range", file=sys.stderr)
        return MISMATCH
    _emit(face_map(args.index, x).to_json(), args.format)
    return OK


def cmd_invariant_check(args) -> int:
    x = AlgebraElement.from_json(_load(args.element))
    flag = is_invariant(x)
    _emit({"invariant": flag}, args.format)
    return OK


def cmd_cohomology(args) -> int:
    monoid = (monoid_from_json(json.loads(args.monoid))
              if args.monoid else TRIVIAL)
    rows = []
    for deg in range(1, args.max_degree + 1):
        rows.extend(cohomology_table(deg, args.window, monoid))
    flagged = [r for r in rows if r["n"] <= 1 and r["dim_H"] != 0]
    _emit({"table": rows,
           "low_degree_findings": flagged or "none"}, args.format)
    return OK if not flagged else FAIL


def cmd_nested_sets(args) -> int:
    dia = Diagram.from_json(_load(args.diagram))
    mns = maximal_nested_sets(dia)
    out = {"count": len(mns),
           "nested_sets": [sorted(sorted(m) for m in f) for f in mns]}
    _emit(out, args.format)
    return OK


def cmd_quotient_diagram(args) -> int:
    dia = Diagram.from_json(_load(args.diagram))
    try:
        quot = quotient_diagram(dia, set(args.vertices))
    except ValueError as exc:
        print(f"validation failure: {exc}", file=sys.stderr)
        return INVALID
    _emit(quot.to_json(), args.format)
    return OK


def cmd_realize(args) -> int:
    x = AlgebraElement.from_json(_load(args.element))
    bia = LieBialgebraData.from_json(_load(args.bialgebra))
    report = validate_bialgebra(bia)
    if report:
        _emit({"validation": report}, args.format)
        return INVALID
    mods = []
    for name in args.modules or ["adjoint"] * x.n:
        if name == "adjoint":
            mods.append(adjoint_module(bia))
        elif name == "trivial":
            mods.append(trivial_module(bia))
        else:
            print(f"unknown module {name!r}", file=sys.stderr)
            return PARSE
    if len(mods) != x.n:
        print("module count must match slots", file=sys.stderr)
        return MISMATCH
    matrix = evaluate(x, mods)
    _emit({"matrix": [[str(c) for c in row] for row in matrix]}, args.format)
    return OK


def cmd_km_build(args) -> int:
    data = _load(args.gcm)
    try:
        borel = build_kac_moody_borel(data["cartan"], data.get("cap", 2),
                                      data.get("symmetrizers"))
    except ValueError as exc:
        print(f"validation failure: {exc}", file=sys.stderr)
        return INVALID
    report = validate_bialgebra_windowed(borel, data.get("cap", 2))
    _emit({"dim": borel.dim, "basis": borel.basis_names,
           "weights": borel.weights,
           "windowed_validation": report or "ok"}, args.format)
    return OK if not report else INVALID


def cmd_associator_check(args) -> int:
    phi = associator_2jet(args.max_degree)
    report = check_associator_axioms(phi, args.max_degree)
    _emit(report, args.format)
    return OK if all(r["ok"] for r in report) else FAIL


def cmd_solve_gauge(args) -> int:
    j1 = GradedSeries.from_json(_load(args.left))
    j2 = GradedSeries.from_json(_load(args.right))
    phi = GradedSeries.one(3, j1.order, j1.monoid)
    try:
        u = solve_gauge(j1, j2, phi)
    except GaugeObstruction as exc:
        print(f"assertion failure: {exc}", file=sys.stderr)
        return FAIL
    except ValueError as exc:
        print(f"validation failure: {exc}", file=sys.stderr)
        return INVALID
    _emit(u.to_json(), args.format)
    return OK


def cmd_coxeter_check(args) -> int:
    dia = Diagram.from_json(_load(args.diagram))
    fam = (build_central_family(dia, args.max_degree) if args.family ==
           "central" else build_unit_family(dia, args.max_degree))
    report = check_coxeter_family(fam, dia, args.max_degree)
    summary = {}
    for row in report:
        entry = summary.setdefault(row["check"], {"count": 0, "failures": 0})
        entry["count"] += 1
        entry["failures"] += 0 if row["ok"] else 1
    _emit(summary, args.format)
    return OK if all(v["failures"] == 0 for v in summary.values()) else FAIL


def cmd_verify(args) -> int:
    from . import suites
    if args.suite not in suites.SUITES:
        print(f"unknown suite {args.suite!r}; known: "
              f"{', '.join(sorted(suites.SUITES))}", file=sys.stderr)
        return PARSE
    results = suites.SUITES[args.suite](seed=args.seed)
    _emit(results, args.format)
    return OK if all(r["ok"] for r in results["assertions"]) else FAIL


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="dyalg",
        description="exact computations in diagram algebras")
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-degree", type=int, default=2)
    parser.add_argument("--weight-cap", type=int, default=4)
    parser.add_argument("--window", type=int, default=3)
    parser.add_argument("--config", default=None,
                        help="JSON file with defaults for the flags above")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("multiply", help="product of two element files")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(fn=cmd_multiply)

    p = sub.add_parser("dH", help="Hochschild differential of an element")
    p.add_argument("element")
    p.set_defaults(fn=cmd_dh)

    p = sub.add_parser("face", help="single face map of an element")
    p.add_argument("element")
    p.add_argument("index", type=int)
    p.set_defaults(fn=cmd_face)

    p = sub.add_parser("invariant-check", help="commutant invariance test")
    p.add_argument("element")
    p.set_defaults(fn=cmd_invariant_check)

    p = sub.add_parser("cohomology", help="cohomology table vs oracle")
    p.add_argument("--monoid", default=None,
                   help="monoid JSON string; default undecorated")
    p.set_defaults(fn=cmd_cohomology)

    p = sub.add_parser("nested-sets", help="maximal nested sets of a diagram")
    p.add_argument("diagram")
    p.set_defaults(fn=cmd_nested_sets)

    p = sub.add_parser("quotient-diagram", help="quotient by a subdiagram")
    p.add_argument("diagram")
    p.add_argument("vertices", nargs="+", type=int)
    p.set_defaults(fn=cmd_quotient_diagram)

    p = sub.add_parser("realize", help="evaluate an element on modules")
    p.add_argument("element")
    p.add_argument("bialgebra")
    p.add_argument("--modules", nargs="*", default=None,
                   help="module names: adjoint or trivial, one per slot")
    p.set_defaults(fn=cmd_realize)

    p = sub.add_parser("km-build", help="build a truncated Kac-Moody Borel")
    p.add_argument("gcm", help='JSON: {"cartan": [[2,...]], "cap": 2}')
    p.set_defaults(fn=cmd_km_build)

    p = sub.add_parser("associator-check",
                       help="axioms of the quadratic-jet associator")
    p.set_defaults(fn=cmd_associator_check)

    p = sub.add_parser("solve-gauge", help="gauge between two twist files")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(fn=cmd_solve_gauge)

    p = sub.add_parser("coxeter-check", help="axiom report for a family")
    p.add_argument("diagram")
    p.add_argument("--family", choices=("unit", "central"), default="central")
    p.set_defaults(fn=cmd_coxeter_check)

    p = sub.add_parser("verify", help="run a named assertion suite")
    p.add_argument("suite")
    p.set_defaults(fn=cmd_verify)

    args = parser.parse_args(argv)
    if args.config:
        cfg = _load(args.config)
        for key, val in cfg.items():
            attr = key.replace("-", "_")
            if hasattr(args, attr):
                setattr(args, attr, val)
    return args.fn(args)


if __name__ == "__main__":
    raise SystemExit(main())
