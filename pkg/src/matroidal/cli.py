"""Command-line front end.

    matroidal containment --input ideal.json --m 8 --r 7
    matroidal resurgence --uniform 2 3
    matroidal verify-paper

Exit status: 0 on success, 1 on a domain error (bad axioms, violated
hypotheses, failed checks), 2 on unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import formats
from .combinatorics import (
    Matroid,
    fmt_set,
    is_peaked,
    sorted_sets,
    verify_basis_axioms,
    verify_circuit_axioms,
)
from .ideals import (
    MonomialIdeal,
    factor_into_squarefree,
    mono_str,
    power,
    symbolic_power,
)
from .resurgence import (
    BoundContext,
    containment,
    containment_table,
    resurgence_search,
    uniform_ideal,
    uniform_resurgence,
    upper_bound,
)


def _load(path: str):
    return formats.parse_object(formats.load_json(path))


def _emit_ideal(I: MonomialIdeal, fmt: str) -> str:
    if fmt == "json":
        return formats.dumps(formats.to_dict(I))
    if fmt == "csv":
        return "\n".join(",".join(str(e) for e in g) for g in I.generators)
    lines = [f"{len(I.generators)} minimal generators in {I.variables} variables"]
    lines += [f"  {json.dumps(list(g))}  {mono_str(g)}" for g in I.generators]
    return "\n".join(lines)


def _workers(args) -> int:
    if args.workers is not None:
        return args.workers
    env = os.environ.get("RESURGENCE_WORKERS")
    return int(env) if env else 1


def cmd_check_matroid(args) -> int:
    doc = formats.load_json(args.input)
    if not isinstance(doc, dict):
        raise formats.InputFormatError("expected a JSON object")
    s = formats.int_field(doc.get("ground_set"), "ground_set")
    if "circuits" in doc:
        kind, report = "circuit", verify_circuit_axioms(formats.int_lists(doc["circuits"], "circuits"), s)
        build = Matroid.from_circuits
        sets = doc["circuits"]
    elif "bases" in doc or "facets" in doc:
        key = "bases" if "bases" in doc else "facets"
        kind, report = "basis", verify_basis_axioms(formats.int_lists(doc[key], key), s)
        build = Matroid.from_bases
        sets = doc[key]
    else:
        raise formats.InputFormatError("expected circuits, bases or facets")
    print(f"{kind} axioms: {report.describe()}")
    if not report:
        return 1
    M = build(s, sets)
    if args.format == "json":
        print(formats.dumps({"ground_set": s, "rank": M.rank,
                             "bases": [list(B) for B in sorted_sets(M.bases)],
                             "circuits": [list(C) for C in sorted_sets(M.circuits)]}))
    else:
        print(f"rank: {M.rank}")
        print("bases: " + " ".join(fmt_set(B) for B in sorted_sets(M.bases)))
        print("circuits: " + " ".join(fmt_set(C) for C in sorted_sets(M.circuits)))
    return 0


def cmd_cover_ideal(args) -> int:
    print(_emit_ideal(formats.as_ideal(_load(args.input)), args.format))
    return 0


def cmd_symbolic_power(args) -> int:
    print(_emit_ideal(symbolic_power(formats.as_ideal(_load(args.input)), args.m), args.format))
    return 0


def cmd_power(args) -> int:
    print(_emit_ideal(power(formats.as_ideal(_load(args.input)), args.r), args.format))
    return 0


def cmd_containment(args) -> int:
    rep = containment(formats.as_ideal(_load(args.input)), args.m, args.r)
    if args.format == "json":
        print(formats.dumps({"m": rep.m, "r": rep.r, "holds": rep.holds,
                             "witness": list(rep.witness) if rep.witness else None}))
    elif args.format == "csv":
        print(formats.containment_csv([rep]), end="")
    else:
        line = f"holds: {'true' if rep.holds else 'false'}"
        if rep.witness is not None:
            line += ", witness: " + json.dumps(list(rep.witness), separators=(",", ":"))
        print(line)
    return 0


def cmd_containment_table(args) -> int:
    reports = containment_table(formats.as_ideal(_load(args.input)), args.m_max, args.r_max)
    if args.format == "csv":
        print(formats.containment_csv(reports), end="")
    elif args.format == "json":
        print(formats.dumps([{"m": r.m, "r": r.r, "holds": r.holds,
                              "witness": list(r.witness) if r.witness else None} for r in reports]))
    else:
        print(f"{'m':>3} {'r':>3}  holds  witness")
        for r in reports:
            print(f"{r.m:>3} {r.r:>3}  {'yes' if r.holds else 'no ':<5}  {mono_str(r.witness) if r.witness else ''}")
    return 0


def cmd_resurgence(args) -> int:
    if args.uniform:
        c, n = args.uniform
        rho = uniform_resurgence(c, n)
        if args.m_max is None:
            print(formats.dumps({"c": c, "n": n, "resurgence": formats.fraction_str(rho)})
                  if args.format == "json" else formats.fraction_str(rho))
            return 0
        I, formula = uniform_ideal(c, n), rho
    else:
        if not args.input:
            raise formats.InputFormatError("resurgence needs --input or --uniform C N")
        I, formula = formats.as_ideal(_load(args.input)), None
    est = resurgence_search(I, args.m_max or 12, args.r_max or 10, workers=_workers(args), formula_value=formula)
    if args.format == "json":
        print(formats.dumps(formats.estimate_to_dict(est)))
    else:
        if est.best_ratio is None:
            print(f"no failed containment for m <= {est.search_bounds[0]}, r <= {est.search_bounds[1]}")
        else:
            m, r = est.witness_pair
            print(f"best ratio: {formats.fraction_str(est.best_ratio)} (m={m}, r={r}, witness {mono_str(est.witness)})")
        if formula is not None:
            print(f"formula: {formats.fraction_str(formula)}")
        if not args.uniform:
            bound, reason = upper_bound(BoundContext.from_ideal(I))
            print(f"c-1 bound: {bound if bound is not None else 'none'} ({reason})")
    return 0


def cmd_peaked(args) -> int:
    d = formats.as_complex(_load(args.input))
    cert = is_peaked(d)
    ctx = BoundContext.from_complex(d)
    if args.format == "json":
        print(formats.dumps({
            "peaked": cert is not None,
            "witness_set": sorted(cert.witness_set) if cert else None,
            "c": ctx.c, "n": ctx.n, "k": ctx.k,
        }))
        return 0
    if cert is None:
        print("peaked: false")
    else:
        print(f"peaked: true, A = {fmt_set(cert.witness_set)}")
        for i, fam in cert.per_vertex_facets.items():
            print(f"  F_{i}: " + " ".join(fmt_set(F) for F in sorted_sets(fam)))
    print(f"c = {ctx.c}, n = {ctx.n}, k = {ctx.k}")
    return 0


def cmd_factor(args) -> int:
    try:
        mono = [int(x) for x in args.monomial.split(",")]
    except ValueError:
        raise formats.InputFormatError(f"--monomial must be comma-separated integers, got {args.monomial!r}") from None
    factors = factor_into_squarefree(mono, args.a, args.b)
    if args.format == "json":
        print(formats.dumps([list(f) for f in factors]))
    else:
        print(" * ".join(mono_str(f) for f in factors))
    return 0


def cmd_verify_paper(args) -> int:
    from .regression import run_all

    results = run_all()
    for name, ok, detail in results:
        print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
    failed = sum(not ok for _, ok, _ in results)
    print(f"{len(results) - failed}/{len(results)} fixtures passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="matroidal", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="verb", required=True, metavar="verb")

    def add(name, fn, help, input=True, fmt=True):
        p = sub.add_parser(name, help=help)
        if input:
            p.add_argument("--input", required=True, help="JSON complex, matroid or ideal")
        if fmt:
            p.add_argument("--format", choices=["table", "json", "csv"], default="table")
        p.set_defaults(func=fn)
        return p

    add("check-matroid", cmd_check_matroid, "verify circuit or basis axioms")
    add("cover-ideal", cmd_cover_ideal, "cover ideal of a complex or matroid")
    add("symbolic-power", cmd_symbolic_power, "minimal generators of I^(m)").add_argument("--m", type=int, required=True)
    add("power", cmd_power, "minimal generators of I^r").add_argument("--r", type=int, required=True)
    p = add("containment", cmd_containment, "decide I^(m) <= I^r")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p = add("containment-table", cmd_containment_table, "containment on a grid of (m, r)")
    p.add_argument("--m-max", type=int, default=12)
    p.add_argument("--r-max", type=int, default=10)
    p = add("resurgence", cmd_resurgence, "resurgence formula or grid search", input=False)
    p.add_argument("--input")
    p.add_argument("--uniform", type=int, nargs=2, metavar=("C", "N"))
    p.add_argument("--m-max", type=int)
    p.add_argument("--r-max", type=int)
    p.add_argument("--workers", type=int, help="worker processes (default: $RESURGENCE_WORKERS or 1)")
    add("peaked", cmd_peaked, "search for a peaked certificate")
    p = add("factor", cmd_factor, "split a monomial into squarefree factors", input=False)
    p.add_argument("--monomial", required=True, help="exponent vector, e.g. 2,1,1")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    add("verify-paper", cmd_verify_paper, "run the bundled regression fixtures", input=False, fmt=False)
    return ap


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (formats.InputFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
