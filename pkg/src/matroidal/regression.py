"""Regression fixtures shipped with the package, run by ``matroidal verify-paper``.

Each fixture under ``fixtures/`` stores an input together with its expected
results.  A check returns ``(ok, detail)``; :func:`run_all` collects them in a
fixed order.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources
from typing import Callable

from .combinatorics import (
    SimplicialComplex,
    cocircuits,
    delta_m,
    dual_matroid,
    is_matroid_complex,
    is_peaked,
    matroid_of_complex,
    sorted_sets,
    uniform_matroid,
    verify_basis_axioms,
    verify_circuit_axioms,
)
from .ideals import (
    MonomialIdeal,
    alexander_dual,
    associated_complex,
    contains,
    cover_ideal,
    factor_into_squarefree,
    generators_theorem37,
    height,
    intersect_all,
    power,
    prime_ideal,
    squarefree_part,
    stanley_reisner,
    symbolic_membership,
    symbolic_power,
)
from .resurgence import (
    BoundContext,
    containment,
    peak_containment_check,
    resurgence_search,
    uniform_ideal,
    uniform_resurgence,
    uniform_strict_containment,
    upper_bound,
    verify_uniform_theorem,
)

Check = Callable[[], tuple[bool, str]]
CHECKS: list[tuple[str, Check]] = []


def check(name: str):
    def register(fn: Check) -> Check:
        CHECKS.append((name, fn))
        return fn

    return register


def fixture(name: str) -> dict:
    return json.loads(resources.files("matroidal.fixtures").joinpath(name).read_text())


def _lists(sets) -> list[list[int]]:
    return [list(t) for t in sorted_sets(sets)]


@check("rank-2 matroid complex: cover ideal, duality, axioms")
def _rank2_complex():
    doc = fixture("rank2_matroid_complex.json")
    exp = doc["expected"]
    d = SimplicialComplex(doc["ground_set"], frozenset(frozenset(F) for F in doc["facets"]))
    J = cover_ideal(d)
    # the same ideal, built as an explicit intersection of facet primes
    J_direct = intersect_all([prime_ideal(F, d.ground_set) for F in d.sorted_facets()], d.ground_set)
    M = matroid_of_complex(d)
    got = {
        "cover_ideal_supports": [list(t) for t in J.supports()],
        "alexander_dual_supports": [list(t) for t in alexander_dual(J).supports()],
        "cocircuits": _lists(cocircuits(M)),
        "circuits": [list(t) for t in stanley_reisner(d).supports()],
        "dual_bases": _lists(dual_matroid(M).bases),
        "delta_2_facets": [list(F) for F in delta_m(d, 2).sorted_facets()],
        "squarefree_part_2": [list(g) for g in squarefree_part(symbolic_power(J, 2)).generators],
        "height": height(J),
        "is_matroid_complex": is_matroid_complex(d),
    }
    ok = got == exp and J_direct == J
    ok &= verify_circuit_axioms(J.supports(), d.ground_set).ok
    ok &= verify_basis_axioms(alexander_dual(J).supports(), d.ground_set).ok
    ok &= generators_theorem37(J, 3) == symbolic_power(J, 3)
    bad = [k for k in exp if got[k] != exp[k]]
    return ok, "cover ideal " + str(J) + ("" if not bad else f"; mismatched: {', '.join(bad)}")


@check("non-peaked rank-2 ideal: I^(8) not in I^7")
def _nonpeaked():
    doc = fixture("nonpeaked_rank2.json")
    exp = doc["expected"]
    I = MonomialIdeal(doc["variables"], tuple(tuple(g) for g in doc["generators"]))
    d = associated_complex(I)
    ctx = BoundContext.from_ideal(I)
    rep = containment(I, exp["containment"]["m"], exp["containment"]["r"])
    mem = exp["symbolic_member"]
    est = resurgence_search(I, exp["search"]["m_max"], exp["search"]["r_max"])
    ok = (
        height(I) == exp["height"]
        and ctx.k == exp["k"]
        and (is_peaked(d) is not None) == exp["peaked"]
        and [list(F) for F in d.sorted_facets()] == exp["facets"]
        and symbolic_membership(I, tuple(mem["monomial"]), mem["m"])
        and rep.holds == exp["containment"]["holds"]
        and list(rep.witness or ()) == exp["containment"]["witness"]
        and est.best_ratio >= Fraction(exp["search"]["min_ratio"])
        and est.best_ratio > ctx.c - 1
        and upper_bound(ctx)[0] is None
    )
    try:
        peak_containment_check(I, ctx)
        ok = False
    except ValueError:
        pass
    return ok, f"holds={rep.holds}, witness={list(rep.witness or ())}, best ratio {est.best_ratio}"


@check("graph 12,13,14,23 is not peaked")
def _four_edges():
    doc = fixture("four_edges_not_peaked.json")
    d = SimplicialComplex(doc["ground_set"], frozenset(frozenset(F) for F in doc["facets"]))
    exp = doc["expected"]
    ok = (is_peaked(d) is not None) == exp["peaked"] and is_matroid_complex(d) == exp["is_matroid_complex"]
    return ok, f"peaked={is_peaked(d) is not None}"


@check("bipartite 4-cycle: peaked, c-1 bound and peak containment")
def _bipartite():
    doc = fixture("bipartite_square.json")
    exp = doc["expected"]
    d = SimplicialComplex(doc["ground_set"], frozenset(frozenset(F) for F in doc["facets"]))
    cert = is_peaked(d)
    ctx = BoundContext.from_complex(d)
    bound, reason = upper_bound(ctx)
    J = cover_ideal(d)
    ok = (
        cert is not None
        and cert.check(d)
        and sorted(cert.witness_set) == exp["witness_set"]
        and ctx.k == exp["k"]
        and bound == exp["bound"]
        and peak_containment_check(J, ctx) == exp["peak_containment"]
        and is_matroid_complex(d) == exp["is_matroid_complex"]
    )
    return ok, f"A={sorted(cert.witness_set) if cert else None}, bound {bound} ({reason})"


@check("uniform matroids: closed-form containment on grids")
def _uniform_grids():
    doc = fixture("uniform.json")
    details, ok = [], True
    for g in doc["grids"]:
        good, bad = verify_uniform_theorem(g["c"], g["n"], g["m_max"], g["r_max"])
        ok &= good
        details.append(f"U_{g['c']},{g['n']}" + ("" if good else f" mismatch {bad}"))
    for case in doc["strict_containment"]:
        ok &= uniform_strict_containment(case["c"], case["n"], case["m"], case["r"]) == case["holds"]
        ok &= containment(uniform_ideal(case["c"], case["n"]), case["m"], case["r"]).holds == case["holds"]
    for case in doc["not_applicable"]:
        _, d = uniform_matroid(case["c"], case["n"])
        ok &= upper_bound(BoundContext.from_complex(d))[0] is None
    return ok, "grids " + ", ".join(details)


@check("uniform matroids: resurgence formula and search")
def _uniform_resurgence():
    doc = fixture("uniform.json")
    ok = all(uniform_resurgence(r["c"], r["n"]) == Fraction(r["value"]) for r in doc["resurgence"])
    sp = doc["symbolic_power"]
    I = uniform_ideal(sp["c"], sp["n"])
    ok &= [list(g) for g in symbolic_power(I, sp["m"]).generators] == sp["generators"]
    ok &= generators_theorem37(I, sp["m"]) == symbolic_power(I, sp["m"])
    ok &= contains(I, symbolic_power(I, sp["m"]))
    q = doc["search"]
    est = resurgence_search(uniform_ideal(q["c"], q["n"]), q["m_max"], q["r_max"])
    rho = uniform_resurgence(q["c"], q["n"])
    ok &= est.best_ratio == Fraction(q["best_ratio"]) and list(est.witness_pair) == q["witness_pair"]
    ok &= est.best_ratio < rho
    return ok, f"best ratio {est.best_ratio} at {est.witness_pair}, formula {rho}"


@check("peak containment for k > 1")
def _peak_k2():
    doc = fixture("uniform.json")
    ok, seen = True, []
    for case in doc["peak_containment"]:
        _, d = uniform_matroid(case["c"], case["n"])
        ctx = BoundContext.from_complex(d)
        ok &= ctx.k > 1 and peak_containment_check(cover_ideal(d), ctx)
        seen.append(f"U_{case['c']},{case['n']} k={ctx.k}")
    return ok, ", ".join(seen)


@check("Hochster-Huneke: I^(ct) in I^t")
def _hochster_huneke():
    ideals = [uniform_ideal(2, 3), uniform_ideal(3, 4), uniform_ideal(2, 4)]
    doc = fixture("nonpeaked_rank2.json")
    ideals.append(MonomialIdeal(doc["variables"], tuple(tuple(g) for g in doc["generators"])))
    ok = all(contains(power(I, t), symbolic_power(I, height(I) * t)) for I in ideals for t in (1, 2, 3))
    return ok, f"{len(ideals)} ideals, t <= 3"


@check("squarefree factorization")
def _factorization():
    doc = fixture("factorization.json")
    ok = all(
        [list(f) for f in factor_into_squarefree(c["monomial"], c["a"], c["b"])] == c["factors"]
        for c in doc["cases"]
    )
    for c in doc["invalid"]:
        try:
            factor_into_squarefree(c["monomial"], c["a"], c["b"])
            ok = False
        except ValueError:
            pass
    return ok, f"{len(doc['cases'])} valid, {len(doc['invalid'])} rejected"


def run_all() -> list[tuple[str, bool, str]]:
    results = []
    for name, fn in CHECKS:
        try:
            ok, detail = fn()
        except Exception as exc:  # a crashing check is a failed check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append((name, bool(ok), detail))
    return results
