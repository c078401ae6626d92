import itertools
from fractions import Fraction
from math import ceil

import pytest
from hypothesis import given
from hypothesis import strategies as st

from matroidal import SimplicialComplex, is_peaked, uniform_matroid
from matroidal.ideals import MonomialIdeal, contains, cover_ideal, height, power, prime_ideal, symbolic_power
from matroidal.resurgence import (
    BoundContext,
    ContainmentReport,
    containment,
    containment_table,
    peak_containment_check,
    resurgence_search,
    uniform_containment_bound,
    uniform_ideal,
    uniform_resurgence,
    uniform_strict_containment,
    upper_bound,
    verify_uniform_theorem,
)

from oracles import in_ordinary_power, symbolic_power_box


def cx(s, *facets):
    return SimplicialComplex(s, frozenset(frozenset(F) for F in facets))


NONPEAKED = MonomialIdeal.from_supports(4, [{1, 3}, {1, 2, 4}, {2, 3, 4}])
SQUARE = cx(4, {1, 3}, {1, 4}, {2, 3}, {2, 4})


def test_report_invariant():
    with pytest.raises(ValueError):
        ContainmentReport(1, 1, True, (1, 0))
    with pytest.raises(ValueError):
        ContainmentReport(1, 1, False, None)


def test_containment_examples():
    rep = containment(NONPEAKED, 8, 7)
    assert not rep.holds and rep.witness == (4, 4, 4, 4)
    assert containment(NONPEAKED, 1, 1).holds
    I = uniform_ideal(2, 3)
    assert containment(I, 3, 2).holds
    assert not containment(I, 3, 3).holds
    with pytest.raises(ValueError):
        containment(I, 0, 1)


def test_witness_is_a_failing_generator():
    for m, r in [(8, 7), (4, 3), (6, 5)]:
        rep = containment(NONPEAKED, m, r)
        if not rep.holds:
            assert rep.witness in symbolic_power(NONPEAKED, m).generators
            assert rep.witness not in power(NONPEAKED, r)


def test_containment_against_product_oracle():
    # power membership by enumerating r-fold products, symbolic power from the box scan
    for c, n in [(2, 3), (2, 4), (3, 4)]:
        _, d = uniform_matroid(c, n)
        gens = list(cover_ideal(d).generators)
        for m in range(1, 5):
            box = symbolic_power_box(d.sorted_facets(), n, m)
            for r in range(1, 5):
                expect = all(in_ordinary_power(gens, r, g) for g in box)
                assert containment(uniform_ideal(c, n), m, r).holds == expect, (c, n, m, r)


def test_strict_containment_examples():
    assert uniform_strict_containment(2, 3, 3, 2)
    assert not uniform_strict_containment(2, 3, 3, 3)
    assert uniform_containment_bound(2, 3, 3) == Fraction(5, 2)
    for m in range(1, 8):
        assert uniform_containment_bound(4, 4, m) == m
    assert uniform_containment_bound(2, 4, 4) == Fraction(8, 3)
    assert uniform_strict_containment(2, 4, 4, 2) and not uniform_strict_containment(2, 4, 4, 3)
    assert containment(uniform_ideal(2, 4), 4, 2).holds
    assert not containment(uniform_ideal(2, 4), 4, 3).holds


@given(st.integers(1, 8), st.integers(1, 12), st.integers(1, 60), st.integers(1, 60))
def test_strict_containment_formula_is_exact(c, extra, m, r):
    n = c + extra - 1
    lhs = r * (n - c + 1)
    rhs = ceil(m / c) * (n - c) + m
    assert uniform_strict_containment(c, n, m, r) == (lhs <= rhs)


def test_uniform_resurgence_examples():
    assert uniform_resurgence(2, 3) == Fraction(4, 3)
    assert uniform_resurgence(3, 5) == Fraction(9, 5)
    for n in range(1, 9):
        assert uniform_resurgence(n, n) == 1
    with pytest.raises(ValueError):
        uniform_resurgence(4, 3)


def test_upper_bound_examples():
    ctx = BoundContext.from_complex(uniform_matroid(2, 4)[1])
    assert (ctx.k, ctx.peaked) == (1, False)
    assert upper_bound(ctx)[0] is None
    ctx = BoundContext.from_complex(SQUARE)
    assert (ctx.c, ctx.n, ctx.k, ctx.peaked) == (2, 4, 1, True)
    assert upper_bound(ctx) == (1, "k=1 and peaked")
    ctx = BoundContext.from_complex(uniform_matroid(3, 4)[1])
    assert ctx.k == 2 and upper_bound(ctx) == (2, "k>1")


def test_bound_context_k_characterization(zoo):
    for d in zoo:
        ctx = BoundContext.from_complex(d)
        assert ctx.k >= 1
        assert (ctx.k > 1) == (ctx.n >= 2 * (ctx.n - ctx.c + 1))


def test_peak_containment_examples():
    assert peak_containment_check(cover_ideal(SQUARE), BoundContext.from_complex(SQUARE))
    _, d = uniform_matroid(3, 4)
    assert peak_containment_check(cover_ideal(d), BoundContext.from_complex(d))
    with pytest.raises(ValueError, match="hypothesis"):
        peak_containment_check(NONPEAKED, BoundContext.from_ideal(NONPEAKED))


def test_peak_containment_on_applicable_zoo(zoo5):
    seen = 0
    for d in zoo5:
        ctx = BoundContext.from_complex(d)
        if upper_bound(ctx)[0] is None or ctx.c < 2:
            continue
        assert peak_containment_check(cover_ideal(d), ctx, m_max=ctx.c + 3)
        seen += 1
    assert seen > 10


def test_search_examples():
    est = resurgence_search(NONPEAKED, 8, 7)
    assert est.best_ratio >= Fraction(8, 7) > height(NONPEAKED) - 1
    assert est.search_bounds == (8, 7)
    m, r = est.witness_pair
    assert Fraction(m, r) == est.best_ratio
    assert not containment(NONPEAKED, m, r).holds
    est = resurgence_search(prime_ideal({1, 2}, 3), 6, 6)
    assert est.best_ratio is None and est.witness_pair is None


def test_search_bad_bounds():
    with pytest.raises(ValueError):
        resurgence_search(NONPEAKED, 0, 3)


def test_search_parallel_matches_serial():
    I = uniform_ideal(2, 4)
    assert resurgence_search(I, 14, 12, workers=1) == resurgence_search(I, 14, 12, workers=3)


def test_search_tie_break_prefers_small_m():
    # 6/5 and 12/10 tie; the smaller pair is reported
    est = resurgence_search(NONPEAKED, 12, 10)
    m, r = est.witness_pair
    assert all(
        Fraction(mm, rr) < est.best_ratio or (mm, rr) >= (m, r)
        for mm in range(1, 13) for rr in range(1, 11)
        if not containment(NONPEAKED, mm, rr).holds
    )


def test_uniform_ratios_stay_below_formula():
    I, rho = uniform_ideal(2, 3), uniform_resurgence(2, 3)
    est = resurgence_search(I, 40, 31, formula_value=rho)
    assert est.best_ratio == Fraction(38, 29) and est.witness_pair == (38, 29)
    assert rho - Fraction(1, 20) < est.best_ratio < rho
    assert est.formula_value == rho
    for c, n in [(2, 4), (3, 4), (3, 5), (2, 5)]:
        est = resurgence_search(uniform_ideal(c, n), 12, 10)
        assert est.best_ratio < uniform_resurgence(c, n)


def test_bound_holds_where_it_applies(zoo5):
    for d in zoo5:
        ctx = BoundContext.from_complex(d)
        bound, _ = upper_bound(ctx)
        if bound is None or ctx.c < 2:
            continue
        est = resurgence_search(cover_ideal(d), 8, 8)
        assert est.best_ratio is None or est.best_ratio < bound, d.sorted_facets()


def test_monotone_in_r():
    for I in [NONPEAKED, uniform_ideal(2, 3), uniform_ideal(3, 5), cover_ideal(SQUARE)]:
        table = {(t.m, t.r): t.holds for t in containment_table(I, 8, 8)}
        for m in range(1, 9):
            row = [table[m, r] for r in range(1, 9)]
            assert row == sorted(row, reverse=True)


def test_containment_fails_above_m():
    # I^(m) always contains a generator of degree below (m+1) * min degree
    for I in [NONPEAKED, uniform_ideal(2, 3), cover_ideal(SQUARE), prime_ideal({1, 2}, 3)]:
        for m in range(1, 6):
            assert not containment(I, m, m + 1).holds


def test_diagonal_failures_on_non_normal_ideals():
    # I^(m) != I^m detected on the diagonal for ideals whose powers differ
    for I in [NONPEAKED, uniform_ideal(2, 3), uniform_ideal(2, 4), uniform_ideal(3, 4)]:
        assert any(not containment(I, m, m).holds for m in range(1, 7))
    # the bipartite cover ideal has equal symbolic and ordinary powers
    J = cover_ideal(SQUARE)
    assert all(symbolic_power(J, m) == power(J, m) for m in range(1, 6))


def test_uniform_grid_small():
    assert verify_uniform_theorem(2, 3, 10, 8) == (True, None)
    assert verify_uniform_theorem(2, 4, 8, 6) == (True, None)
    assert verify_uniform_theorem(3, 3, 6, 6) == (True, None)


def test_uniform_ideal_with_loops():
    I = uniform_ideal(2, 3, 5)
    assert I.variables == 5
    assert all(g[3] == g[4] == 0 for g in I.generators)
    for m, r in itertools.product(range(1, 6), repeat=2):
        assert containment(I, m, r).holds == uniform_strict_containment(2, 3, m, r)


def test_peaked_flag_matches_search():
    assert BoundContext.from_complex(SQUARE).peaked == (is_peaked(SQUARE) is not None)
    assert contains(power(cover_ideal(SQUARE), 2), symbolic_power(cover_ideal(SQUARE), 2))
