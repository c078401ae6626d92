"""Containment of symbolic powers in ordinary powers, resurgence formulas and
grid searches that certify them.

All ratios are :class:`fractions.Fraction`; no predicate touches floats.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import SimplicialComplex, is_peaked, uniform_matroid
from .ideals import (
    Monomial,
    MonomialIdeal,
    associated_complex,
    contains,
    cover_ideal,
    first_nonmember,
    power,
    symbolic_power,
)


@dataclass(frozen=True)
class ContainmentReport:
    m: int
    r: int
    holds: bool
    witness: Monomial | None = None

    def __post_init__(self):
        if self.holds == (self.witness is not None):
            raise ValueError("witness must be present exactly when containment fails")


@dataclass(frozen=True)
class ResurgenceEstimate:
    """Largest ``m/r`` seen among failed containments in a finite grid.

    ``best_ratio`` is None when no failure was found.  ``formula_value`` is
    the closed-form resurgence when one is known; the supremum need not be
    attained, so ``best_ratio`` may stay strictly below it.
    """

    best_ratio: Fraction | None
    witness_pair: tuple[int, int] | None
    search_bounds: tuple[int, int]
    formula_value: Fraction | None = None
    witness: Monomial | None = None


@dataclass(frozen=True)
class BoundContext:
    c: int
    n: int
    k: int
    peaked: bool

    @classmethod
    def from_complex(cls, d: SimplicialComplex) -> "BoundContext":
        c, n = d.min_facet_size, d.n
        return cls(c=c, n=n, k=n // (n - c + 1), peaked=is_peaked(d) is not None)

    @classmethod
    def from_ideal(cls, i: MonomialIdeal) -> "BoundContext":
        return cls.from_complex(associated_complex(i))


def containment(i: MonomialIdeal, m: int, r: int) -> ContainmentReport:
    """Decide ``I^(m) <= I^r``; on failure the witness is the lowest-degree
    (then lexicographically first) minimal generator of ``I^(m)`` outside ``I^r``."""
    if m < 1 or r < 1:
        raise ValueError(f"m and r must be >= 1, got m={m}, r={r}")
    w = first_nonmember(power(i, r), symbolic_power(i, m))
    return ContainmentReport(m, r, w is None, w)


def containment_table(i: MonomialIdeal, m_max: int, r_max: int) -> list[ContainmentReport]:
    return [containment(i, m, r) for m in range(1, m_max + 1) for r in range(1, r_max + 1)]


def uniform_containment_bound(c: int, n: int, m: int) -> Fraction:
    """``(ceil(m/c) (n - c) + m) / (n - c + 1)``: the largest admissible ``r``
    (as a rational) with ``I^(m) <= I^r`` for U_{c,n}."""
    _check_uniform(c, n)
    return Fraction(-(-m // c) * (n - c) + m, n - c + 1)


def uniform_strict_containment(c: int, n: int, m: int, r: int) -> bool:
    if m < 1 or r < 1:
        raise ValueError(f"m and r must be >= 1, got m={m}, r={r}")
    return r <= uniform_containment_bound(c, n, m)


def uniform_resurgence(c: int, n: int) -> Fraction:
    _check_uniform(c, n)
    return Fraction(c * (n - c + 1), n)


def _check_uniform(c: int, n: int) -> None:
    if not 1 <= c <= n:
        raise ValueError(f"need 1 <= c <= n, got c={c}, n={n}")


def upper_bound(ctx: BoundContext) -> tuple[int | None, str]:
    """The bound ``c - 1`` on the resurgence with the reason it applies,
    or ``(None, reason)`` when neither hypothesis holds."""
    if ctx.k > 1:
        return ctx.c - 1, "k>1"
    if ctx.peaked:
        return ctx.c - 1, "k=1 and peaked"
    return None, "not applicable: k=1 and not peaked"


def peak_containment_check(i: MonomialIdeal, ctx: BoundContext, m_max: int | None = None) -> bool:
    """Check ``I^(c) <= I^2`` and ``I^(m) <= I^ceil(m/(c-1))`` for ``c < m <= m_max`` directly."""
    bound, reason = upper_bound(ctx)
    if bound is None:
        raise ValueError(f"peak containment hypothesis fails ({reason})")
    c = ctx.c
    if c < 2:
        raise ValueError("peak containment needs height c >= 2")
    m_max = c + 4 if m_max is None else m_max
    if not contains(power(i, 2), symbolic_power(i, c)):
        return False
    return all(
        contains(power(i, math.ceil(Fraction(m, c - 1))), symbolic_power(i, m))
        for m in range(c + 1, m_max + 1)
    )


def _first_failure(i: MonomialIdeal, m: int, r_max: int) -> tuple[int, int | None, Monomial | None]:
    # containment is monotone in r, so the first failing r carries the best ratio
    # for this m.  r > m always fails by degree (ratio below 1) and is skipped.
    for r in range(1, min(m, r_max) + 1):
        rep = containment(i, m, r)
        if not rep.holds:
            return m, r, rep.witness
    return m, None, None


def resurgence_search(
    i: MonomialIdeal,
    m_max: int,
    r_max: int,
    workers: int = 1,
    formula_value: Fraction | None = None,
) -> ResurgenceEstimate:
    """Scan ``1 <= m <= m_max``, ``1 <= r <= min(m, r_max)`` for the largest ``m/r`` with ``I^(m) not<= I^r``.

    Pairs with ``r > m`` are left out: they always fail and only give ratios
    below 1, so ``best_ratio is None`` means no failure with ``r <= m`` (for
    instance a prime ideal, whose symbolic and ordinary powers agree).  Ties go to the smallest ``m`` (then smallest ``r``).  Rows are
    independent, so ``workers > 1`` farms them out to processes; the merge is
    the same as the serial one.
    """
    if m_max < 1 or r_max < 1:
        raise ValueError("search bounds must be >= 1")
    ms = range(1, m_max + 1)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            rows = list(ex.map(_first_failure, [i] * len(ms), ms, [r_max] * len(ms)))
    else:
        rows = [_first_failure(i, m, r_max) for m in ms]
    best, pair, witness = None, None, None
    for m, r, w in sorted(rows):
        if r is None:
            continue
        ratio = Fraction(m, r)
        if best is None or ratio > best:
            best, pair, witness = ratio, (m, r), w
    return ResurgenceEstimate(best, pair, (m_max, r_max), formula_value, witness)


def uniform_ideal(c: int, n: int, s: int | None = None) -> MonomialIdeal:
    """Cover ideal of the U_{c,n} complex."""
    return cover_ideal(uniform_matroid(c, n, s)[1])


def verify_uniform_theorem(
    c: int, n: int, m_max: int, r_max: int
) -> tuple[bool, tuple[int, int, bool, bool] | None]:
    """Compare brute-force containment with the closed form on the whole grid.

    Returns ``(True, None)`` or ``(False, (m, r, brute, formula))`` for the
    first mismatch in m-major order.
    """
    i = uniform_ideal(c, n)
    for m in range(1, m_max + 1):
        for r in range(1, r_max + 1):
            brute = containment(i, m, r).holds
            formula = uniform_strict_containment(c, n, m, r)
            if brute != formula:
                return False, (m, r, brute, formula)
    return True, None

