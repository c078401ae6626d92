"""Exact arithmetic on monomial ideals in ``k[x_1, ..., x_s]``.

A monomial is a tuple of ``s`` non-negative Python ints (its exponent
vector).  A :class:`MonomialIdeal` stores its minimal generators, sorted
lexicographically.  The zero ideal has no generators, the unit ideal has the
single generator ``(0, ..., 0)``.

Divisibility scans are vectorised with numpy when exponents fit comfortably
in int64; otherwise they fall back to plain Python, so large exponents are
handled exactly, only slower.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .combinatorics import (
    SimplicialComplex,
    Subset,
    as_subsets,
    fmt_set,
    minimal_sets,
    sorted_sets,
    verify_basis_axioms,
)

Monomial = tuple[int, ...]

_INT64_SAFE = 2**40
_CHUNK = 2_000_000
_GRID_CELLS = 8_000_000
_BOX_CELLS = 1 << 25


# ---------------------------------------------------------------------------
# monomials


def monomial(support: Iterable[int], variables: int) -> Monomial:
    """Squarefree monomial with the given 1-based support."""
    S = set(support)
    return tuple(1 if i in S else 0 for i in range(1, variables + 1))


def support(mono: Sequence[int]) -> frozenset[int]:
    return frozenset(i + 1 for i, e in enumerate(mono) if e)


def degree(mono: Sequence[int]) -> int:
    return sum(mono)


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Sequence[int], b: Sequence[int]) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_mul(a: Sequence[int], b: Sequence[int]) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def is_squarefree(mono: Sequence[int]) -> bool:
    return all(e <= 1 for e in mono)


def mono_str(mono: Sequence[int]) -> str:
    parts = []
    for i, e in enumerate(mono, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


# ---------------------------------------------------------------------------
# divisibility kernels


def _fits_int64(*groups: Iterable[Monomial]) -> bool:
    return all(e < _INT64_SAFE for g in groups for mono in g for e in mono)


def _divisible_mask(cands: Sequence[Monomial], gens: Sequence[Monomial]) -> list[bool]:
    """For each candidate, whether some monomial of ``gens`` divides it."""
    if not cands:
        return []
    if not gens:
        return [False] * len(cands)
    if not _fits_int64(cands, gens):
        return [any(divides(g, c) for g in gens) for c in cands]
    C = np.asarray(cands, dtype=np.int64)
    G = np.asarray(gens, dtype=np.int64)
    step = max(1, _CHUNK // (G.shape[0] * max(1, G.shape[1])))
    out = np.empty(C.shape[0], dtype=bool)
    for lo in range(0, C.shape[0], step):
        block = C[lo:lo + step]
        out[lo:lo + step] = (G[None, :, :] <= block[:, None, :]).all(axis=2).any(axis=1)
    return out.tolist()


def _minimal(gens) -> tuple[Monomial, ...]:
    """Minimal elements under divisibility, sorted lexicographically.

    Accepts any iterable of exponent vectors or a 2-d integer array.
    """
    if isinstance(gens, np.ndarray):
        arr = gens
    else:
        uniq = {tuple(g) for g in gens}
        if len(uniq) <= 1:
            return tuple(uniq)
        if not _fits_int64(uniq):
            return _minimal_by_degree(uniq)
        arr = np.asarray(list(uniq), dtype=np.int64)
    if arr.shape[0] == 0:
        return ()
    extent = arr.max(axis=0) + 1
    cells = math.prod(extent.tolist())
    # grid costs ~cells, the degree sweep ~N^2 comparisons
    if cells <= _GRID_CELLS and cells <= max(4096, arr.shape[0] ** 2 // 4):
        return _minimal_on_grid(arr, extent)
    return _minimal_by_degree(set(map(tuple, arr.tolist())))


def _minimal_on_grid(arr: np.ndarray, extent: np.ndarray) -> tuple[Monomial, ...]:
    # staircase of the ideal inside the bounding box: mark the candidates and
    # close upwards along every axis; the minimal generators are the cells of
    # the staircase whose every single-variable decrement falls outside it
    grid = np.zeros(tuple(extent.tolist()), dtype=bool)
    grid[tuple(arr.T)] = True
    for axis in range(arr.shape[1]):
        np.logical_or.accumulate(grid, axis=axis, out=grid)
    corners = grid.copy()
    for axis in range(arr.shape[1]):
        upper = [slice(None)] * grid.ndim
        lower = [slice(None)] * grid.ndim
        upper[axis] = slice(1, None)
        lower[axis] = slice(None, -1)
        corners[tuple(upper)] &= ~grid[tuple(lower)]
    # argwhere walks the grid in C order, which is lexicographic
    return tuple(map(tuple, np.argwhere(corners).tolist()))


def _minimal_by_degree(uniq: set[Monomial]) -> tuple[Monomial, ...]:
    # a monomial can only be divided by one of strictly smaller degree or by itself
    by_degree: dict[int, list[Monomial]] = {}
    for g in uniq:
        by_degree.setdefault(sum(g), []).append(g)
    kept: list[Monomial] = []
    for d in sorted(by_degree):
        level = by_degree[d]
        mask = _divisible_mask(level, kept)
        kept.extend(g for g, hit in zip(level, mask) if not hit)
    return tuple(sorted(kept))


def _pairwise(a: Sequence[Monomial], b: Sequence[Monomial], op):
    """``op(f, g)`` over all pairs, as an array when exponents allow.

    ``op`` is np.add or np.maximum.
    """
    if _fits_int64(a, b):
        A = np.asarray(a, dtype=np.int64)
        B = np.asarray(b, dtype=np.int64)
        return op(A[:, None, :], B[None, :, :]).reshape(-1, A.shape[1])
    scalar = mono_mul if op is np.add else mono_lcm
    return {scalar(f, g) for f in a for g in b}


# ---------------------------------------------------------------------------
# ideals


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators.

    ``primes`` optionally records the facets ``F`` of a decomposition
    ``I = intersection of (x_i : i in F)``; it does not take part in equality.
    """

    variables: int
    generators: tuple[Monomial, ...]
    primes: tuple[Subset, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.variables < 1:
            raise ValueError(f"number of variables must be >= 1, got {self.variables}")
        gens = []
        for g in self.generators:
            g = tuple(int(e) for e in g)
            if len(g) != self.variables:
                raise ValueError(f"exponent vector {list(g)} has length {len(g)}, expected {self.variables}")
            if any(e < 0 for e in g):
                raise ValueError(f"negative exponent in {list(g)}")
            gens.append(g)
        object.__setattr__(self, "generators", _minimal(gens))
        if self.primes is not None:
            object.__setattr__(self, "primes", tuple(frozenset(t) for t in sorted_sets(as_subsets(self.primes))))

    @classmethod
    def _trusted(cls, variables: int, generators: tuple[Monomial, ...], primes=None) -> "MonomialIdeal":
        # generators already minimal and sorted
        obj = object.__new__(cls)
        object.__setattr__(obj, "variables", variables)
        object.__setattr__(obj, "generators", generators)
        object.__setattr__(obj, "primes", primes)
        return obj

    @classmethod
    def zero(cls, variables: int) -> "MonomialIdeal":
        return cls._trusted(variables, ())

    @classmethod
    def unit(cls, variables: int) -> "MonomialIdeal":
        return cls._trusted(variables, ((0,) * variables,))

    @classmethod
    def from_supports(cls, variables: int, supports: Iterable[Iterable[int]]) -> "MonomialIdeal":
        return cls(variables, tuple(monomial(S, variables) for S in supports))

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return any(not any(g) for g in self.generators)

    @property
    def is_squarefree(self) -> bool:
        return all(is_squarefree(g) for g in self.generators)

    def supports(self) -> list[tuple[int, ...]]:
        return sorted_sets(support(g) for g in self.generators)

    def __contains__(self, mono: Sequence[int]) -> bool:
        return _divisible_mask([tuple(mono)], self.generators)[0]

    def __len__(self) -> int:
        return len(self.generators)

    def with_primes(self, primes: Iterable[Iterable[int]]) -> "MonomialIdeal":
        return MonomialIdeal._trusted(self.variables, self.generators, tuple(frozenset(t) for t in sorted_sets(as_subsets(primes))))

    def __str__(self) -> str:
        return "(" + ", ".join(mono_str(g) for g in self.generators) + ")"


def _same_ring(a: MonomialIdeal, b: MonomialIdeal) -> None:
    if a.variables != b.variables:
        raise ValueError(f"ambient mismatch: {a.variables} vs {b.variables} variables")


def minimalize(gens: Iterable[Sequence[int]], variables: int) -> MonomialIdeal:
    return MonomialIdeal(variables, tuple(tuple(g) for g in gens))


def multiply(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _same_ring(a, b)
    if a.is_zero or b.is_zero:
        return MonomialIdeal.zero(a.variables)
    return MonomialIdeal._trusted(a.variables, _minimal(_pairwise(a.generators, b.generators, np.add)))


@functools.lru_cache(maxsize=512)
def _power(a: MonomialIdeal, r: int) -> MonomialIdeal:
    if r == 0:
        return MonomialIdeal.unit(a.variables)
    if r == 1:
        return MonomialIdeal._trusted(a.variables, a.generators)
    return multiply(_power(a, r - 1), MonomialIdeal._trusted(a.variables, a.generators))


def power(a: MonomialIdeal, r: int) -> MonomialIdeal:
    """Ordinary power ``a^r`` by repeated multiplication; results are cached."""
    if r < 0:
        raise ValueError(f"power exponent must be >= 0, got {r}")
    # cache on the bare ideal so equal ideals share entries
    return _power(MonomialIdeal._trusted(a.variables, a.generators), r)


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """Intersection via pairwise lcm of generators."""
    _same_ring(a, b)
    if a.is_zero or b.is_zero:
        return MonomialIdeal.zero(a.variables)
    return MonomialIdeal._trusted(a.variables, _minimal(_pairwise(a.generators, b.generators, np.maximum)))


def intersect_all(ideals: Sequence[MonomialIdeal], variables: int) -> MonomialIdeal:
    result = MonomialIdeal.unit(variables)
    for J in ideals:
        result = intersect(result, J)
    return result


def prime_ideal(F: Iterable[int], variables: int) -> MonomialIdeal:
    """The prime ``(x_i : i in F)``; the empty set gives the zero ideal."""
    return MonomialIdeal(variables, tuple(monomial([i], variables) for i in F))


def contains(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    """Whether ``b`` is contained in ``a``."""
    return first_nonmember(a, b) is None


def first_nonmember(a: MonomialIdeal, b: MonomialIdeal) -> Monomial | None:
    """A minimal generator of ``b`` outside ``a``, or None when ``b <= a``.

    Generators are scanned by increasing degree, ties broken
    lexicographically.
    """
    _same_ring(a, b)
    order = sorted(b.generators, key=lambda g: (sum(g), g))
    for g, inside in zip(order, _divisible_mask(order, a.generators)):
        if not inside:
            return g
    return None


# ---------------------------------------------------------------------------
# complexes, duality, decompositions


def cover_ideal(d: SimplicialComplex) -> MonomialIdeal:
    """``J(d)``: intersection of ``(x_i : i in F)`` over the facets ``F``."""
    primes = [prime_ideal(F, d.ground_set) for F in d.sorted_facets()]
    J = intersect_all(primes, d.ground_set)
    return J.with_primes(d.facets)


def stanley_reisner(d: SimplicialComplex) -> MonomialIdeal:
    """Intersection of ``(x_i : i in [s] - F)`` over the facets ``F``."""
    E = frozenset(range(1, d.ground_set + 1))
    primes = [prime_ideal(E - frozenset(F), d.ground_set) for F in d.sorted_facets()]
    return intersect_all(primes, d.ground_set)


def _require_squarefree(i: MonomialIdeal, what: str) -> None:
    if not i.is_squarefree:
        raise ValueError(f"{what} requires squarefree ideal")


def alexander_dual(i: MonomialIdeal) -> MonomialIdeal:
    """Squarefree Alexander dual: generated by the minimal vertex covers of the
    generator supports.  Self-inverse; swaps zero and unit ideals."""
    _require_squarefree(i, "Alexander dual")
    primes = [prime_ideal(support(g), i.variables) for g in i.generators]
    return intersect_all(primes, i.variables)


def minimal_primes(i: MonomialIdeal) -> tuple[Subset, ...]:
    """Variable sets of the minimal primes of a squarefree ideal."""
    if i.primes is not None:
        return i.primes
    _require_squarefree(i, "prime decomposition")
    return tuple(frozenset(t) for t in alexander_dual(i).supports())


def with_decomposition(i: MonomialIdeal) -> MonomialIdeal:
    return i if i.primes is not None else i.with_primes(minimal_primes(i))


def associated_complex(i: MonomialIdeal) -> SimplicialComplex:
    """The complex ``d`` with ``i = J(d)``: facets are the minimal primes."""
    if i.is_zero or i.is_unit:
        raise ValueError("zero and unit ideals have no associated complex")
    return SimplicialComplex(i.variables, frozenset(minimal_primes(i)))


def height(i: MonomialIdeal) -> int:
    if i.is_zero or i.is_unit:
        raise ValueError("height is undefined for the zero and unit ideals")
    return min(len(F) for F in minimal_primes(i))


def is_c_matroidal(i: MonomialIdeal) -> bool:
    """Whether ``i`` is squarefree and the cover ideal of a matroid complex."""
    if i.is_zero or i.is_unit or not i.is_squarefree:
        return False
    return verify_basis_axioms(minimal_primes(i), i.variables).ok


# ---------------------------------------------------------------------------
# symbolic powers


def _monomials_of_degree(F: Sequence[int], d: int, variables: int) -> list[Monomial]:
    out = []
    for combo in itertools.combinations_with_replacement(sorted(F), d):
        e = [0] * variables
        for j in combo:
            e[j - 1] += 1
        out.append(tuple(e))
    return out


def _intersect_prime_power(gens: Iterable[Monomial], F: Sequence[int], m: int, variables: int) -> tuple[Monomial, ...]:
    # the minimal lcms of g with generators of p_F^m are g * u, u of degree
    # max(0, m - sum_F g) in the variables of F
    cands = []
    for g in gens:
        deficit = m - sum(g[j - 1] for j in F)
        if deficit <= 0:
            cands.append(g)
        else:
            cands.extend(mono_mul(g, u) for u in _monomials_of_degree(F, deficit, variables))
    return _minimal(cands)


def _symbolic_power_box(variables: int, primes: Sequence[Sequence[int]], m: int) -> tuple[Monomial, ...]:
    # a minimal generator never has an exponent above m and lives on the union
    # of the primes, so mark membership on the box [0, m]^k and take corners
    sup = sorted(set().union(*map(set, primes)))
    k = len(sup)
    axis = {v: a for a, v in enumerate(sup)}
    dtype = np.int16 if k * m < 2**15 else np.int64
    ramp = np.arange(m + 1, dtype=dtype)
    inside = np.ones((m + 1,) * k, dtype=bool)
    for F in primes:
        total = np.zeros((1,) * k, dtype=dtype)
        for v in F:
            shape = [1] * k
            shape[axis[v]] = m + 1
            total = total + ramp.reshape(shape)
        inside &= total >= m
    corners = inside.copy()
    for a in range(k):
        upper = [slice(None)] * k
        lower = [slice(None)] * k
        upper[a] = slice(1, None)
        lower[a] = slice(None, -1)
        corners[tuple(upper)] &= ~inside[tuple(lower)]
    out = []
    for row in np.argwhere(corners).tolist():
        e = [0] * variables
        for v, x in zip(sup, row):
            e[v - 1] = x
        out.append(tuple(e))
    # argwhere is lexicographic on the support, and so on the full vector
    return tuple(out)


def _symbolic_power_fold(variables: int, primes: Sequence[Sequence[int]], m: int) -> tuple[Monomial, ...]:
    # smallest primes first keeps the running intersection small
    order = sorted(primes, key=lambda F: (len(F), tuple(F)))
    gens: tuple[Monomial, ...] = ((0,) * variables,)
    for F in order:
        gens = _intersect_prime_power(gens, F, m, variables)
    return gens


@functools.lru_cache(maxsize=512)
def _symbolic_power(variables: int, primes: tuple[tuple[int, ...], ...], m: int) -> tuple[Monomial, ...]:
    if len(primes) > 1 and (m + 1) ** len(set().union(*map(set, primes))) <= _BOX_CELLS:
        return _symbolic_power_box(variables, primes, m)
    return _symbolic_power_fold(variables, primes, m)


def symbolic_power(i: MonomialIdeal, m: int) -> MonomialIdeal:
    """``I^(m)`` of a squarefree ideal as the intersection of ``p_F^m`` over its minimal primes.

    Uses the attached decomposition when present, otherwise recovers it from
    the Alexander dual.
    """
    if m < 1:
        raise ValueError(f"symbolic power exponent must be >= 1, got {m}")
    if i.is_zero or i.is_unit:
        return i
    primes = minimal_primes(i)
    key = tuple(sorted_sets(primes))
    return MonomialIdeal._trusted(i.variables, _symbolic_power(i.variables, key, m), primes)


def symbolic_membership(i: MonomialIdeal, mono: Sequence[int], m: int) -> bool:
    """Whether ``mono`` lies in ``I^(m)``: its exponent sum over every minimal prime is at least ``m``."""
    if len(mono) != i.variables:
        raise ValueError(f"monomial has {len(mono)} exponents, ideal has {i.variables} variables")
    if i.is_zero:
        return False
    if i.is_unit:
        return True
    return all(sum(mono[j - 1] for j in F) >= m for F in minimal_primes(i))


def squarefree_part(i: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal._trusted(i.variables, tuple(g for g in i.generators if is_squarefree(g)))


def squarefree_symbolic_generators(i: MonomialIdeal, j: int) -> list[frozenset[int]]:
    """Supports of the squarefree minimal generators of ``I^(j)``, found by
    testing every subset S of the support: ``x_S`` lies in ``I^(j)`` iff
    ``|S & F| >= j`` for each minimal prime ``F``."""
    primes = minimal_primes(i)
    ground = sorted(frozenset().union(*primes))
    members = []
    for k in range(len(ground) + 1):
        for combo in itertools.combinations(ground, k):
            S = frozenset(combo)
            if all(len(S & F) >= j for F in primes):
                members.append(S)
    return sorted(minimal_sets(members), key=lambda S: sorted(S))


def generators_theorem37(i: MonomialIdeal, m: int, strict: bool = False) -> MonomialIdeal:
    """``I^(m)`` of a C-matroidal ideal from products of squarefree generators.

    Collects every product ``M_1 * ... * M_t`` where ``M_k`` is a squarefree
    minimal generator of ``I^(c_k)``, ``1 <= c_k <= height``, the ``c_k``
    sum to ``m`` and the supports are nested
    ``supp(M_1) >= supp(M_2) >= ...``.  With ``strict=True`` consecutive
    supports must differ; that reading does not generate the whole ideal and is
    kept only for comparison.
    """
    if m < 1:
        raise ValueError(f"symbolic power exponent must be >= 1, got {m}")
    if not is_c_matroidal(i):
        raise ValueError("generators_theorem37 requires a C-matroidal ideal (cover ideal of a matroid complex)")
    c = height(i)
    s = i.variables
    layers = {j: squarefree_symbolic_generators(i, j) for j in range(1, c + 1)}

    @functools.lru_cache(maxsize=None)
    def chains(remaining: int, bound: frozenset[int] | None) -> frozenset[Monomial]:
        if remaining == 0:
            return frozenset([(0,) * s])
        out = set()
        for j in range(1, min(c, remaining) + 1):
            for S in layers[j]:
                if bound is not None and not (S < bound if strict else S <= bound):
                    continue
                head = monomial(S, s)
                for tail in chains(remaining - j, S):
                    out.add(mono_mul(head, tail))
        return frozenset(out)

    return MonomialIdeal._trusted(s, _minimal(chains(m, None)), minimal_primes(i))


def factor_into_squarefree(mono: Sequence[int], a: int, b: int) -> list[Monomial]:
    """Split ``mono`` into ``b`` squarefree monomials of degree ``a``.

    Needs ``deg(mono) == a * b`` and every exponent at most ``b``.  Each round
    takes one factor from the ``a`` variables of largest remaining exponent
    (ties go to the lower index).
    """
    mono = tuple(int(e) for e in mono)
    if a < 0 or b < 1:
        raise ValueError(f"need a >= 0 and b >= 1, got a={a}, b={b}")
    if any(e < 0 for e in mono):
        raise ValueError("negative exponent")
    if sum(mono) != a * b:
        raise ValueError(f"degree {sum(mono)} != a*b = {a * b}")
    worst = max(mono, default=0)
    if worst > b:
        raise ValueError(f"exponent {worst} exceeds b = {b}")
    rest = list(mono)
    factors = []
    for _ in range(b):
        top = sorted(range(len(rest)), key=lambda j: (-rest[j], j))[:a]
        if len(top) < a or any(rest[j] == 0 for j in top):
            raise AssertionError("factorization invariant broken")  # unreachable under the hypotheses
        f = [0] * len(rest)
        for j in top:
            f[j] = 1
            rest[j] -= 1
        factors.append(tuple(f))
    return factors


def describe_primes(i: MonomialIdeal) -> str:
    return " cap ".join(f"p{fmt_set(F)}" for F in minimal_primes(i))


def clear_caches() -> None:
    """Drop memoized powers and symbolic powers (for timing runs)."""
    _power.cache_clear()
    _symbolic_power.cache_clear()
