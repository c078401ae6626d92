"""Matroids, simplicial complexes, peaked detection and the Delta_m construction.

Subsets of the ground set ``{1, ..., s}`` are ``frozenset`` objects with
1-based labels.  Everything here is exhaustive search, meant for ground sets
of roughly a dozen elements at most.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable

Subset = frozenset


def as_subsets(sets: Iterable[Iterable[int]]) -> frozenset[Subset]:
    return frozenset(frozenset(int(x) for x in S) for S in sets)


def sorted_sets(sets: Iterable[Subset]) -> list[tuple[int, ...]]:
    """Canonical order used for all output: lexicographic on sorted tuples."""
    return sorted(tuple(sorted(S)) for S in sets)


def fmt_set(S: Iterable[int]) -> str:
    return "{" + ",".join(str(x) for x in sorted(S)) + "}"


def _check_ground(sets: Iterable[Subset], ground_set: int | None) -> None:
    if ground_set is None:
        return
    if ground_set < 1:
        raise ValueError(f"ground set size must be >= 1, got {ground_set}")
    for S in sets:
        bad = [x for x in S if not 1 <= x <= ground_set]
        if bad:
            raise ValueError(
                f"element {bad[0]} of {fmt_set(S)} lies outside the ground set [1..{ground_set}]"
            )


def maximal_sets(sets: Iterable[Subset]) -> frozenset[Subset]:
    sets = sorted(set(sets), key=len, reverse=True)
    kept: list[Subset] = []
    for S in sets:
        if not any(S < T for T in kept):
            kept.append(S)
    return frozenset(kept)


def minimal_sets(sets: Iterable[Subset]) -> frozenset[Subset]:
    sets = sorted(set(sets), key=len)
    kept: list[Subset] = []
    for S in sets:
        if not any(T < S for T in kept):
            kept.append(S)
    return frozenset(kept)


def all_subsets(elements: Iterable[int]) -> Iterable[Subset]:
    elements = sorted(elements)
    for k in range(len(elements) + 1):
        for combo in itertools.combinations(elements, k):
            yield frozenset(combo)


# ---------------------------------------------------------------------------
# axioms


@dataclass(frozen=True)
class AxiomCheck:
    """Outcome of an axiom check; falsy when an axiom is violated."""

    ok: bool
    reason: str | None = None
    witness: tuple = ()

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "ok"
        parts = [fmt_set(w) if isinstance(w, frozenset) else str(w) for w in self.witness]
        return f"{self.reason}: " + ", ".join(parts)


def verify_circuit_axioms(circuits: Iterable[Iterable[int]], ground_set: int | None = None) -> AxiomCheck:
    """Check the three circuit axioms and report the first violation found.

    Pairs are visited in canonical order so the reported violation is
    deterministic.
    """
    cs = as_subsets(circuits)
    if not cs:
        raise ValueError("circuits must be nonempty collection")
    _check_ground(cs, ground_set)
    if frozenset() in cs:
        return AxiomCheck(False, "empty set is a circuit", (frozenset(),))
    ordered = [frozenset(t) for t in sorted_sets(cs)]
    for C1, C2 in itertools.permutations(ordered, 2):
        if C1 < C2:
            return AxiomCheck(False, "minimality violated", (C1, C2))
    for C1, C2 in itertools.combinations(ordered, 2):
        union = C1 | C2
        for e in sorted(C1 & C2):
            target = union - {e}
            if not any(C3 <= target for C3 in ordered):
                return AxiomCheck(False, "circuit elimination fails", (C1, C2, e))
    return AxiomCheck(True)


def verify_basis_axioms(bases: Iterable[Iterable[int]], ground_set: int | None = None) -> AxiomCheck:
    bs = as_subsets(bases)
    if not bs:
        raise ValueError("basis must be nonempty")
    _check_ground(bs, ground_set)
    ordered = [frozenset(t) for t in sorted_sets(bs)]
    for B1, B2 in itertools.permutations(ordered, 2):
        for v in sorted(B1 - B2):
            if not any((B1 - {v}) | {w} in bs for w in B2 - B1):
                return AxiomCheck(False, "basis exchange fails", (B1, B2, v))
    # exchange forces equal cardinality; kept as an explicit guard
    sizes = {len(B) for B in bs}
    assert len(sizes) == 1, sizes
    return AxiomCheck(True)


# ---------------------------------------------------------------------------
# simplicial complexes


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex on ``[ground_set]`` given by its facets."""

    ground_set: int
    facets: frozenset[Subset]

    def __post_init__(self):
        facets = as_subsets(self.facets)
        object.__setattr__(self, "facets", facets)
        if not facets:
            raise ValueError("a simplicial complex needs at least one facet")
        if frozenset() in facets:
            raise ValueError("facets must be nonempty")
        _check_ground(facets, self.ground_set)
        for F, G in itertools.permutations(facets, 2):
            if F < G:
                raise ValueError(f"facets are not inclusion-maximal: {fmt_set(F)} is contained in {fmt_set(G)}")

    @classmethod
    def from_faces(cls, ground_set: int, faces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Build a complex from any list of faces, keeping only the maximal ones."""
        return cls(ground_set, maximal_sets(as_subsets(faces)))

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset().union(*self.facets)

    @property
    def n(self) -> int:
        """Size of the support (union of all facets)."""
        return len(self.vertices)

    @property
    def min_facet_size(self) -> int:
        return min(len(F) for F in self.facets)

    @property
    def is_pure(self) -> bool:
        return len({len(F) for F in self.facets}) == 1

    def facets_containing(self, i: int) -> frozenset[Subset]:
        return frozenset(F for F in self.facets if i in F)

    def sorted_facets(self) -> list[tuple[int, ...]]:
        return sorted_sets(self.facets)

    def is_face(self, S: Iterable[int]) -> bool:
        S = frozenset(S)
        return any(S <= F for F in self.facets)


def delta_m(d: SimplicialComplex, m: int) -> SimplicialComplex | None:
    """Complex whose facets are the facets of ``d`` with ``m - 1`` vertices removed.

    Returns ``None`` when ``m - 1`` reaches the smallest facet size: the
    squarefree part of the ``m``-th symbolic power is then the zero ideal.
    """
    if m < 1:
        raise ValueError(f"m must be a positive integer, got {m}")
    if m - 1 >= d.min_facet_size:
        return None
    faces = set()
    for F in d.facets:
        for A in itertools.combinations(sorted(F), m - 1):
            faces.add(F - frozenset(A))
    return SimplicialComplex.from_faces(d.ground_set, faces)


@dataclass(frozen=True)
class PeakedCertificate:
    witness_set: frozenset[int]
    per_vertex_facets: dict[int, frozenset[Subset]] = field(hash=False, compare=False)

    def check(self, d: SimplicialComplex) -> bool:
        A = self.witness_set
        if not A < d.vertices:
            return False
        seen: set[Subset] = set()
        for i in A:
            Fi = d.facets_containing(i)
            if Fi & seen:
                return False
            seen |= Fi
        return seen == set(d.facets)


def is_peaked(d: SimplicialComplex) -> PeakedCertificate | None:
    """Search for a strict vertex subset A such that every facet contains exactly one vertex of A.

    That is the same as asking for the families ``F_i`` (facets through ``i``),
    ``i`` in A, to be disjoint and to cover all facets.  The search branches on
    the vertices of the first facet not yet hit, so every candidate A is
    reachable; A is restricted to the support of ``d``.
    """
    facets = [frozenset(t) for t in d.sorted_facets()]
    support = d.vertices
    through = {v: [j for j, F in enumerate(facets) if v in F] for v in support}
    hits = [0] * len(facets)
    chosen: list[int] = []

    def search() -> frozenset[int] | None:
        try:
            j = hits.index(0)
        except ValueError:
            A = frozenset(chosen)
            return A if A != support else None
        for v in sorted(facets[j]):
            if any(hits[k] for k in through[v]):
                continue
            for k in through[v]:
                hits[k] += 1
            chosen.append(v)
            found = search()
            chosen.pop()
            for k in through[v]:
                hits[k] -= 1
            if found is not None:
                return found
        return None

    A = search()
    if A is None:
        return None
    return PeakedCertificate(A, {i: d.facets_containing(i) for i in sorted(A)})


def is_matroid_complex(d: SimplicialComplex) -> bool:
    return verify_basis_axioms(d.facets, d.ground_set).ok


# ---------------------------------------------------------------------------
# matroids


def _bases_from_circuits(ground_set: int, circuits: frozenset[Subset]) -> frozenset[Subset]:
    independent = [
        S for S in all_subsets(range(1, ground_set + 1)) if not any(C <= S for C in circuits)
    ]
    rank = max(len(S) for S in independent)
    return frozenset(S for S in independent if len(S) == rank)


def _circuits_from_bases(ground_set: int, bases: frozenset[Subset]) -> frozenset[Subset]:
    def independent(S):
        return any(S <= B for B in bases)

    circuits = []
    for S in all_subsets(range(1, ground_set + 1)):
        if S and not independent(S) and all(independent(S - {x}) for x in S):
            circuits.append(S)
    return frozenset(circuits)


@dataclass(frozen=True)
class Matroid:
    """A matroid on ``[ground_set]`` carrying both its bases and its circuits.

    Use :meth:`from_bases` or :meth:`from_circuits`; the given presentation is
    axiom-checked and the other one derived by exhaustive search.
    """

    ground_set: int
    bases: frozenset[Subset]
    circuits: frozenset[Subset]

    @classmethod
    def from_bases(cls, ground_set: int, bases: Iterable[Iterable[int]]) -> "Matroid":
        bs = as_subsets(bases)
        check = verify_basis_axioms(bs, ground_set)
        if not check:
            raise ValueError(f"not the bases of a matroid ({check.describe()})")
        return cls(ground_set, bs, _circuits_from_bases(ground_set, bs))

    @classmethod
    def from_circuits(cls, ground_set: int, circuits: Iterable[Iterable[int]]) -> "Matroid":
        cs = as_subsets(circuits)
        check = verify_circuit_axioms(cs, ground_set)
        if not check:
            raise ValueError(f"not the circuits of a matroid ({check.describe()})")
        return cls(ground_set, _bases_from_circuits(ground_set, cs), cs)

    @property
    def rank(self) -> int:
        return len(next(iter(self.bases)))

    @property
    def loops(self) -> frozenset[int]:
        return frozenset(next(iter(C)) for C in self.circuits if len(C) == 1)

    def complex(self) -> SimplicialComplex:
        """Independence complex: its facets are the bases."""
        if self.rank == 0:
            raise ValueError("rank-0 matroid has the empty set as its only basis; no complex")
        return SimplicialComplex(self.ground_set, self.bases)


def dual_matroid(m: Matroid) -> Matroid:
    E = frozenset(range(1, m.ground_set + 1))
    bases = frozenset(E - B for B in m.bases)
    return Matroid(m.ground_set, bases, _circuits_from_bases(m.ground_set, bases))


def cocircuits(m: Matroid) -> frozenset[Subset]:
    return dual_matroid(m).circuits


def matroid_of_complex(d: SimplicialComplex) -> Matroid:
    return Matroid.from_bases(d.ground_set, d.facets)


def uniform_matroid(c: int, n: int, s: int | None = None) -> tuple[Matroid, SimplicialComplex]:
    """Generalized uniform matroid U_{c,n}: independent sets are the subsets of
    size at most ``c`` of the support ``{1..n}`` inside the ground set ``{1..s}``.

    Elements ``n+1..s`` are loops.
    """
    s = n if s is None else s
    if not 1 <= c <= n <= s:
        raise ValueError(f"uniform matroid needs 1 <= c <= n <= s, got c={c}, n={n}, s={s}")
    support = range(1, n + 1)
    bases = frozenset(frozenset(S) for S in itertools.combinations(support, c))
    circuits = frozenset(frozenset(S) for S in itertools.combinations(support, c + 1))
    circuits |= frozenset(frozenset([j]) for j in range(n + 1, s + 1))
    return Matroid(s, bases, circuits), SimplicialComplex(s, bases)
