"""Symbolic powers, containment and resurgence of C-matroidal monomial ideals."""

from .combinatorics import (
    Matroid,
    PeakedCertificate,
    SimplicialComplex,
    cocircuits,
    delta_m,
    dual_matroid,
    is_matroid_complex,
    is_peaked,
    uniform_matroid,
    verify_basis_axioms,
    verify_circuit_axioms,
)
from .ideals import (
    MonomialIdeal,
    alexander_dual,
    contains,
    cover_ideal,
    factor_into_squarefree,
    generators_theorem37,
    height,
    intersect,
    minimalize,
    multiply,
    power,
    squarefree_part,
    stanley_reisner,
    symbolic_membership,
    symbolic_power,
)
from .resurgence import (
    BoundContext,
    ContainmentReport,
    ResurgenceEstimate,
    containment,
    peak_containment_check,
    resurgence_search,
    uniform_resurgence,
    uniform_strict_containment,
    upper_bound,
    verify_uniform_theorem,
)

__version__ = "0.1.0"
