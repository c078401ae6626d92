import json
import random
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from matroidal import SimplicialComplex

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

DATA = Path(__file__).parent / "data"

# lines printed by the acceptance module at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def load_zoo(max_n=6):
    """Matroids on at most 6 elements, one per isomorphism class, rank >= 1."""
    out = []
    for e in json.loads((DATA / "matroids.json").read_text()):
        s, bases = e["ground_set"], e["bases"]
        if s == 0 or s > max_n or not bases[0]:
            continue
        out.append(SimplicialComplex(s, frozenset(frozenset(B) for B in bases)))
    return out


@pytest.fixture(scope="session")
def zoo():
    return load_zoo()


@pytest.fixture(scope="session")
def zoo5():
    return load_zoo(5)


@pytest.fixture
def rng():
    return random.Random(20260101)


@st.composite
def complexes(draw, max_s=5, max_facets=5):
    s = draw(st.integers(1, max_s))
    ground = list(range(1, s + 1))
    sets = draw(st.lists(st.sets(st.sampled_from(ground), min_size=1), min_size=1, max_size=max_facets))
    return SimplicialComplex.from_faces(s, sets)


@st.composite
def squarefree_ideals(draw, max_s=6, max_gens=5):
    from matroidal import MonomialIdeal

    s = draw(st.integers(1, max_s))
    ground = list(range(1, s + 1))
    sups = draw(st.lists(st.sets(st.sampled_from(ground), min_size=1), min_size=1, max_size=max_gens))
    return MonomialIdeal.from_supports(s, sups)
