"""JSON and CSV encodings of complexes, matroids, ideals and search results."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .combinatorics import Matroid, SimplicialComplex, sorted_sets
from .ideals import MonomialIdeal, associated_complex, cover_ideal, with_decomposition
from .resurgence import ContainmentReport, ResurgenceEstimate


class InputFormatError(Exception):
    """Malformed input: bad JSON or a document of the wrong shape."""


def load_json(path: str | Path) -> Any:
    text = Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def int_field(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputFormatError(f"{what} must be an integer, got {value!r}")
    return value


def int_lists(value: Any, what: str) -> list[list[int]]:
    if not isinstance(value, list) or not all(isinstance(row, list) for row in value):
        raise InputFormatError(f"{what} must be a list of integer lists")
    return [[int_field(x, what) for x in row] for row in value]


def parse_object(doc: Any) -> SimplicialComplex | Matroid | MonomialIdeal:
    """Decode a complex (``facets``), matroid (``circuits`` or ``bases``) or ideal (``generators``)."""
    if not isinstance(doc, dict):
        raise InputFormatError("expected a JSON object")
    if "generators" in doc:
        s = int_field(doc.get("variables"), "variables")
        return MonomialIdeal(s, tuple(tuple(g) for g in int_lists(doc["generators"], "generators")))
    s = int_field(doc.get("ground_set"), "ground_set")
    if "facets" in doc:
        return SimplicialComplex(s, frozenset(frozenset(F) for F in int_lists(doc["facets"], "facets")))
    if "circuits" in doc:
        return Matroid.from_circuits(s, int_lists(doc["circuits"], "circuits"))
    if "bases" in doc:
        return Matroid.from_bases(s, int_lists(doc["bases"], "bases"))
    raise InputFormatError("expected one of the keys: facets, circuits, bases, generators")


def as_complex(obj: SimplicialComplex | Matroid | MonomialIdeal) -> SimplicialComplex:
    if isinstance(obj, SimplicialComplex):
        return obj
    if isinstance(obj, Matroid):
        return obj.complex()
    return associated_complex(obj)


def as_ideal(obj: SimplicialComplex | Matroid | MonomialIdeal) -> MonomialIdeal:
    """The C-matroidal (cover) ideal for complexes and matroids; ideals pass through."""
    if isinstance(obj, MonomialIdeal):
        return with_decomposition(obj) if obj.is_squarefree and not (obj.is_zero or obj.is_unit) else obj
    return cover_ideal(as_complex(obj))


def to_dict(obj: SimplicialComplex | Matroid | MonomialIdeal) -> dict:
    if isinstance(obj, SimplicialComplex):
        return {"ground_set": obj.ground_set, "facets": [list(F) for F in obj.sorted_facets()]}
    if isinstance(obj, Matroid):
        if obj.circuits:
            return {"ground_set": obj.ground_set, "circuits": [list(C) for C in sorted_sets(obj.circuits)]}
        return {"ground_set": obj.ground_set, "bases": [list(B) for B in sorted_sets(obj.bases)]}
    if isinstance(obj, MonomialIdeal):
        return {"variables": obj.variables, "generators": [list(g) for g in obj.generators]}
    raise TypeError(f"cannot encode {type(obj).__name__}")


def dumps(doc: Any) -> str:
    return json.dumps(doc, separators=(", ", ": "))


def fraction_str(q: Fraction | None) -> str | None:
    if q is None:
        return None
    return f"{q.numerator}/{q.denominator}"


def estimate_to_dict(est: ResurgenceEstimate) -> dict:
    return {
        "best_ratio": fraction_str(est.best_ratio),
        "witness_pair": list(est.witness_pair) if est.witness_pair else None,
        "witness": list(est.witness) if est.witness else None,
        "search_bounds": list(est.search_bounds),
        "formula_value": fraction_str(est.formula_value),
    }


def containment_csv(reports: list[ContainmentReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["m", "r", "holds", "witness"])
    for rep in reports:
        witness = "" if rep.witness is None else json.dumps(list(rep.witness), separators=(",", ":"))
        w.writerow([rep.m, rep.r, "true" if rep.holds else "false", witness])
    return buf.getvalue()
