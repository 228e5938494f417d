"""Stable JSON forms for every object the command line reads or writes.

Key order is fixed so that save/load round-trips are byte-for-byte:
algebras serialize as field/dim/unity/table, modular rings as
moduli/unity/table, reports as statement/verdict/witnesses/densities/
notes.  Densities travel as exact "numerator/denominator" strings,
never floats."""

from __future__ import annotations

import json
from fractions import Fraction

import numpy as np

from .algebra import Algebra, make_algebra
from .census import CensusResult, census_from_dict
from .errors import ParseError
from .finring import FiniteRing, make_finite_ring
from .gf import make_field
from .structure import ElementSet
from .theorems import TheoremReport


def to_jsonable(obj):
    """Plain JSON-ready data for any package object."""
    if isinstance(obj, Algebra):
        return {
            "field": {"p": obj.field.p, "k": obj.field.k},
            "dim": obj.dim,
            "unity": list(obj.unity),
            "table": [[list(cell) for cell in row] for row in obj.table],
        }
    if isinstance(obj, FiniteRing):
        return {
            "moduli": list(obj.moduli),
            "unity": list(obj.unity),
            "table": [[list(cell) for cell in row] for row in obj.table],
        }
    if isinstance(obj, CensusResult):
        return obj.to_dict()
    if isinstance(obj, TheoremReport):
        return {
            "statement": obj.statement,
            "verdict": obj.verdict,
            "witnesses": to_jsonable(obj.witnesses),
            "densities": {
                k: to_jsonable(v) for k, v in obj.densities.items()
            },
            "notes": to_jsonable(obj.notes),
        }
    if isinstance(obj, ElementSet):
        return list(obj.members)
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.ndarray):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, (bool, int, str)) or obj is None:
        return obj
    raise ParseError(f"cannot serialize {type(obj).__name__}")


def dumps(obj):
    return json.dumps(to_jsonable(obj), indent=2) + "\n"


def save(obj, path):
    with open(path, "w") as fh:
        fh.write(dumps(obj))


def _as_dict(data, what):
    if not isinstance(data, dict):
        raise ParseError(f"expected a JSON object for {what}")
    return data


def algebra_from_dict(data):
    data = _as_dict(data, "an algebra")
    try:
        spec = data["field"]
        field = make_field(int(spec["p"]), int(spec.get("k", 1)))
        return make_algebra(field, int(data["dim"]), data["table"], data["unity"])
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed algebra data: {exc}") from exc


def ring_from_dict(data):
    data = _as_dict(data, "a ring")
    try:
        return make_finite_ring(data["moduli"], data["table"], data["unity"])
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed ring data: {exc}") from exc


def report_from_dict(data):
    data = _as_dict(data, "a report")
    try:
        densities = {
            k: Fraction(v) for k, v in data.get("densities", {}).items()
        }
        return TheoremReport(
            statement=data["statement"],
            verdict=data["verdict"],
            witnesses=data.get("witnesses", []),
            densities=densities,
            notes=data.get("notes", {}),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed report data: {exc}") from exc


def from_jsonable(data):
    """Dispatch a parsed JSON object back to a package object by its keys."""
    data = _as_dict(data, "a ringlab object")
    if "field" in data and "table" in data:
        return algebra_from_dict(data)
    if "moduli" in data:
        return ring_from_dict(data)
    if "classes" in data:
        try:
            return census_from_dict(data)
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed census data: {exc}") from exc
    if "statement" in data:
        return report_from_dict(data)
    raise ParseError("unrecognized object shape: " + ", ".join(sorted(data)))


def loads(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return from_jsonable(data)


def load(path):
    with open(path) as fh:
        return loads(fh.read())
