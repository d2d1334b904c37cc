"""JSON encoding of cones, option sets, rules, assessments and models.

Rationals are written as strings ``"p/q"`` (``"3"`` when integral) and
vectors as arrays of such strings.  Integers are accepted on input;
floats are rejected because they are not exact.
"""

from __future__ import annotations

import json
from pathlib import Path

from .assessments import AssessmentFamily
from .choice_functions import Assessment, Cones
from .exact_geometry import as_rational
from .orders_cones import ProperCone, make_cone
from .rules import FinitePoints, OpenRay, PosiHull, Rule, Union


class FormatError(ValueError):
    """Input JSON does not follow the expected schema."""


def load(path) -> object:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def parse_rational(x):
    if isinstance(x, float):
        raise FormatError(f"floating point value {x!r} is not exact; write it as a string \"p/q\"")
    try:
        return as_rational(x)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"not a rational: {x!r}") from exc


def parse_vector(data) -> tuple:
    if not isinstance(data, list) or not data:
        raise FormatError(f"a vector must be a nonempty array, got {data!r}")
    return tuple(parse_rational(x) for x in data)


def parse_vectors(data) -> list:
    if isinstance(data, dict) and "finite" in data:
        data = data["finite"]
    if not isinstance(data, list):
        raise FormatError("expected an array of vectors")
    return [parse_vector(v) for v in data]


def encode_vector(u) -> list:
    return [str(a) for a in u]


def parse_cone(data) -> ProperCone:
    """Parse ``{"dim": n, "generators": [...]}``; NotBlunt propagates."""
    try:
        dim = int(data["dim"])
        gens = [parse_vector(g) for g in data["generators"]]
    except (KeyError, TypeError) as exc:
        raise FormatError("a cone needs \"dim\" and \"generators\"") from exc
    return make_cone(gens, dim=dim)


def encode_cone(D: ProperCone) -> dict:
    return {"dim": D.dim, "generators": [encode_vector(g) for g in D.generators]}


def parse_assessment(data) -> AssessmentFamily:
    try:
        dim = int(data["dim"])
        basis = [[parse_vector(v) for v in A] for A in data["basis"]]
    except (KeyError, TypeError) as exc:
        raise FormatError("an assessment needs \"dim\" and \"basis\"") from exc
    if any(not A for A in basis):
        raise FormatError("assessed option sets must be nonempty")
    return AssessmentFamily(basis, dim=dim)


def encode_assessment(F: AssessmentFamily) -> dict:
    return {"dim": F.dim, "basis": [[encode_vector(p) for p in A.points] for A in F.basis]}


def parse_model(data):
    """A model file, a bare cone file or a bare assessment file."""
    if not isinstance(data, dict):
        raise FormatError("a model must be a JSON object")
    if "cones" in data:
        return Cones([parse_cone(c) for c in data["cones"]])
    if "assessment" in data:
        return Assessment(parse_assessment(data["assessment"]))
    if "generators" in data:
        return Cones([parse_cone(data)])
    if "basis" in data:
        return Assessment(parse_assessment(data))
    raise FormatError("a model needs \"cones\" or \"assessment\"")


def encode_model(model) -> dict:
    if isinstance(model, Cones):
        return {"cones": [encode_cone(D) for D in model.cones]}
    return {"assessment": encode_assessment(model.family)}


def parse_optset(data):
    """Tagged option set; a bare array of vectors means a finite set."""
    if data == "empty":
        return None
    if isinstance(data, list):
        return FinitePoints(parse_vectors(data))
    if not isinstance(data, dict) or len(data) != 1:
        raise FormatError(f"not an option set: {data!r}")
    (tag, body), = data.items()
    if tag == "finite":
        return FinitePoints(parse_vectors(body))
    if tag == "posi":
        return PosiHull(parse_vectors(body))
    if tag == "openRay":
        try:
            return OpenRay(parse_vector(body["base"]), parse_vector(body["direction"]))
        except (KeyError, TypeError) as exc:
            raise FormatError("openRay needs \"base\" and \"direction\"") from exc
    if tag == "union":
        return Union([parse_optset(p) for p in body])
    raise FormatError(f"unknown option set tag {tag!r}")


def encode_optset(S):
    if S is None:
        return "empty"
    if isinstance(S, FinitePoints):
        return {"finite": [encode_vector(p) for p in S.points]}
    if isinstance(S, PosiHull):
        return {"posi": [encode_vector(p) for p in S.points]}
    if isinstance(S, OpenRay):
        return {"openRay": {"base": encode_vector(S.base), "direction": encode_vector(S.direction)}}
    return {"union": [encode_optset(p) for p in S.parts]}


def parse_rule(data) -> Rule:
    try:
        premises = [parse_optset(p) for p in data["premises"]]
        conclusion = parse_optset(data["conclusion"])
    except (KeyError, TypeError) as exc:
        raise FormatError("a rule needs \"premises\" and \"conclusion\"") from exc
    if any(p is None for p in premises):
        raise FormatError("premises must be nonempty option sets")
    return Rule(premises, conclusion)


def parse_rules(data) -> list:
    if isinstance(data, dict) and "rules" in data:
        data = data["rules"]
    if not isinstance(data, list):
        raise FormatError("expected an array of rules")
    return [parse_rule(r) for r in data]


def encode_rules(rules) -> dict:
    return {"rules": [{"premises": [encode_optset(p) for p in r.premises],
                       "conclusion": encode_optset(r.conclusion)} for r in rules]}


def read(path, parser):
    try:
        return parser(load(path))
    except json.JSONDecodeError as exc:
        raise FormatError(f"{Path(path).name}: invalid JSON ({exc})") from exc
