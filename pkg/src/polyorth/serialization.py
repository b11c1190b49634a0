"""Exact JSON interchange.

Rationals travel as strings "p/q" (bare "p" when the denominator is one);
floats are rejected everywhere. Boundary validation enforces the dimension
cap and the denominator cap so that hostile or accidental huge inputs are
refused before any computation starts.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .linalg import Matrix, Vector
from .minimax import (
    Check,
    Instance,
    MinimaxReport,
    TransferResult,
    VerificationReport,
)
from .operators import Operator
from .spaces import NormedSpace, Subspace, make_space
from .polytope import SymmetricPolytope

DIM_CAP = 4
DENOMINATOR_CAP = 10**6


class FormatError(ValueError):
    """Malformed or out-of-bounds interchange data."""


def rational_to_str(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(value: Any, *, cap: int | None = DENOMINATOR_CAP) -> Fraction:
    """Accept ints and 'p/q' strings; floats and anything else are refused."""
    if isinstance(value, bool):
        raise FormatError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise FormatError(f"floating point input {value!r} is not accepted")
    if isinstance(value, str):
        # strict grammar: optional sign, integer, optional /denominator;
        # decimal and exponent forms are refused even though Fraction
        # would parse them, so the wire format stays unambiguous
        if not re.fullmatch(r"[+-]?\d+(?:/\d+)?", value):
            raise FormatError(f"cannot parse rational from {value!r}")
        try:
            q = Fraction(value)
        except ZeroDivisionError as exc:
            raise FormatError(f"cannot parse rational from {value!r}") from exc
        if cap is not None and q.denominator > cap:
            raise FormatError(
                f"denominator {q.denominator} exceeds the cap {cap}"
            )
        return q
    raise FormatError(f"cannot parse rational from {type(value).__name__}")


def vector_to_obj(v) -> list[str]:
    return [rational_to_str(x) for x in v]


def parse_vector(obj: Any, *, cap: int | None = DENOMINATOR_CAP) -> Vector:
    if not isinstance(obj, list):
        raise FormatError("vector must be a JSON array")
    return tuple(parse_rational(x, cap=cap) for x in obj)


def matrix_to_obj(m) -> list[list[str]]:
    return [vector_to_obj(row) for row in m]


def parse_matrix(obj: Any, *, cap: int | None = DENOMINATOR_CAP) -> Matrix:
    if not isinstance(obj, list):
        raise FormatError("matrix must be a JSON array of arrays")
    return tuple(parse_vector(row, cap=cap) for row in obj)


def space_to_obj(space: NormedSpace) -> dict:
    return {
        "kind": "polyhedral",
        "dim": space.dim,
        "label": space.label,
        "facets": matrix_to_obj(space.ball.facets),
        "vertices": matrix_to_obj(space.ball.vertices),
    }


def parse_space(obj: Any) -> NormedSpace:
    if isinstance(obj, str):
        return parse_space_shorthand(obj)
    if not isinstance(obj, dict):
        raise FormatError("space must be an object or a shorthand string")
    kind = obj.get("kind")
    if kind not in ("l1", "linf", "polyhedral"):
        raise FormatError(f"unknown space kind {kind!r}")
    dim = obj.get("dim")
    if dim is not None:
        if not isinstance(dim, int) or isinstance(dim, bool):
            raise FormatError("dim must be an integer")
        _check_dim(dim)
    label = obj.get("label")
    if label is not None and not isinstance(label, str):
        raise FormatError("label must be a string")
    facets = obj.get("facets")
    vertices = obj.get("vertices")
    if kind in ("l1", "linf"):
        if dim is None:
            raise FormatError(f"{kind} space needs dim")
        return make_space(kind, dim, label=label)
    parsed_facets = parse_matrix(facets) if facets is not None else None
    parsed_vertices = parse_matrix(vertices) if vertices is not None else None
    for mat in (parsed_facets, parsed_vertices):
        if mat:
            _check_dim(len(mat[0]))
    if parsed_facets is not None and parsed_vertices is not None:
        # exact round trip: trust but verify through the validator
        built = SymmetricPolytope(
            len(parsed_facets[0]), parsed_facets, parsed_vertices
        )
        sp = NormedSpace(built.dim, built, label=label or "X")
        return sp
    return make_space(
        "polyhedral", dim, facets=parsed_facets, vertices=parsed_vertices, label=label
    )


def parse_space_shorthand(text: str) -> NormedSpace:
    """'l1:3' or 'linf:2' style shorthand for the named families."""
    parts = text.split(":")
    if len(parts) != 2 or parts[0] not in ("l1", "linf"):
        raise FormatError(f"unknown space shorthand {text!r}")
    try:
        dim = int(parts[1])
    except ValueError as exc:
        raise FormatError(f"bad dimension in {text!r}") from exc
    _check_dim(dim)
    return make_space(parts[0], dim)


def _check_dim(dim: int) -> None:
    if dim < 1:
        raise FormatError(f"dimension {dim} must be positive")
    if dim > DIM_CAP:
        raise FormatError(f"dimension {dim} exceeds the cap {DIM_CAP}")


def subspace_to_obj(sub: Subspace) -> dict:
    return {"basis": matrix_to_obj(sub.basis)}


def parse_subspace(obj: Any, ambient: NormedSpace) -> Subspace:
    if not isinstance(obj, dict) or "basis" not in obj:
        raise FormatError("subspace must be an object with a basis array")
    basis = parse_matrix(obj["basis"])
    try:
        return Subspace(ambient, basis)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def operator_to_obj(op: Operator) -> dict:
    return {"matrix": matrix_to_obj(op.matrix)}


def parse_operator(obj: Any, domain: NormedSpace, codomain: NormedSpace) -> Operator:
    if not isinstance(obj, dict) or "matrix" not in obj:
        raise FormatError("operator must be an object with a matrix array")
    try:
        return Operator(parse_matrix(obj["matrix"]), domain, codomain)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def instance_to_obj(inst: Instance) -> dict:
    obj = {
        "X": space_to_obj(inst.X),
        "Y": space_to_obj(inst.Y),
        "Z": subspace_to_obj(inst.Z),
        "T": operator_to_obj(inst.T),
    }
    if inst.m_summand_split is not None:
        obj["m_summand_certificate"] = {"split_dim": inst.m_summand_split}
    provenance = {}
    if inst.seed is not None:
        provenance["seed"] = inst.seed
    if inst.kind is not None:
        provenance["kind"] = inst.kind
    if provenance:
        obj["provenance"] = provenance
    return obj


def parse_instance(obj: Any) -> Instance:
    if not isinstance(obj, dict):
        raise FormatError("instance must be a JSON object")
    for key in ("X", "Y", "Z", "T"):
        if key not in obj:
            raise FormatError(f"instance is missing {key!r}")
    X = parse_space(obj["X"])
    Y = parse_space(obj["Y"])
    Z = parse_subspace(obj["Z"], Y)
    T = parse_operator(obj["T"], X, Y)
    split = None
    cert = obj.get("m_summand_certificate")
    if cert is not None:
        if not isinstance(cert, dict) or "split_dim" not in cert:
            raise FormatError("certificate must carry split_dim")
        split = cert["split_dim"]
        if not isinstance(split, int) or isinstance(split, bool):
            raise FormatError("split_dim must be an integer")
    seed = None
    kind = None
    prov = obj.get("provenance")
    if isinstance(prov, dict):
        seed = prov.get("seed")
        kind = prov.get("kind")
    try:
        return Instance(X, Y, Z, T, m_summand_split=split, seed=seed, kind=kind)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def check_to_obj(check: Check) -> dict:
    return {"name": check.name, "passed": check.passed, "detail": check.detail}


def _value_to_obj(value: Any) -> Any:
    if isinstance(value, Fraction):
        return rational_to_str(value)
    if isinstance(value, tuple) and value and isinstance(value[0], Fraction):
        return vector_to_obj(value)
    if isinstance(value, tuple):
        return [_value_to_obj(v) for v in value]
    return value


def verification_report_to_obj(report: VerificationReport) -> dict:
    return {
        "theorem": report.theorem,
        "status": report.status,
        "hypothesis_checks": [check_to_obj(c) for c in report.hypothesis_checks],
        "conclusion_checks": [check_to_obj(c) for c in report.conclusion_checks],
        "witnesses": {k: _value_to_obj(v) for k, v in report.witnesses.items()},
        "metrics": {k: _value_to_obj(v) for k, v in report.metrics.items()},
    }


def minimax_report_to_obj(report: MinimaxReport) -> dict:
    return {
        "op_norm": rational_to_str(report.op_norm),
        "d_global": rational_to_str(report.d_global),
        "d_local": rational_to_str(report.d_local),
        "gap": rational_to_str(report.gap),
        "argmax_vertices": matrix_to_obj(report.argmax_vertices),
        "is_T_orthogonal": report.is_T_orthogonal,
        "per_vertex_distances": [
            {"vertex": vector_to_obj(v), "distance": rational_to_str(d)}
            for v, d in report.per_vertex_distances
        ],
        "best_approx": operator_to_obj(report.best_approx),
    }


def transfer_result_to_obj(result: TransferResult) -> dict:
    return {
        "nearest_point": vector_to_obj(result.nearest_point),
        "attaining_vertex": vector_to_obj(result.attaining_vertex),
        "point_distance": rational_to_str(result.point_distance),
        "operator_distance": rational_to_str(result.operator_distance),
        "checks": [check_to_obj(c) for c in result.checks],
        "ok": result.ok,
    }


def dumps(obj: Any) -> str:
    """Canonical JSON: sorted keys, compact separators, no floats."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
