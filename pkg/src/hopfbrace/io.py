"""Structure-constant JSON serialization.

Every payload carries "schema": 1, a "kind", a "field" descriptor and dense
row-major matrices whose entries are canonical scalar strings ("a" or "a/b").
"""

from __future__ import annotations

import json

from .brace import HopfBrace, SkewBrace
from .bosonize import YDHopfBrace
from .fields import FieldSpec
from .hopf import HopfAlgebraData, group_algebra
from .linalg import LinMap
from .ydmod import HBraceModule, WeakYDModule

SCHEMA_VERSION = 1


class SchemaError(ValueError):
    pass


def matrix_to_json(m: LinMap) -> list:
    F = m.field
    return [[F.scalar_str(v) for v in row] for row in m.entries]


def matrix_from_json(field: FieldSpec, rows, cod: int, dom: int, name: str) -> LinMap:
    if len(rows) != cod or any(len(r) != dom for r in rows):
        raise SchemaError(f"matrix {name!r} must be {cod}x{dom}")
    return LinMap(field, [[field.coerce(v) for v in row] for row in rows])


def _require(payload: dict, *keys):
    for key in keys:
        if key not in payload:
            raise SchemaError(f"missing key {key!r}")


def _field_of(payload: dict, override: FieldSpec | None) -> FieldSpec:
    if override is not None:
        return override
    _require(payload, "field")
    return FieldSpec.from_json(payload["field"])


def _check_header(payload: dict, kind: str | None = None):
    if not isinstance(payload, dict):
        raise SchemaError("payload must be a JSON object")
    if payload.get("schema") != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema version {payload.get('schema')!r}")
    if kind is not None and payload.get("kind") != kind:
        raise SchemaError(f"expected kind {kind!r}, got {payload.get('kind')!r}")


def group_to_json(order: int, table, identity_index: int = 0) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "kind": "group",
        "order": order,
        "identity": identity_index,
        "table": [list(map(int, row)) for row in table],
    }


def group_from_json(payload: dict):
    _check_header(payload, "group")
    _require(payload, "order", "identity", "table")
    return payload["order"], payload["table"], payload["identity"]


def skew_brace_to_json(sb: SkewBrace) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "kind": "skew_brace",
        "order": sb.order,
        "identity": sb.identity,
        "dot": [list(row) for row in sb.dot_table],
        "circ": [list(row) for row in sb.circ_table],
    }


def skew_brace_from_json(payload: dict) -> SkewBrace:
    _check_header(payload, "skew_brace")
    _require(payload, "order", "dot", "circ")
    return SkewBrace.from_arrays(payload["dot"], payload["circ"],
                                 payload.get("identity", 0))


_HOPF_MAPS = ("unit", "mult", "counit", "comult", "antipode")


def hopf_algebra_to_json(H: HopfAlgebraData) -> dict:
    n = H.dim
    return {
        "schema": SCHEMA_VERSION,
        "kind": "hopf_algebra",
        "field": H.field.to_json(),
        "dim": n,
        "unit": matrix_to_json(H.unit),
        "mult": matrix_to_json(H.mult),
        "counit": matrix_to_json(H.counit),
        "comult": matrix_to_json(H.comult),
        "antipode": matrix_to_json(H.antipode),
    }


def hopf_algebra_from_json(payload: dict, field: FieldSpec | None = None) -> HopfAlgebraData:
    from .hopf import AlgebraData, CoalgebraData

    _check_header(payload, "hopf_algebra")
    _require(payload, "dim", *_HOPF_MAPS)
    F = _field_of(payload, field)
    n = payload["dim"]
    unit = matrix_from_json(F, payload["unit"], n, 1, "unit")
    mult = matrix_from_json(F, payload["mult"], n, n * n, "mult")
    counit = matrix_from_json(F, payload["counit"], 1, n, "counit")
    comult = matrix_from_json(F, payload["comult"], n * n, n, "comult")
    antipode = matrix_from_json(F, payload["antipode"], n, n, "antipode")
    return HopfAlgebraData(AlgebraData(n, unit, mult), CoalgebraData(n, counit, comult), antipode)


_BRACE_MAPS = ("counit", "comult", "unit1", "unit2", "mult1", "mult2",
               "antipode1", "antipode2")


def brace_to_json(H: HopfBrace) -> dict:
    out = {"schema": SCHEMA_VERSION, "kind": "brace",
           "field": H.field.to_json(), "dim": H.dim}
    for name in _BRACE_MAPS:
        out[name] = matrix_to_json(getattr(H, name))
    return out


def brace_from_json(payload: dict, field: FieldSpec | None = None) -> HopfBrace:
    _check_header(payload, "brace")
    _require(payload, "dim", *_BRACE_MAPS)
    F = _field_of(payload, field)
    n = payload["dim"]
    shapes = {
        "counit": (1, n), "comult": (n * n, n),
        "unit1": (n, 1), "unit2": (n, 1),
        "mult1": (n, n * n), "mult2": (n, n * n),
        "antipode1": (n, n), "antipode2": (n, n),
    }
    maps = {name: matrix_from_json(F, payload[name], *shapes[name], name)
            for name in _BRACE_MAPS}
    return HopfBrace(n, **maps)


_YD_MAPS = ("unit", "mult1", "mult2", "counit", "comult", "antipode1", "antipode2")


def yd_brace_to_json(A: YDHopfBrace) -> dict:
    out = {
        "schema": SCHEMA_VERSION,
        "kind": "yd_brace",
        "field": A.field.to_json(),
        "base": brace_to_json(A.base),
        "carrier_dim": A.dim,
        "act1": matrix_to_json(A.act1),
        "act2": matrix_to_json(A.act2),
        "coact": matrix_to_json(A.coact),
    }
    for name in _YD_MAPS:
        out[name] = matrix_to_json(getattr(A, name))
    return out


def yd_brace_from_json(payload: dict, field: FieldSpec | None = None) -> YDHopfBrace:
    _check_header(payload, "yd_brace")
    _require(payload, "base", "carrier_dim", "act1", "act2", "coact", *_YD_MAPS)
    F = _field_of(payload, field)
    base = brace_from_json(payload["base"], F)
    n, a = base.dim, payload["carrier_dim"]
    act1 = matrix_from_json(F, payload["act1"], a, n * a, "act1")
    act2 = matrix_from_json(F, payload["act2"], a, n * a, "act2")
    coact = matrix_from_json(F, payload["coact"], n * a, a, "coact")
    carrier = WeakYDModule(HBraceModule(base, a, act1, act2), coact)
    shapes = {
        "unit": (a, 1), "mult1": (a, a * a), "mult2": (a, a * a),
        "counit": (1, a), "comult": (a * a, a),
        "antipode1": (a, a), "antipode2": (a, a),
    }
    maps = {name: matrix_from_json(F, payload[name], *shapes[name], name)
            for name in _YD_MAPS}
    return YDHopfBrace(carrier, **maps)


def matched_pair_to_json(inp) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "kind": "matched_pair",
        "field": inp.H.field.to_json(),
        "A": hopf_algebra_to_json(inp.A),
        "H": brace_to_json(inp.H),
        "phi_A": matrix_to_json(inp.phi_A),
        "psi_H": matrix_to_json(inp.psi_H),
        "phi2_A": matrix_to_json(inp.phi2_A),
    }


def matched_pair_from_json(payload: dict, field: FieldSpec | None = None):
    from .brace import MatchedPairInput

    _check_header(payload, "matched_pair")
    _require(payload, "A", "H", "phi_A", "psi_H", "phi2_A")
    F = _field_of(payload, field)
    A = hopf_algebra_from_json(payload["A"], F)
    H = brace_from_json(payload["H"], F)
    a, n = A.dim, H.dim
    return MatchedPairInput(
        A, H,
        matrix_from_json(F, payload["phi_A"], a, n * a, "phi_A"),
        matrix_from_json(F, payload["psi_H"], n, n * a, "psi_H"),
        matrix_from_json(F, payload["phi2_A"], a, n * a, "phi2_A"),
    )


def projection_to_json(P) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "kind": "projection",
        "field": P.H.field.to_json(),
        "H": brace_to_json(P.H),
        "D": brace_to_json(P.D),
        "x": matrix_to_json(P.x),
        "y": matrix_to_json(P.y),
    }


def projection_from_json(payload: dict, field: FieldSpec | None = None):
    from .projection import HopfBraceProjection

    _check_header(payload, "projection")
    _require(payload, "H", "D", "x", "y")
    F = _field_of(payload, field)
    H = brace_from_json(payload["H"], F)
    D = brace_from_json(payload["D"], F)
    x = matrix_from_json(F, payload["x"], D.dim, H.dim, "x")
    y = matrix_from_json(F, payload["y"], H.dim, D.dim, "y")
    return HopfBraceProjection(H, D, x, y)


def witnesses_to_json(members) -> dict:
    out = []
    for V in members:
        out.append({
            "carrier_dim": V.carrier_dim,
            "act1": matrix_to_json(V.act1),
            "act2": matrix_to_json(V.act2),
            "coact": matrix_to_json(V.coact),
        })
    field = members[0].module.brace.field if members else None
    doc = {"schema": SCHEMA_VERSION, "kind": "witnesses", "members": out}
    if field is not None:
        doc["field"] = field.to_json()
    return doc


def witnesses_from_json(payload: dict, base: HopfBrace):
    """Witness modules are interpreted over the supplied base Hopf brace."""
    _check_header(payload, "witnesses")
    _require(payload, "members")
    F = base.field
    n = base.dim
    members = []
    for k, m in enumerate(payload["members"]):
        for key in ("carrier_dim", "act1", "act2", "coact"):
            if key not in m:
                raise SchemaError(f"witness {k}: missing key {key!r}")
        a = m["carrier_dim"]
        act1 = matrix_from_json(F, m["act1"], a, n * a, f"witness{k}.act1")
        act2 = matrix_from_json(F, m["act2"], a, n * a, f"witness{k}.act2")
        coact = matrix_from_json(F, m["coact"], n * a, a, f"witness{k}.coact")
        members.append(WeakYDModule(HBraceModule(base, a, act1, act2), coact))
    return tuple(members)


_LOADERS = {
    "skew_brace": skew_brace_from_json,
    "hopf_algebra": hopf_algebra_from_json,
    "brace": brace_from_json,
    "yd_brace": yd_brace_from_json,
    "matched_pair": matched_pair_from_json,
    "projection": projection_from_json,
}


def load_payload(payload: dict, field: FieldSpec | None = None):
    """Dispatch on "kind"; returns (kind, object)."""
    _check_header(payload)
    kind = payload.get("kind")
    if kind == "group":
        return kind, group_from_json(payload)
    if kind not in _LOADERS:
        raise SchemaError(f"unknown kind {kind!r}")
    if kind == "skew_brace":
        return kind, skew_brace_from_json(payload)
    return kind, _LOADERS[kind](payload, field)


def dumps(obj) -> str:
    """Canonical deterministic rendering: sorted keys, fixed separators."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def group_algebra_from_group_json(payload: dict, field: FieldSpec) -> HopfAlgebraData:
    order, table, e = group_from_json(payload)
    return group_algebra(order, table, field, e)
