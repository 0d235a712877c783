"""JSON documents for coalgebras, comodules, quivers, dimension vectors, subspaces and modules.

Every document carries ``"version": "coalglab/1"``.  Scalars are strings:
``"p/q"`` over Q, decimal integers over GF(p).  The kind is read from the keys
present.  :func:`dumps` writes sorted keys with reduced scalars, so a parse
followed by a serialize is byte-stable.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import jsonschema

from .coalgebra import Coalgebra, Quiver, Subspace
from .comodule import Comodule, DimensionVector
from .embeddings import FreeAlgebraModule, NilpotentFreeModule, QuiverRep
from .errors import InputError
from .exactlin.field import Field, field_from_name

VERSION = "coalglab/1"

_scalar = {"type": "string", "pattern": r"^-?\d+(/-?\d+)?$"}
_label = {"type": "string", "minLength": 1}
_index = {"type": "integer", "minimum": 0}
_matrix = {"type": "array", "items": {"type": "array", "items": _scalar}}
_field = {"type": "string", "pattern": r"^(Q|GF:\d+)$"}

SCHEMAS = {
    "coalgebra": {
        "type": "object",
        "required": ["version", "field", "basis", "delta", "counit"],
        "properties": {
            "version": {"const": VERSION},
            "field": _field,
            "basis": {"type": "array", "items": _label},
            "delta": {"type": "array",
                      "items": {"type": "array", "prefixItems": [_index, _index, _index, _scalar],
                                "minItems": 4, "maxItems": 4}},
            "counit": {"type": "array", "items": _scalar},
        },
        "additionalProperties": False,
    },
    "comodule": {
        "type": "object",
        "required": ["version", "coalgebra", "dim", "rho"],
        "properties": {
            "version": {"const": VERSION},
            "coalgebra": {"oneOf": [{"type": "string"}, {"type": "object"}]},
            "dim": _index,
            "rho": {"type": "array",
                    "items": {"type": "array", "prefixItems": [_index, _index, _index, _scalar],
                              "minItems": 4, "maxItems": 4}},
        },
        "additionalProperties": False,
    },
    "quiver": {
        "type": "object",
        "required": ["version", "vertices", "arrows"],
        "properties": {
            "version": {"const": VERSION},
            "vertices": {"type": "array", "items": _label},
            "arrows": {"type": "array",
                       "items": {"type": "array", "prefixItems": [_label, _label, _label],
                                 "minItems": 3, "maxItems": 3}},
        },
        "additionalProperties": False,
    },
    "dimvec": {
        "type": "object",
        "required": ["version", "entries"],
        "properties": {
            "version": {"const": VERSION},
            "entries": {"type": "object", "additionalProperties": _index},
        },
        "additionalProperties": False,
    },
    "subspace": {
        "type": "object",
        "required": ["version", "field", "ambient", "rows"],
        "properties": {
            "version": {"const": VERSION},
            "field": _field,
            "ambient": _index,
            "rows": _matrix,
        },
        "additionalProperties": False,
    },
    "module": {
        "type": "object",
        "required": ["version", "field", "dim", "gens"],
        "properties": {
            "version": {"const": VERSION},
            "field": _field,
            "dim": _index,
            "gens": {"type": "array", "items": _matrix},
            "names": {"type": "array", "items": _label},
            "nilpotent": {"type": "boolean"},
        },
        "additionalProperties": False,
    },
    "representation": {
        "type": "object",
        "required": ["version", "field", "quiver", "spaces", "maps"],
        "properties": {
            "version": {"const": VERSION},
            "field": _field,
            "quiver": {"type": "object"},
            "spaces": {"type": "object", "additionalProperties": _index},
            "maps": {"type": "object", "additionalProperties": _matrix},
        },
        "additionalProperties": False,
    },
}

# keys that identify each kind, checked in this order
_SIGNATURES = [
    ("representation", {"quiver", "spaces", "maps"}),
    ("comodule", {"coalgebra", "rho"}),
    ("coalgebra", {"basis", "delta", "counit"}),
    ("quiver", {"vertices", "arrows"}),
    ("dimvec", {"entries"}),
    ("subspace", {"ambient", "rows"}),
    ("module", {"gens"}),
]


def _where(err: jsonschema.ValidationError) -> str:
    path = "$"
    for part in err.absolute_path:
        path += f"[{part}]" if isinstance(part, int) else f".{part}"
    return path


def detect_kind(doc: Any) -> str:
    if not isinstance(doc, dict):
        raise InputError("$: document must be a JSON object")
    if "version" not in doc:
        raise InputError("$.version: missing schema version")
    if doc["version"] != VERSION:
        raise InputError(f"$.version: unsupported version {doc['version']!r} (expected {VERSION!r})")
    if doc.get("kind") == "report":
        return "report"
    for kind, keys in _SIGNATURES:
        if keys <= set(doc):
            return kind
    raise InputError(f"$: cannot tell the document kind from keys {sorted(doc)}")


def validate(doc: Any, kind: str | None = None) -> str:
    kind = kind or detect_kind(doc)
    if kind == "report":
        return kind
    validator = jsonschema.Draft202012Validator(SCHEMAS[kind])
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        e = errors[0]
        raise InputError(f"{_where(e)}: {e.message}")
    return kind


def loads_json(text: str, source: str = "<input>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


def dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _scalars(field: Field, items) -> list:
    try:
        return [field.parse(x) for x in items]
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad scalar: {exc}") from None


def _fmt(field: Field, rows) -> list:
    return [[field.format(x) for x in r] for r in rows]


# ---------------------------------------------------------------- to documents


def coalgebra_doc(c: Coalgebra) -> dict:
    f = c.field
    delta = [[i, j, k, f.format(x)] for i, terms in enumerate(c.delta) for j, k, x in terms]
    return {"version": VERSION, "field": f.name, "basis": list(c.labels), "delta": delta,
            "counit": [f.format(x) for x in c.counit]}


def comodule_doc(m: Comodule, coalgebra_ref: str | None = None) -> dict:
    f = m.field
    rho = [[s, i, t, f.format(x)] for s, i, t, x in m.rho]
    return {"version": VERSION, "coalgebra": coalgebra_ref or coalgebra_doc(m.coalgebra), "dim": m.dim, "rho": rho}


def quiver_doc(q: Quiver) -> dict:
    return {"version": VERSION, "vertices": list(q.vertices), "arrows": [list(a) for a in q.arrows]}


def dimvec_doc(d: DimensionVector) -> dict:
    return {"version": VERSION, "entries": d.as_dict()}


def subspace_doc(v: Subspace) -> dict:
    return {"version": VERSION, "field": v.field.name, "ambient": v.n, "rows": _fmt(v.field, v.rows)}


def module_doc(m: FreeAlgebraModule) -> dict:
    return {"version": VERSION, "field": m.field.name, "dim": m.dim, "gens": [_fmt(m.field, g) for g in m.gens],
            "names": list(m.names), "nilpotent": isinstance(m, NilpotentFreeModule)}


def representation_doc(r: QuiverRep) -> dict:
    return {"version": VERSION, "field": r.field.name, "quiver": quiver_doc(r.quiver),
            "spaces": dict(r.spaces), "maps": {k: _fmt(r.field, v) for k, v in r.maps.items()}}


def to_doc(obj) -> dict:
    for cls, fn in ((Coalgebra, coalgebra_doc), (Comodule, comodule_doc), (Quiver, quiver_doc),
                    (DimensionVector, dimvec_doc), (Subspace, subspace_doc), (FreeAlgebraModule, module_doc),
                    (QuiverRep, representation_doc)):
        if isinstance(obj, cls):
            return fn(obj)
    raise TypeError(f"no document form for {type(obj).__name__}")


# ---------------------------------------------------------------- from documents


def _coalgebra(doc: dict) -> Coalgebra:
    f = field_from_name(doc["field"])
    n = len(doc["basis"])
    if len(doc["counit"]) != n:
        raise InputError(f"$.counit: expected {n} entries, got {len(doc['counit'])}")
    delta = [[] for _ in range(n)]
    for pos, (i, j, k, x) in enumerate(doc["delta"]):
        if max(i, j, k) >= n:
            raise InputError(f"$.delta[{pos}]: index out of range for {n} basis elements")
        delta[i].append((j, k, _scalars(f, [x])[0]))
    if len(set(doc["basis"])) != n:
        raise InputError("$.basis: labels must be distinct")
    return Coalgebra(f, doc["basis"], delta, _scalars(f, doc["counit"]))


def _comodule(doc: dict, base: Path | None) -> Comodule:
    ref = doc["coalgebra"]
    if isinstance(ref, str):
        path = Path(ref) if base is None else base / ref
        c = load(path)
        if not isinstance(c, Coalgebra):
            raise InputError(f"$.coalgebra: {ref} is not a coalgebra document")
    else:
        validate(ref, "coalgebra")
        c = _coalgebra(ref)
    f = c.field
    dim = doc["dim"]
    rho = []
    for pos, (s, i, t, x) in enumerate(doc["rho"]):
        if s >= dim or t >= dim or i >= c.dim:
            raise InputError(f"$.rho[{pos}]: index out of range")
        rho.append((s, i, t, _scalars(f, [x])[0]))
    return Comodule(c, dim, rho)


def _quiver(doc: dict) -> Quiver:
    try:
        return Quiver(tuple(doc["vertices"]), tuple(tuple(a) for a in doc["arrows"]))
    except ValueError as exc:
        raise InputError(f"$.arrows: {exc}") from None


def _rows(f: Field, rows, width: int | None, where: str) -> list:
    out = [_scalars(f, r) for r in rows]
    if width is not None and any(len(r) != width for r in out):
        raise InputError(f"{where}: every row needs {width} entries")
    return out


def from_doc(doc: Any, base: Path | None = None):
    kind = validate(doc)
    if kind == "coalgebra":
        return _coalgebra(doc)
    if kind == "comodule":
        return _comodule(doc, base)
    if kind == "quiver":
        return _quiver(doc)
    if kind == "dimvec":
        return DimensionVector.of(doc["entries"])
    if kind == "subspace":
        f = field_from_name(doc["field"])
        rows = _rows(f, doc["rows"], doc["ambient"], "$.rows")
        return Subspace.span(f, doc["ambient"], rows) if rows else Subspace.zero(f, doc["ambient"])
    if kind == "module":
        f = field_from_name(doc["field"])
        gens = [_rows(f, g, doc["dim"], f"$.gens[{i}]") for i, g in enumerate(doc["gens"])]
        cls = NilpotentFreeModule if doc.get("nilpotent", False) else FreeAlgebraModule
        return cls(f, doc["dim"], gens, tuple(doc.get("names", ())))
    if kind == "representation":
        f = field_from_name(doc["field"])
        validate(doc["quiver"], "quiver")
        q = _quiver(doc["quiver"])
        maps = {k: _rows(f, v, None, f"$.maps.{k}") for k, v in doc["maps"].items()}
        return QuiverRep(q, f, dict(doc["spaces"]), maps)
    raise InputError(f"cannot load a {kind} document")


def loads(text: str, base: Path | None = None, source: str = "<input>"):
    return from_doc(loads_json(text, source), base)


def load(path: str | Path):
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text, path.parent, str(path))


def canonicalize(text: str) -> str:
    """Parse then serialize; the result is stable under repetition."""
    doc = loads_json(text)
    return dumps(to_doc(from_doc(doc)))


__all__ = [
    "VERSION", "SCHEMAS", "detect_kind", "validate", "loads_json", "dumps", "coalgebra_doc", "comodule_doc",
    "quiver_doc", "dimvec_doc", "subspace_doc", "module_doc", "representation_doc", "to_doc", "from_doc",
    "loads", "load", "canonicalize",
]
