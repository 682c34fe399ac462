"""JSON interchange documents.

Keys are sorted, relations are lists of ``[a, b]`` identifier pairs sorted
lexicographically, and maps are objects; ``serialize`` output is canonical.

    {"type": "algebra", "signature": "HBGC",
     "elements": ["{}", "{p0}"], "order": [["{p0}", "{p0}"], ["{}", "{p0}"], ["{}", "{}"]],
     "f": {"{}": "{}", "{p0}": "{p0}"}, "g": {...}}
"""
from __future__ import annotations

import json

from roughlat.bits import members
from roughlat.errors import DocumentError
from roughlat.frame import GCFrame, validate_gcframe
from roughlat.galois import GaloisPair, validate_galois
from roughlat.lattice import FiniteLattice, lattice_from_order
from roughlat.order import QuasiOrder, validate_quasiorder
from roughlat.rough import ApproximationSpace

TYPES = ("poset", "quasiorder", "lattice", "frame", "algebra")


def _pairs(carrier, rows):
    out = [[carrier[x], carrier[y]] for x in range(len(carrier)) for y in members(rows[x])]
    return sorted(out, key=lambda p: (str(p[0]), str(p[1])))


def to_record(obj) -> dict:
    if isinstance(obj, GaloisPair):
        lat = obj.base
        return {
            "type": "algebra",
            "signature": obj.signature,
            "elements": list(lat.carrier),
            "order": _pairs(lat.carrier, lat.up),
            "f": obj.named("f"),
            "g": obj.named("g"),
        }
    if isinstance(obj, FiniteLattice):
        return {"type": "lattice", "elements": list(obj.carrier), "order": _pairs(obj.carrier, obj.up)}
    if isinstance(obj, GCFrame):
        q = obj.order
        return {
            "type": "frame",
            "elements": list(q.carrier),
            "order": _pairs(q.carrier, q.up),
            "relation": _pairs(q.carrier, obj.succ),
        }
    if isinstance(obj, ApproximationSpace):
        # a space is a frame over the discrete order; every relation satisfies (CR) there
        n = obj.n
        return {
            "type": "frame",
            "elements": list(obj.universe),
            "order": _pairs(obj.universe, [1 << i for i in range(n)]),
            "relation": _pairs(obj.universe, obj.succ),
        }
    if isinstance(obj, QuasiOrder):
        return {
            "type": "poset" if obj.is_antisymmetric() else "quasiorder",
            "elements": list(obj.carrier),
            "order": _pairs(obj.carrier, obj.up),
        }
    raise DocumentError(f"cannot serialize {type(obj).__name__}")


def serialize(obj) -> str:
    return json.dumps(to_record(obj), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _field(rec, name):
    if name not in rec:
        raise DocumentError(f"document of type {rec.get('type')!r} lacks field {name!r}")
    return rec[name]


def _pair_list(rec, name):
    pairs = _field(rec, name)
    if not all(isinstance(p, list) and len(p) == 2 for p in pairs):
        raise DocumentError(f"field {name!r} must be a list of [a, b] pairs")
    return [tuple(p) for p in pairs]


def from_record(rec: dict):
    kind = rec.get("type")
    if kind not in TYPES:
        raise DocumentError(f"unknown document type {kind!r}")
    elements = _field(rec, "elements")
    order = _pair_list(rec, "order")
    if kind in ("poset", "quasiorder"):
        q = validate_quasiorder(elements, order)
        if kind == "poset" and not q.is_antisymmetric():
            raise DocumentError("poset document is not antisymmetric")
        return q
    if kind == "frame":
        return validate_gcframe(validate_quasiorder(elements, order), _pair_list(rec, "relation"))
    lat = lattice_from_order(elements, order)
    if kind == "lattice":
        return lat
    return validate_galois(lat, _field(rec, "f"), _field(rec, "g"), rec.get("signature", "BDLGC"))


def parse(text: str):
    try:
        rec = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not a JSON document: {exc}") from None
    if not isinstance(rec, dict):
        raise DocumentError("document must be a JSON object")
    return from_record(rec)


def load(path):
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def dump(obj, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(obj))
