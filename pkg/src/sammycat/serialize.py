"""JSON encoding of runtime values.

A category is ``{"objects": n, "morphisms": [{"src": a, "tgt": b}, ...],
"identities": [...], "comp": [[g, f, gf], ...]}``; composites are listed in
``(g, f)`` order.  Functors and transformations embed their categories.
Decoding then re-encoding reproduces the input text exactly when it was
produced by :func:`dumps`.
"""

from __future__ import annotations

import json

from .errors import ParseError
from .fincat import FinCat, FunctorData, MorRef, NatTransData, ObjRef


def to_obj(x):
    if isinstance(x, FinCat):
        n = x.n_mor
        return {
            "kind": "cat",
            "objects": x.n_obj,
            "morphisms": [{"src": a, "tgt": b} for a, b in zip(x.src, x.tgt)],
            "identities": list(x.ident),
            "comp": [[g, f, x.comp[g * n + f]] for g in range(n) for f in range(n)
                     if x.comp[g * n + f] >= 0],
        }
    if isinstance(x, FunctorData):
        return {"kind": "functor", "dom": to_obj(x.dom), "cod": to_obj(x.cod),
                "obj_map": list(x.obj_map), "mor_map": list(x.mor_map)}
    if isinstance(x, NatTransData):
        return {"kind": "nat", "source": to_obj(x.src_fun), "target": to_obj(x.tgt_fun),
                "components": list(x.components)}
    if isinstance(x, ObjRef):
        return {"kind": "obj", "cat": to_obj(x.cat), "id": x.id}
    if isinstance(x, MorRef):
        return {"kind": "mor", "cat": to_obj(x.cat), "id": x.id}
    if isinstance(x, tuple):
        return {"kind": "tuple", "items": [to_obj(v) for v in x]}
    raise TypeError(f"cannot serialize {type(x).__name__}")


def _ints(v, what):
    if not isinstance(v, list) or not all(isinstance(i, int) and not isinstance(i, bool) for i in v):
        raise ParseError(f"{what} must be a list of integers")
    return v


def from_obj(d):
    if not isinstance(d, dict):
        raise ParseError("expected a JSON object")
    kind = d.get("kind", "cat" if "objects" in d else None)
    try:
        if kind == "cat":
            n_obj = d["objects"]
            if not isinstance(n_obj, int) or n_obj < 0:
                raise ParseError("objects must be a non-negative integer")
            arrows = [(m["src"], m["tgt"]) for m in d["morphisms"]]
            ident = _ints(d["identities"], "identities")
            n = len(arrows)
            triples = []
            for t in d["comp"]:
                g, f, h = _ints(t, "comp entry")
                if not (0 <= g < n and 0 <= f < n):
                    raise ParseError(f"comp entry {t} names an unknown morphism")
                triples.append((g, f, h))
            return FinCat.build(n_obj, arrows, ident, triples)
        if kind == "functor":
            return FunctorData(from_obj(d["dom"]), from_obj(d["cod"]),
                               _ints(d["obj_map"], "obj_map"), _ints(d["mor_map"], "mor_map"))
        if kind == "nat":
            return NatTransData(from_obj(d["source"]), from_obj(d["target"]),
                                _ints(d["components"], "components"))
        if kind in ("obj", "mor"):
            cls = ObjRef if kind == "obj" else MorRef
            return cls(from_obj(d["cat"]), d["id"])
        if kind == "tuple":
            return tuple(from_obj(v) for v in d["items"])
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"malformed {kind} value: {e}") from None
    raise ParseError(f"unknown value kind {kind!r}")


def dumps(x, indent: int | None = None) -> str:
    return json.dumps(to_obj(x), indent=indent, sort_keys=True)


def loads(text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", e.lineno, e.colno) from None
    return from_obj(data)
