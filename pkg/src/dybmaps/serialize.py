"""JSON interchange for all table kinds.

Schemas (all 0-based):
  {"kind": "binary",    "order": n, "table": [[...], ...]}          row-major
  {"kind": "bijection", "order": n, "map": [...]}
  {"kind": "ternary",   "order": n, "table": [... n^3 entries ...]} flat (a*n+b)*n+c
  {"kind": "dynmap",    "weight_order": h, "set_order": n,
   "phi": [[...], ...], "r": [[[ [u2, v2], ...], ...], ...]}        r[lam][u][v]
"""

from __future__ import annotations

import json
from pathlib import Path

from .binary import BinaryTable, Bijection, LeftQuasigroup
from .engine import DynamicalMap
from .ternary import TernaryTable


def to_jsonable(obj) -> dict:
    if isinstance(obj, LeftQuasigroup):
        obj = obj.base
    if isinstance(obj, BinaryTable):
        return {
            "kind": "binary",
            "order": obj.order,
            "table": [list(row) for row in obj.rows],
        }
    if isinstance(obj, Bijection):
        return {"kind": "bijection", "order": obj.order, "map": list(obj.map)}
    if isinstance(obj, TernaryTable):
        return {"kind": "ternary", "order": obj.order, "table": list(obj.table)}
    if isinstance(obj, DynamicalMap):
        return {
            "kind": "dynmap",
            "weight_order": obj.weight_order,
            "set_order": obj.set_order,
            "phi": [list(row) for row in obj.phi],
            "r": [
                [[list(pair) for pair in row] for row in lam_rows]
                for lam_rows in obj.r
            ],
        }
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def from_jsonable(doc: dict):
    if not isinstance(doc, dict) or "kind" not in doc:
        raise ValueError("document must be an object with a 'kind' key")
    kind = doc["kind"]
    if kind == "binary":
        t = BinaryTable.from_rows(doc["table"])
        if t.order != doc.get("order", t.order):
            raise ValueError("declared order disagrees with table shape")
        return t
    if kind == "bijection":
        b = Bijection.make(doc["map"])
        if b.order != doc.get("order", b.order):
            raise ValueError("declared order disagrees with map length")
        return b
    if kind == "ternary":
        return TernaryTable.from_flat(int(doc["order"]), doc["table"])
    if kind == "dynmap":
        phi = tuple(tuple(int(x) for x in row) for row in doc["phi"])
        r = tuple(
            tuple(
                tuple((int(pair[0]), int(pair[1])) for pair in row)
                for row in lam_rows
            )
            for lam_rows in doc["r"]
        )
        R = DynamicalMap(phi=phi, r=r)
        if R.weight_order != int(doc["weight_order"]) or R.set_order != int(
            doc["set_order"]
        ):
            raise ValueError("declared orders disagree with table shapes")
        if len(r) != R.weight_order or any(
            len(lam_rows) != R.set_order
            or any(len(row) != R.set_order for row in lam_rows)
            for lam_rows in r
        ):
            raise ValueError("map table shape disagrees with declared orders")
        for lam_rows in r:
            for row in lam_rows:
                for a, b in row:
                    if not (0 <= a < R.set_order and 0 <= b < R.set_order):
                        raise ValueError("map output out of range")
        for row in phi:
            if len(row) != R.set_order:
                raise ValueError("weight-shift row length disagrees")
            for x in row:
                if not 0 <= x < R.weight_order:
                    raise ValueError("weight shift out of range")
        return R
    raise ValueError(f"unknown kind {kind!r}")


def dumps(obj, **kw) -> str:
    return json.dumps(to_jsonable(obj), **kw)


def loads(text: str):
    return from_jsonable(json.loads(text))


def dump(obj, path) -> None:
    Path(path).write_text(dumps(obj, indent=2) + "\n", encoding="utf-8")


def load(path):
    return loads(Path(path).read_text(encoding="utf-8"))
