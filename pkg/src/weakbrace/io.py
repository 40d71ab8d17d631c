"""JSON documents for tables, weak braces, pair maps and product systems.

A document is a JSON object carrying ``schemaVersion`` and ``kind`` next to
the payload fields of that kind:

* ``semigroup``: ``{"order", "labels", "table"}``
* ``weak-brace``: ``{"labels", "add", "mul"}``
* ``pair-map``: ``{"order", "map": [[a', b'], ...]}`` indexed by ``a * n + b``
* ``matched-system``: ``{"S", "T", "alpha", "beta"}``; a missing ``beta`` means
  the identity action (a semidirect product)
* ``double-system``: ``{"S", "T", "sigma", "delta"}``

Bare payloads without the envelope are accepted; the kind is then inferred
from the keys present.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import numpy as np

from .brace import WeakBrace, make_weak_brace
from .constructions import DoubleSystem, MatchedSystem, validate_double_system, validate_matched_system
from .errors import MalformedDocument
from .semigroup import CayleyTable
from .solutions import PairMap

SCHEMA_VERSION = "1"

_KEYS = {
    "semigroup": ("order", "labels", "table"),
    "weak-brace": ("labels", "add", "mul"),
    "pair-map": ("order", "map"),
    "matched-system": ("S", "T", "alpha", "beta"),
    "double-system": ("S", "T", "sigma", "delta"),
}
_REQUIRED = {
    "semigroup": ("table",),
    "weak-brace": ("add", "mul"),
    "pair-map": ("map",),
    "matched-system": ("S", "T", "alpha"),
    "double-system": ("S", "T", "sigma", "delta"),
}
KINDS = tuple(_KEYS)


@dataclass(frozen=True)
class Document:
    kind: str
    payload: dict = field(default_factory=dict)
    schema_version: str = SCHEMA_VERSION


def _infer_kind(obj: dict) -> str:
    if "sigma" in obj or "delta" in obj:
        return "double-system"
    if "alpha" in obj or "beta" in obj:
        return "matched-system"
    if "add" in obj or "mul" in obj:
        return "weak-brace"
    if "map" in obj:
        return "pair-map"
    if "table" in obj:
        return "semigroup"
    raise MalformedDocument("cannot infer document kind from keys " + ", ".join(sorted(obj)))


def parse(source: str | bytes | dict) -> Document:
    """Parse JSON text or an already-decoded object into a :class:`Document`."""
    if isinstance(source, (str, bytes)):
        try:
            obj = json.loads(source)
        except json.JSONDecodeError as exc:
            raise MalformedDocument(f"invalid JSON: {exc}") from exc
    else:
        obj = source
    if not isinstance(obj, dict):
        raise MalformedDocument("a document must be a JSON object")
    version = obj.get("schemaVersion", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise MalformedDocument(f"unsupported schemaVersion {version!r}")
    kind = obj.get("kind") or _infer_kind(obj)
    if kind not in _KEYS:
        raise MalformedDocument(f"unknown kind {kind!r}")
    missing = [k for k in _REQUIRED[kind] if k not in obj]
    if missing:
        raise MalformedDocument(f"{kind} document lacks {', '.join(missing)}")
    payload = {k: obj[k] for k in _KEYS[kind] if k in obj and obj[k] is not None}
    for k in ("S", "T"):
        if k in payload:
            payload[k] = parse(payload[k]).payload
    return Document(kind, payload, version)


def emit(doc: Document) -> dict:
    return {"schemaVersion": doc.schema_version, "kind": doc.kind, **doc.payload}


def _pretty(value, depth: int) -> str:
    pad = "  " * (depth + 1)
    if isinstance(value, dict):
        items = [f"{pad}{json.dumps(k)}: {_pretty(v, depth + 1)}" for k, v in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * depth + "}"
    if isinstance(value, list) and value and isinstance(value[0], list):
        rows = [pad + json.dumps(row, separators=(",", ":")) for row in value]
        return "[\n" + ",\n".join(rows) + "\n" + "  " * depth + "]"
    return json.dumps(value, separators=(",", ":")) if isinstance(value, list) else json.dumps(value)


def dumps(doc: Document, pretty: bool = False) -> str:
    """JSON text of ``doc``; ``pretty`` puts each table row on its own line."""
    obj = emit(doc)
    return _pretty(obj, 0) if pretty else json.dumps(obj, separators=(",", ":"))


def load(path: str | Path) -> Document:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise MalformedDocument(f"cannot read {path}: {exc}") from exc
    return parse(text)


def save(doc: Document, path: str | Path) -> None:
    Path(path).write_text(dumps(doc, pretty=True) + "\n")


# -- conversions ------------------------------------------------------------

def _labels(payload: dict):
    labels = payload.get("labels")
    return tuple(labels) if labels is not None else None


def _int_array(value, what: str, ndim: int) -> np.ndarray:
    try:
        arr = np.asarray(value, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise MalformedDocument(f"{what} must be an integer array") from exc
    if arr.ndim != ndim:
        raise MalformedDocument(f"{what} must be {ndim}-dimensional")
    return arr


def to_table(doc: Document) -> CayleyTable:
    if doc.kind != "semigroup":
        raise MalformedDocument(f"expected a semigroup document, got {doc.kind}")
    p = doc.payload
    table = CayleyTable(_int_array(p["table"], "table", 2), _labels(p))
    if "order" in p and p["order"] != table.order:
        raise MalformedDocument(f"order {p['order']} does not match table size {table.order}")
    return table


def brace_tables(doc: Document) -> tuple[CayleyTable, CayleyTable]:
    """The raw ``(add, mul)`` tables of a weak-brace document, unvalidated."""
    if doc.kind != "weak-brace":
        raise MalformedDocument(f"expected a weak-brace document, got {doc.kind}")
    p = doc.payload
    labels = _labels(p)
    return (CayleyTable(_int_array(p["add"], "add", 2), labels),
            CayleyTable(_int_array(p["mul"], "mul", 2), labels))


def to_weak_brace(doc: Document) -> WeakBrace:
    return make_weak_brace(*brace_tables(doc))


def to_pair_map(doc: Document) -> PairMap:
    if doc.kind != "pair-map":
        raise MalformedDocument(f"expected a pair-map document, got {doc.kind}")
    p = doc.payload
    pairs = _int_array(p["map"], "map", 2)
    if pairs.size and pairs.shape[1] != 2:
        raise MalformedDocument("map entries must be pairs")
    n = int(round(len(pairs) ** 0.5))
    order = p.get("order", n)
    if order * order != len(pairs) or order < 1:
        raise MalformedDocument(f"map must have order^2 = {order * order} entries, got {len(pairs)}")
    if pairs.min() < 0 or pairs.max() >= order:
        raise MalformedDocument(f"map entries must lie in 0..{order - 1}")
    return PairMap.from_pairs(order, pairs.tolist())


def to_system(doc: Document, cap: int | None = None) -> MatchedSystem | DoubleSystem:
    p = doc.payload
    S = to_weak_brace(Document("weak-brace", p["S"]))
    T = to_weak_brace(Document("weak-brace", p["T"]))
    kw = {} if cap is None else {"cap": cap}
    if doc.kind == "matched-system":
        beta = p.get("beta")
        beta = np.tile(np.arange(T.order), (S.order, 1)) if beta is None else _int_array(beta, "beta", 2)
        return validate_matched_system(S, T, _int_array(p["alpha"], "alpha", 2), beta, **kw)
    if doc.kind == "double-system":
        return validate_double_system(S, T, _int_array(p["sigma"], "sigma", 2),
                                      _int_array(p["delta"], "delta", 2), **kw)
    raise MalformedDocument(f"expected a system document, got {doc.kind}")


def _with_labels(payload: dict, labels) -> dict:
    if labels is not None:
        payload["labels"] = list(labels)
    return payload


def table_doc(t: CayleyTable) -> Document:
    return Document("semigroup", _with_labels({"order": t.order, "table": t.tolist()}, t.labels))


def brace_doc(wb: WeakBrace) -> Document:
    return Document("weak-brace", _with_labels({"add": wb.A.tolist(), "mul": wb.M.tolist()}, wb.labels))


def pair_map_doc(pm: PairMap) -> Document:
    return Document("pair-map", {"order": pm.order, "map": pm.pairs()})


def system_doc(sys: MatchedSystem | DoubleSystem) -> Document:
    S, T = brace_doc(sys.S).payload, brace_doc(sys.T).payload
    if isinstance(sys, MatchedSystem):
        return Document("matched-system", {"S": S, "T": T, "alpha": sys.alpha.maps.tolist(),
                                           "beta": sys.beta.maps.tolist()})
    return Document("double-system", {"S": S, "T": T, "sigma": sys.sigma.maps.tolist(),
                                      "delta": sys.delta.maps.tolist()})


def to_document(obj: Any) -> Document:
    if isinstance(obj, Document):
        return obj
    if isinstance(obj, CayleyTable):
        return table_doc(obj)
    if isinstance(obj, WeakBrace):
        return brace_doc(obj)
    if isinstance(obj, PairMap):
        return pair_map_doc(obj)
    if isinstance(obj, (MatchedSystem, DoubleSystem)):
        return system_doc(obj)
    raise TypeError(f"no document form for {type(obj).__name__}")
