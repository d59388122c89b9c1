"""JSON formats for polytopes and graphs.

Polytope: ``{"ambient_dim": N, "vertices": [[...], ...]}``.
Graph: ``{"vertices": d, "edges": [[i, j], ...]}`` with 1-based labels.
Integers outside the signed 64-bit range are written as decimal strings and
accepted back in either form.
"""

from __future__ import annotations

import json
from typing import Any

from .graphs import SimpleGraph
from .polytope import LatticePolytope

INT64 = 2**63


def encode_int(a: int) -> int | str:
    a = int(a)
    return a if -INT64 <= a < INT64 else str(a)


def decode_int(a: Any) -> int:
    if isinstance(a, bool):
        raise ValueError("booleans are not integers")
    if isinstance(a, int):
        return a
    if isinstance(a, str):
        return int(a.strip())
    if isinstance(a, float) and a.is_integer():
        return int(a)
    raise ValueError(f"not an integer: {a!r}")


def encode(obj: Any) -> Any:
    """Recursively make ints JSON-safe and tuples into lists."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return encode_int(obj)
    if isinstance(obj, dict):
        return {k: encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(v) for v in obj]
    if hasattr(obj, "item"):  # numpy scalar
        return encode(obj.item())
    return obj


def polytope_to_json(P: LatticePolytope) -> dict:
    return {"ambient_dim": P.ambient_dim, "vertices": encode([list(v) for v in P.vertices])}


def polytope_from_json(data: dict | str) -> LatticePolytope:
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict) or "vertices" not in data:
        raise ValueError('polytope JSON needs a "vertices" list')
    verts = [tuple(decode_int(a) for a in v) for v in data["vertices"]]
    if "ambient_dim" in data:
        N = decode_int(data["ambient_dim"])
        if any(len(v) != N for v in verts):
            raise ValueError("vertex length differs from ambient_dim")
    return LatticePolytope.from_points(verts)


def graph_to_json(G: SimpleGraph) -> dict:
    return {"vertices": G.d, "edges": [list(e) for e in G.edges]}


def graph_from_json(data: dict | str) -> SimpleGraph:
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
        raise ValueError('graph JSON needs "vertices" and "edges"')
    return SimpleGraph(decode_int(data["vertices"]),
                       [[decode_int(a) for a in e] for e in data["edges"]])


def dumps(obj: Any) -> str:
    return json.dumps(encode(obj), sort_keys=False, separators=(", ", ": "))
