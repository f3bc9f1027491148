"""Versioned JSON files for point sets and edge lists.

Floats are written with Python's shortest round-trip repr, so reading a file
back reproduces every coordinate bit for bit.
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Optional

from .geometry import euclid
from .graphs import GeomGraph, PointSet

POINTSET_FORMAT = "yaoradius.pointset"
EDGELIST_FORMAT = "yaoradius.edgelist"
VERSION = "1"


class FormatError(ValueError):
    pass


def pointset_to_dict(s: PointSet, metadata: Optional[dict] = None) -> dict:
    doc = {
        "format": POINTSET_FORMAT,
        "version": VERSION,
        "points": [[p.x, p.y] for p in s],
    }
    if s.labels is not None:
        doc["labels"] = list(s.labels)
    doc["metadata"] = dict(metadata or {})
    return doc


def pointset_from_dict(doc: dict) -> tuple[PointSet, dict]:
    if not isinstance(doc, dict) or doc.get("format") != POINTSET_FORMAT:
        raise FormatError(f"not a {POINTSET_FORMAT} document")
    if doc.get("version") != VERSION:
        raise FormatError(f"unsupported point-set version {doc.get('version')!r}")
    pts = doc.get("points")
    if not isinstance(pts, list) or not all(isinstance(p, list) and len(p) == 2 for p in pts):
        raise FormatError("points must be a list of [x, y] pairs")
    try:
        s = PointSet(pts, doc.get("labels"))
    except (TypeError, ValueError) as exc:
        raise FormatError(str(exc)) from exc
    return s, dict(doc.get("metadata") or {})


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=1, allow_nan=False) + "\n"


def write_pointset(path, s: PointSet, metadata: Optional[dict] = None) -> None:
    Path(path).write_text(dumps(pointset_to_dict(s, metadata)))


def _load_json(path):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path} is not valid JSON: {exc}") from exc


def read_pointset(path) -> tuple[PointSet, dict]:
    return pointset_from_dict(_load_json(path))


def graph_to_dict(g: GeomGraph, metadata: Optional[dict] = None) -> dict:
    return {
        "format": EDGELIST_FORMAT,
        "version": VERSION,
        "directed": g.directed,
        "n": g.n,
        "edges": [[u, v, length] for (u, v), length in g.edges.items()],
        "metadata": dict(metadata or {}),
    }


def edges_from_dict(doc: dict, points: Optional[PointSet] = None, tol: float = 1e-12) -> dict:
    """Validate an edge-list document; with ``points``, also check indices and lengths against it."""
    if not isinstance(doc, dict) or doc.get("format") != EDGELIST_FORMAT:
        raise FormatError(f"not a {EDGELIST_FORMAT} document")
    if doc.get("version") != VERSION:
        raise FormatError(f"unsupported edge-list version {doc.get('version')!r}")
    n = doc.get("n")
    if not isinstance(n, int) or n < 0:
        raise FormatError("n must be a non-negative integer")
    if points is not None and len(points) != n:
        raise FormatError(f"edge list is over {n} nodes but the point set has {len(points)}")
    edges = doc.get("edges")
    if not isinstance(edges, list):
        raise FormatError("edges must be a list")
    for e in edges:
        if not (isinstance(e, list) and len(e) == 3):
            raise FormatError(f"edge {e!r} is not a [source, target, length] triple")
        u, v, length = e
        if not (isinstance(u, int) and isinstance(v, int) and 0 <= u < n and 0 <= v < n and u != v):
            raise FormatError(f"edge {e!r} has endpoints outside [0, {n}) or is a loop")
        if not isinstance(length, (int, float)) or not math.isfinite(length):
            raise FormatError(f"edge {e!r} has a non-finite length")
        if points is not None and abs(euclid(points[u], points[v]) - length) > tol:
            raise FormatError(f"edge {e!r} length disagrees with the point set")
    return doc


def write_graph(path, g: GeomGraph, metadata: Optional[dict] = None) -> None:
    Path(path).write_text(dumps(graph_to_dict(g, metadata)))


def read_edges(path, points: Optional[PointSet] = None) -> dict:
    return edges_from_dict(_load_json(path), points)
