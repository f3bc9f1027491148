"""Disk graphs, Yao subgraphs and connectivity queries over labeled point sets."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .geometry import Point, as_point, cone_number, euclid

TIE_BREAK_RULES = ("min-index",)


@dataclass(frozen=True)
class PointSet:
    """Ordered, duplicate-free points; index ``j`` is always the ``j``-th point."""

    points: tuple[Point, ...]
    labels: Optional[tuple[str, ...]] = None

    def __init__(self, points: Iterable[Sequence[float]], labels: Optional[Iterable[str]] = None):
        pts = tuple(as_point(p) for p in points)
        if len(set(pts)) != len(pts):
            seen = {}
            for j, p in enumerate(pts):
                if p in seen:
                    raise ValueError(f"points {seen[p]} and {j} coincide at {p}")
                seen[p] = j
        labs = None
        if labels is not None:
            labs = tuple(str(s) for s in labels)
            if len(labs) != len(pts):
                raise ValueError(f"{len(labs)} labels for {len(pts)} points")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "labels", labs)

    def __len__(self):
        return len(self.points)

    def __getitem__(self, j):
        return self.points[j]

    def __iter__(self):
        return iter(self.points)

    def index(self, label: str) -> int:
        if self.labels is None:
            raise KeyError(label)
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(label) from None

    def by_label(self, label: str) -> Point:
        return self.points[self.index(label)]

    def as_array(self) -> np.ndarray:
        return np.array(self.points, dtype=float).reshape(len(self.points), 2)


@dataclass(frozen=True)
class YaoParams:
    k: int
    tie_break: str = "min-index"

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"Yao graphs need k >= 2 cones, got k={self.k}")
        if self.tie_break not in TIE_BREAK_RULES:
            raise ValueError(f"unknown tie-break rule {self.tie_break!r}; known: {TIE_BREAK_RULES}")


@dataclass(frozen=True)
class GeomGraph:
    """Graph over the indices of ``points``; ``edges`` maps (source, target) to length.

    Undirected graphs key each edge once with ``source < target``.
    """

    points: PointSet
    directed: bool
    edges: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.points)

    def edge_set(self) -> set:
        return set(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        if self.directed:
            return (u, v) in self.edges
        return (min(u, v), max(u, v)) in self.edges

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg


def _make_graph(points: PointSet, pairs: Iterable[tuple[int, int]], directed: bool) -> GeomGraph:
    edges = {}
    for u, v in pairs:
        if not directed and u > v:
            u, v = v, u
        edges[(u, v)] = euclid(points[u], points[v])
    return GeomGraph(points, directed, dict(sorted(edges.items())))


def _coerce_params(params) -> YaoParams:
    return params if isinstance(params, YaoParams) else YaoParams(int(params))


class ConeTable:
    """Pairwise distances and cone indices of a point set, computed once.

    ``cone[p, q]`` is the 1-based cone of ``p`` containing ``q`` (0 on the
    diagonal). Reused across radii by the connectivity-radius search.
    """

    def __init__(self, points: PointSet, k: int):
        n = len(points)
        self.points = points
        self.k = k
        self.sq = np.zeros((n, n))
        self.dist = np.zeros((n, n))
        self.cone = np.zeros((n, n), dtype=np.int64)
        for p in range(n):
            px, py = points[p]
            for q in range(n):
                if p == q:
                    continue
                dx = points[q][0] - px
                dy = points[q][1] - py
                self.sq[p, q] = dx * dx + dy * dy
                self.dist[p, q] = math.hypot(dx, dy)
                self.cone[p, q] = cone_number(dx, dy, k)

    def disk_mask(self, d: float) -> np.ndarray:
        mask = self.dist <= d
        np.fill_diagonal(mask, False)
        return mask

    def select(self, mask: np.ndarray) -> list[tuple[int, int]]:
        """Yao arcs restricted to candidate pairs in ``mask``, sorted.

        Per node and cone the nearest candidate wins; ``argmin`` returns the
        first minimum, which is the smallest index among exact ties.
        """
        n = len(self.points)
        if n < 2:
            return []
        rows = np.arange(n)
        arcs = []
        for c in range(1, self.k + 1):
            cand = np.where(mask & (self.cone == c), self.sq, np.inf)
            best = np.argmin(cand, axis=1)
            ok = np.isfinite(cand[rows, best])
            arcs.extend(zip(rows[ok].tolist(), best[ok].tolist()))
        arcs.sort()
        return arcs


def disk_graph(s: PointSet, d: float) -> GeomGraph:
    """Undirected graph joining every pair at Euclidean distance ``<= d``."""
    if not d > 0:
        raise ValueError(f"disk radius must be positive, got {d}")
    n = len(s)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if euclid(s[u], s[v]) <= d]
    return _make_graph(s, pairs, directed=False)


def _adjacency_mask(g: GeomGraph) -> np.ndarray:
    mask = np.zeros((g.n, g.n), dtype=bool)
    for u, v in g.edges:
        mask[u, v] = True
        mask[v, u] = True
    return mask


def yao_directed(g: GeomGraph, params) -> GeomGraph:
    """Directed Yao graph of undirected ``g``: one shortest arc per node and cone."""
    if g.directed:
        raise ValueError("yao_directed expects an undirected graph")
    params = _coerce_params(params)
    table = ConeTable(g.points, params.k)
    return _make_graph(g.points, table.select(_adjacency_mask(g)), directed=True)


def undirect(g: GeomGraph) -> GeomGraph:
    return _make_graph(g.points, g.edges, directed=False)


def yao_undirected(g: GeomGraph, params) -> GeomGraph:
    return undirect(yao_directed(g, params))


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.count = n

    def find(self, a: int) -> int:
        root = a
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[a] != root:
            self.parent[a], a = root, self.parent[a]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.count -= 1
        return True


def components_of(n: int, pairs: Iterable[tuple[int, int]]) -> list[set[int]]:
    uf = UnionFind(n)
    for u, v in pairs:
        uf.union(u, v)
    groups: dict[int, set[int]] = {}
    for j in range(n):
        groups.setdefault(uf.find(j), set()).add(j)
    return sorted(groups.values(), key=min)


def components(g: GeomGraph) -> list[set[int]]:
    """Connected components (arc directions ignored), ordered by smallest member."""
    return components_of(g.n, g.edges)


def is_connected(g: GeomGraph) -> bool:
    return len(components(g)) <= 1


def is_path_graph(g: GeomGraph) -> bool:
    if g.directed:
        raise ValueError("is_path_graph expects an undirected graph")
    n = g.n
    if n <= 1:
        return True
    if len(g.edges) != n - 1 or not is_connected(g):
        return False
    deg = g.degrees()
    return deg.count(1) == 2 and deg.count(2) == n - 2
