"""Connectivity radius of Yao graphs over disk graphs, plus random instances to probe it.

The Yao arc chosen in a cone is the cone-wise nearest neighbour as soon as it
is within range, so growing the radius only ever adds arcs. Connectivity is
therefore monotone in the radius, and a binary search over the sorted
pairwise distances finds the exact threshold.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .geometry import euclid
from .graphs import ConeTable, PointSet, UnionFind, components_of, disk_graph, is_connected

DEFAULT_CAP = 4.0
MODELS = ("incremental-disk", "perturbed-grid")


@dataclass
class RadiusResult:
    """``radius`` is ``None`` when no candidate up to ``cap`` connects the Yao graph."""

    radius: Optional[float]
    cap: float
    witness_edges: list = field(default_factory=list)
    candidates_examined: int = 0

    @property
    def bounded(self) -> bool:
        return self.radius is not None

    def to_record(self) -> dict:
        return {
            "radius": self.radius if self.radius is not None else "unbounded above cap",
            "cap": self.cap,
            "candidates_examined": self.candidates_examined,
            "witness_edges": [list(e) for e in self.witness_edges],
        }


@dataclass(frozen=True)
class InstanceConfig:
    n: int
    seed: int = 0
    model: str = "incremental-disk"
    scale: float = 1.0
    normalize: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"instance needs n >= 1 points, got {self.n}")
        if self.model not in MODELS:
            raise ValueError(f"unknown model {self.model!r}; known: {MODELS}")


def candidate_radii(s: PointSet, cap: float) -> list[float]:
    n = len(s)
    dists = {euclid(s[u], s[v]) for u in range(n) for v in range(u + 1, n)}
    return sorted(d for d in dists if d <= cap)


class _YaoProbe:
    """Connectivity of the undirected Yao graph at any radius, sharing one cone table."""

    def __init__(self, s: PointSet, k: int):
        self.table = ConeTable(s, k)
        self.n = len(s)
        self.calls = 0

    def undirected_edges(self, d: float) -> list[tuple[int, int]]:
        arcs = self.table.select(self.table.disk_mask(d))
        return sorted({(min(u, v), max(u, v)) for u, v in arcs})

    def connected(self, d: float) -> bool:
        self.calls += 1
        return len(components_of(self.n, self.table.select(self.table.disk_mask(d)))) <= 1


def connectivity_radius(s: PointSet, k: int, cap: float = DEFAULT_CAP) -> RadiusResult:
    """Smallest pairwise distance ``d <= cap`` at which the undirected Yao graph of the
    radius-``d`` disk graph is connected."""
    if not cap > 0:
        raise ValueError(f"cap must be positive, got {cap}")
    if len(s) < 1:
        raise ValueError("point set is empty")
    if len(s) == 1:
        return RadiusResult(0.0, cap, [], 0)
    cands = candidate_radii(s, cap)
    probe = _YaoProbe(s, k)
    if not cands or not probe.connected(cands[-1]):
        return RadiusResult(None, cap, [], probe.calls)
    lo, hi = 0, len(cands) - 1  # cands[hi] is known to connect
    while lo < hi:
        mid = (lo + hi) // 2
        if probe.connected(cands[mid]):
            hi = mid
        else:
            lo = mid + 1
    d = cands[hi]
    return RadiusResult(d, cap, probe.undirected_edges(d), probe.calls)


def connectivity_radius_linear(s: PointSet, k: int, cap: float = DEFAULT_CAP) -> RadiusResult:
    """Reference scan over every candidate in increasing order; no monotonicity assumed."""
    if not cap > 0:
        raise ValueError(f"cap must be positive, got {cap}")
    if len(s) == 1:
        return RadiusResult(0.0, cap, [], 0)
    probe = _YaoProbe(s, k)
    for d in candidate_radii(s, cap):
        if probe.connected(d):
            return RadiusResult(d, cap, probe.undirected_edges(d), probe.calls)
    return RadiusResult(None, cap, [], probe.calls)


def _incremental_disk(n: int, rng: np.random.Generator) -> list[tuple[float, float]]:
    pts = [(0.0, 0.0)]
    taken = {pts[0]}
    while len(pts) < n:
        cx, cy = pts[int(rng.integers(len(pts)))]
        r = math.sqrt(rng.random())
        t = rng.random() * 2.0 * math.pi
        p = (cx + r * math.cos(t), cy + r * math.sin(t))
        # rounding can push a radius-1 sample just outside the unit disk
        if p in taken or euclid(p, (cx, cy)) > 1.0:
            continue
        pts.append(p)
        taken.add(p)
    return pts


def _perturbed_grid(n: int, rng: np.random.Generator) -> list[tuple[float, float]]:
    side = math.isqrt(n - 1) + 1 if n > 1 else 1
    jitter = rng.uniform(-0.05, 0.05, size=(side * side, 2))
    pts = []
    for j in range(n):
        row, col = divmod(j, side)
        pts.append((0.9 * col + jitter[j, 0], 0.9 * row + jitter[j, 1]))
    return pts


def random_connected_instance(cfg: InstanceConfig) -> PointSet:
    """Random point set whose unit disk graph is connected; deterministic in ``cfg.seed``.

    With ``normalize`` the set is shrunk or stretched so its longest minimum
    spanning tree edge sits just under 1, leaving G^1 barely connected.
    ``scale`` multiplies coordinates afterwards, so connectivity is guaranteed
    for the unit disk graph of the unscaled set.
    """
    rng = np.random.default_rng(cfg.seed)
    build = _incremental_disk if cfg.model == "incremental-disk" else _perturbed_grid
    for _ in range(1000):
        s = PointSet(build(cfg.n, rng))
        if cfg.normalize and len(s) > 1:
            f = (1.0 - 1e-12) / bottleneck_length(s)
            s = PointSet([(x * f, y * f) for x, y in s])
        if is_connected(disk_graph(s, 1.0)):
            if cfg.scale != 1.0:
                s = PointSet([(x * cfg.scale, y * cfg.scale) for x, y in s])
            return s
    raise RuntimeError(f"could not draw a connected instance for {cfg}")


def bottleneck_length(s: PointSet) -> float:
    """Longest edge of a Euclidean minimum spanning tree (Kruskal)."""
    n = len(s)
    pairs = sorted((euclid(s[u], s[v]), u, v) for u in range(n) for v in range(u + 1, n))
    uf = UnionFind(n)
    longest = 0.0
    for length, u, v in pairs:
        if uf.union(u, v):
            longest = length
            if uf.count == 1:
                break
    return longest


def _trial(args):
    k, n, seed, index, cap, model, normalize = args
    if model is None:
        model = MODELS[index % len(MODELS)]
    cfg = InstanceConfig(n=n, seed=int(np.random.SeedSequence([seed, index]).generate_state(1)[0]),
                         model=model, normalize=normalize)
    s = random_connected_instance(cfg)
    return s, connectivity_radius(s, k, cap)


@dataclass
class BoundStudy:
    k: int
    trials: int
    n: int
    seed: int
    cap: float
    radii: list
    unbounded: int
    max_radius: Optional[float]
    mean_radius: Optional[float]
    histogram: list
    worst_instance: Optional[PointSet] = None

    def summary(self) -> dict:
        return {
            "k": self.k,
            "trials": self.trials,
            "n": self.n,
            "seed": self.seed,
            "cap": self.cap,
            "max": self.max_radius,
            "mean": self.mean_radius,
            "unbounded": self.unbounded,
            "histogram": self.histogram,
        }


def trial_instances(k: int, trials: int, n: int, seed: int, cap: float = DEFAULT_CAP,
                    model: Optional[str] = None, workers: int = 1, normalize: bool = False):
    """``(instance, RadiusResult)`` for each trial, in trial order.

    Trial ``i`` draws from a stream keyed by ``(seed, i)``; with ``model=None``
    the models alternate by trial index.
    """
    jobs = [(k, n, seed, i, cap, model, normalize) for i in range(trials)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_trial, jobs, chunksize=max(1, trials // (4 * workers))))
    return [_trial(j) for j in jobs]


def bound_study(k: int, trials: int, n: int, seed: int, cap: float = DEFAULT_CAP,
                model: Optional[str] = None, bins: int = 20, workers: int = 1,
                normalize: bool = False) -> BoundStudy:
    """Empirical connectivity radii of ``trials`` random connected instances."""
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    results = trial_instances(k, trials, n, seed, cap, model, workers, normalize)
    radii = [r.radius for _, r in results if r.radius is not None]
    unbounded = trials - len(radii)
    worst = None
    if radii:
        j = max(range(len(results)), key=lambda t: results[t][1].radius or -1.0)
        worst = results[j][0]
        # edges snapped to 0.01 so identical radii still get a finite-width bin
        lo = math.floor(min(radii) * 100) / 100
        hi = max(math.ceil(max(radii) * 100) / 100, lo + 0.01)
        counts, edges = np.histogram(radii, bins=np.linspace(lo, hi, bins + 1))
        hist = [[float(edges[b]), float(edges[b + 1]), int(counts[b])] for b in range(bins)]
    else:
        hist = []
    return BoundStudy(
        k=k, trials=trials, n=n, seed=seed, cap=cap,
        radii=[r.radius for _, r in results],
        unbounded=unbounded,
        max_radius=max(radii) if radii else None,
        mean_radius=float(np.mean(radii)) if radii else None,
        histogram=hist,
        worst_instance=worst,
    )
