"""Planar primitives: points, distances, cones and rigid motions.

Cones follow the half-open convention used throughout the package: around
an apex, ``k`` rays split the plane, ray ``r_1`` points along ``+x``, and cone
``C_i`` contains its lower ray ``r_i`` but not the upper ray ``r_{i+1}``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

TWO_PI = 2.0 * math.pi


class Point(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True)
class ConeIndex:
    k: int
    i: int

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"need at least 2 cones, got k={self.k}")
        if not 1 <= self.i <= self.k:
            raise ValueError(f"cone index {self.i} outside [1, {self.k}]")


@dataclass(frozen=True)
class Transform:
    """Rotation about the origin (radians, counterclockwise) followed by a translation."""

    rotation: float = 0.0
    translation: tuple[float, float] = (0.0, 0.0)


def as_point(p: Sequence[float]) -> Point:
    x, y = float(p[0]), float(p[1])
    if not (math.isfinite(x) and math.isfinite(y)):
        raise ValueError(f"non-finite coordinate in {p!r}")
    return Point(x, y)


def sq_dist(a: Sequence[float], b: Sequence[float]) -> float:
    dx = b[0] - a[0]
    dy = b[1] - a[1]
    return dx * dx + dy * dy


def euclid(a: Sequence[float], b: Sequence[float]) -> float:
    # every length compared against a radius goes through hypot so all modules round alike
    return math.hypot(b[0] - a[0], b[1] - a[1])


def l_inf(a: Sequence[float], b: Sequence[float]) -> float:
    return max(abs(a[0] - b[0]), abs(a[1] - b[1]))


def polar_angle(dx: float, dy: float) -> float:
    """Angle of ``(dx, dy)`` normalized to ``[0, 2*pi)``."""
    theta = math.atan2(dy, dx)
    if theta < 0.0:
        theta += TWO_PI
        # -tiny + 2*pi rounds up to 2*pi; the direction still lies below r_1
        if theta >= TWO_PI:
            theta = math.nextafter(TWO_PI, 0.0)
    return theta


def cone_number(dx: float, dy: float, k: int) -> int:
    """1-based cone index of direction ``(dx, dy)`` among ``k`` cones."""
    theta = polar_angle(dx, dy)
    i = int(theta // (TWO_PI / k)) + 1
    return min(i, k)


def cone_of(apex: Sequence[float], q: Sequence[float], k: int) -> ConeIndex:
    """Cone of ``apex`` containing ``q``.

    Raises ``ValueError`` when ``q`` coincides with the apex, since no cone
    contains it.
    """
    if k < 2:
        raise ValueError(f"need at least 2 cones, got k={k}")
    dx = q[0] - apex[0]
    dy = q[1] - apex[1]
    if dx == 0.0 and dy == 0.0:
        raise ValueError("q coincides with the apex; no cone contains it")
    return ConeIndex(k, cone_number(dx, dy, k))


def ray_direction(i: int, k: int) -> tuple[float, float]:
    """Unit vector along ray ``r_i`` (1-based; ``r_{k+1}`` wraps to ``r_1``)."""
    theta = TWO_PI * ((i - 1) % k) / k
    return math.cos(theta), math.sin(theta)


def oblique_coords(dx: float, dy: float, k: int) -> tuple[float, float]:
    """Coordinates ``(u, v)`` of ``(dx, dy)`` in the basis of the two rays bounding its cone.

    The vector equals ``u * e_i + v * e_{i+1}`` where ``e_i`` runs along the
    lower ray of the cone containing it; both coordinates are non-negative up
    to rounding.
    """
    i = cone_number(dx, dy, k)
    e1x, e1y = ray_direction(i, k)
    e2x, e2y = ray_direction(i + 1, k)
    det = e1x * e2y - e1y * e2x
    u = (dx * e2y - dy * e2x) / det
    v = (e1x * dy - e1y * dx) / det
    return u, v


def d_rhombus(a: Sequence[float], b: Sequence[float], k: int = 3) -> float:
    """Side length of the rhombus with corner ``a``, sides along the rays of
    ``b``'s cone, and ``b`` on its boundary.

    Only ``k = 3`` carries the Euclidean sandwich
    ``(sqrt(3)/2) * d_R <= |ab| <= d_R``; other ``k >= 3`` are a plain
    generalization. ``k = 2`` has antiparallel rays and is rejected.
    """
    if k < 3:
        raise ValueError(f"rhombus distance needs k >= 3, got k={k}")
    dx = b[0] - a[0]
    dy = b[1] - a[1]
    if dx == 0.0 and dy == 0.0:
        return 0.0
    u, v = oblique_coords(dx, dy, k)
    return max(u, v)


def rotate(p: Sequence[float], angle: float, center: Sequence[float] = (0.0, 0.0)) -> Point:
    c, s = math.cos(angle), math.sin(angle)
    dx = p[0] - center[0]
    dy = p[1] - center[1]
    return Point(center[0] + c * dx - s * dy, center[1] + s * dx + c * dy)


def apply_transform(points: Iterable[Sequence[float]], t: Transform):
    """Rigidly move every point. A ``PointSet`` comes back as a ``PointSet`` with its labels."""
    tx, ty = t.translation
    out = []
    for p in points:
        r = rotate(p, t.rotation) if t.rotation else Point(float(p[0]), float(p[1]))
        out.append(Point(r.x + tx, r.y + ty))
    labels = getattr(points, "labels", None)
    if hasattr(points, "points"):
        return type(points)(out, labels)
    return out
