"""Point sets on which Y_4, Y_3 and Y_2 over a disk graph fall apart, and their checks.

Each generator returns a labeled ``PointSet`` (``p``, ``q``, ``a1..ar``,
``b1..br`` and, for the Y_3 family, ``x`` and ``y``) so the verifier can find
the named points again.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Optional

from .geometry import euclid
from .graphs import (
    PointSet,
    YaoParams,
    components,
    disk_graph,
    is_connected,
    is_path_graph,
    yao_undirected,
)

FAMILIES = ("y4-lb", "y3-lb", "y2-lb")
DEFAULT_ALPHA = 1e-4
DEFAULT_R = 3
MIN_MARGIN = 1e-6
# Nominally unit lengths are shortened by this relative amount so that
# rounding never pushes them past an inclusive radius-1 test.
UNIT = 1.0 - 1e-12

SQRT2 = math.sqrt(2.0)
Y3_D_MAX = 5.0 - (2.0 / 3.0) * math.sqrt(35.0)


class ConstructionError(ValueError):
    pass


def y4_eps_range(d: float) -> tuple[float, float]:
    return 0.0, 1.0 - math.sqrt(d * d - 1.0)


def y3_eps_range(d: float) -> tuple[float, float]:
    return d - 1.0, 2.0 - (2.0 / 3.0) * math.sqrt(9.0 * d - 1.0)


def y3_xy_eps_bound(d: float) -> float:
    """Largest ``eps`` keeping ``|xy| > d`` in the Y_3 trapezoid (from ``|xy|^2 > d^2``)."""
    return 2.0 * (1.0 - math.sqrt(d * d - 1.0 / 9.0))


def y3_d_max_exact() -> float:
    """Radius where ``d - 1`` meets :func:`y3_xy_eps_bound`; root of ``27 d^2 + 54 d - 85``."""
    return -1.0 + math.sqrt(112.0 / 27.0)


@dataclass(frozen=True)
class ConstructionParams:
    family: str
    d: float
    eps: Optional[float] = None
    alpha: float = DEFAULT_ALPHA
    r: Optional[int] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ConstructionError(f"unknown family {self.family!r}; known: {FAMILIES}")

    def resolved(self) -> "ConstructionParams":
        """Copy with defaults filled in: midpoint ``eps`` and ``r = 3`` (Y_2 picks its own ``r``)."""
        eps = self.eps
        if eps is None:
            if self.family == "y4-lb":
                lo, hi = y4_eps_range(self.d) if 1.0 <= self.d < SQRT2 else (0.0, 1.0)
            elif self.family == "y3-lb":
                lo, hi = y3_eps_range(self.d) if 1.0 <= self.d < Y3_D_MAX else (0.0, 1.0)
            else:
                lo, hi = 0.0, 1.0
            eps = 0.5 * (lo + hi)
        r = self.r
        if r is None and self.family != "y2-lb":
            r = DEFAULT_R
        return replace(self, eps=eps, r=r)

    def as_metadata(self) -> dict:
        return {"family": self.family, "d": self.d, "eps": self.eps, "alpha": self.alpha, "r": self.r}


def validate(params: ConstructionParams) -> None:
    """Raise ``ConstructionError`` naming the first violated range constraint."""
    fam, d, eps, alpha, r = params.family, params.d, params.eps, params.alpha, params.r
    if not all(math.isfinite(v) for v in (d, eps, alpha)):
        raise ConstructionError("parameters must be finite")
    if not alpha > 0:
        raise ConstructionError(f"alpha must satisfy 0 < alpha, got alpha={alpha}")
    if r is not None and r < 1:
        raise ConstructionError(f"r must satisfy r >= 1, got r={r}")
    if fam == "y4-lb":
        if not 1.0 <= d < SQRT2:
            raise ConstructionError(f"y4-lb requires 1 <= d < sqrt(2), got d={d}")
        hi = y4_eps_range(d)[1]
        if not 0.0 < eps < hi:
            raise ConstructionError(f"y4-lb requires 0 < eps < 1 - sqrt(d^2 - 1) = {hi:.6g}, got eps={eps}")
    elif fam == "y3-lb":
        if not 1.0 <= d < Y3_D_MAX:
            raise ConstructionError(
                f"y3-lb requires 1 <= d < 5 - (2/3)sqrt(35) = {Y3_D_MAX:.6g}, got d={d}")
        lo, hi = y3_eps_range(d)
        if not lo < eps < hi:
            raise ConstructionError(
                f"y3-lb requires d - 1 < eps < 2 - (2/3)sqrt(9d - 1), i.e. {lo:.6g} < eps < {hi:.6g}, got eps={eps}")
    else:
        if not d >= 1.0:
            raise ConstructionError(f"y2-lb requires d >= 1, got d={d}")
        if not 0.0 < eps < 1.0:
            raise ConstructionError(f"y2-lb requires 0 < eps < 1, got eps={eps}")


def _chain_family(eps: float, alpha: float, r: int) -> PointSet:
    # p at the origin, q one unit up and tilted left by alpha/2 so pq sits in
    # C_2(p); the a-chain leaves p leftward, turned clockwise by alpha.
    beta = alpha / 2.0
    q = (-math.sin(beta) * UNIT, math.cos(beta) * UNIT)
    ux, uy = -math.cos(alpha), math.sin(alpha)
    a = []
    for i in range(r):
        t = (1.0 - eps) + i * UNIT
        a.append((t * ux, t * uy))
    # b_i is a_i mirrored through the midpoint of pq
    b = [(q[0] - ax, q[1] - ay) for ax, ay in a]
    labels = ["p", "q"] + [f"a{i + 1}" for i in range(r)] + [f"b{i + 1}" for i in range(r)]
    return PointSet([(0.0, 0.0), q] + a + b, labels)


def _quarter_turn(p):
    # exact 90 degree counterclockwise rotation
    return (-p[1], p[0])


def _y3_points(eps: float, alpha: float, r: int) -> PointSet:
    p, q = (0.0, 0.0), (1.0, 0.0)
    a1, b1 = (-eps / 2.0, -1.0), (1.0 + eps / 2.0, -1.0)
    # x: a third of the way from p to a1, mirrored in the vertical through p
    x = (-(a1[0] / 3.0), a1[1] / 3.0)
    # y: a third of the way from b1 to q, mirrored in the vertical through q
    y0 = (b1[0] + (q[0] - b1[0]) / 3.0, b1[1] + (q[1] - b1[1]) / 3.0)
    y = (2.0 * q[0] - y0[0], y0[1])
    p, q, a1, x, y = (_quarter_turn(v) for v in (p, q, a1, x, y))
    # chain leaves a1 rightward, turned clockwise into C_3(a1)
    ux, uy = math.cos(alpha), -math.sin(alpha)
    a = [a1] + [(a1[0] + i * UNIT * ux, a1[1] + i * UNIT * uy) for i in range(1, r)]
    # b_i mirrors a_i in the horizontal through the midpoint of pq
    mid = 0.5 * (p[1] + q[1])
    b = [(ax, 2.0 * mid - ay) for ax, ay in a]
    labels = ["p", "q", "x", "y"] + [f"a{i + 1}" for i in range(r)] + [f"b{i + 1}" for i in range(r)]
    return PointSet([p, q, x, y] + a + b, labels)


def _raise_on_violations(s: PointSet, family: str, d: float):
    bad = [c for c in inequality_checks(s, family, d) if not c.holds]
    if bad:
        names = "; ".join(f"{c.name} (margin {c.margin:.3g})" for c in bad)
        raise ConstructionError(f"{family} construction violates: {names}")


def gen_y4_lower(params: ConstructionParams, check: bool = True) -> PointSet:
    params = params.resolved()
    if params.family != "y4-lb":
        raise ConstructionError(f"gen_y4_lower needs family y4-lb, got {params.family}")
    validate(params)
    s = _chain_family(params.eps, params.alpha, params.r)
    if check:
        _raise_on_violations(s, "y4-lb", params.d)
    return s


def y2_min_r(d: float, eps: float, alpha: float = DEFAULT_ALPHA) -> int:
    """Fewest chain points putting both chain ends farther than ``d`` from the opposite anchor."""
    # chain ends sit about r - eps left of q, so no r below d - 2 can clear it
    r = max(1, int(d) - 2)
    while True:
        s = _chain_family(eps, alpha, r)
        if _y2_ends_clear(s, r, d):
            return r
        r += 1


def _y2_ends_clear(s: PointSet, r: int, d: float) -> bool:
    return (euclid(s.by_label(f"a{r}"), s.by_label("q")) > d + MIN_MARGIN
            and euclid(s.by_label(f"b{r}"), s.by_label("p")) > d + MIN_MARGIN)


def gen_y2_lower(params: ConstructionParams, check: bool = True) -> PointSet:
    params = params.resolved()
    if params.family != "y2-lb":
        raise ConstructionError(f"gen_y2_lower needs family y2-lb, got {params.family}")
    validate(params)
    r_min = y2_min_r(params.d, params.eps, params.alpha)
    r = r_min if params.r is None else params.r
    if r < r_min:
        raise ConstructionError(
            f"y2-lb with d={params.d} needs |a_r q| > d and |b_r p| > d: r={r} too small, minimal admissible r is {r_min}")
    s = _chain_family(params.eps, params.alpha, r)
    if check:
        _raise_on_violations(s, "y2-lb", params.d)
    return s


def gen_y3_lower(params: ConstructionParams, check: bool = True) -> PointSet:
    params = params.resolved()
    if params.family != "y3-lb":
        raise ConstructionError(f"gen_y3_lower needs family y3-lb, got {params.family}")
    validate(params)
    s = _y3_points(params.eps, params.alpha, params.r)
    if check:
        _raise_on_violations(s, "y3-lb", params.d)
    return s


def generate(params: ConstructionParams, check: bool = True) -> PointSet:
    gen = {"y4-lb": gen_y4_lower, "y3-lb": gen_y3_lower, "y2-lb": gen_y2_lower}[params.family]
    return gen(params, check=check)


@dataclass(frozen=True)
class InequalityCheck:
    """``lhs <op> rhs`` with ``op`` one of ``<`` or ``>``; holds when the slack exceeds ``MIN_MARGIN``."""

    name: str
    lhs: float
    op: str
    rhs: float

    @property
    def margin(self) -> float:
        return self.rhs - self.lhs if self.op == "<" else self.lhs - self.rhs

    @property
    def holds(self) -> bool:
        return self.margin > MIN_MARGIN

    def as_dict(self) -> dict:
        return {"name": self.name, "lhs": self.lhs, "op": self.op, "rhs": self.rhs, "margin": self.margin}


def infer_family(s: PointSet, k: int) -> Optional[str]:
    labels = set(s.labels or ())
    if not {"p", "q", "a1", "b1"} <= labels:
        return None
    if {"x", "y"} <= labels:
        return "y3-lb"
    return "y2-lb" if k == 2 else "y4-lb"


def chain_length(s: PointSet) -> int:
    return sum(1 for lab in (s.labels or ()) if lab.startswith("a") and lab[1:].isdigit())


def inequality_checks(s: PointSet, family: str, d: float) -> list[InequalityCheck]:
    P = s.by_label
    dist = lambda u, v: euclid(P(u), P(v))  # noqa: E731
    pq = dist("p", "q")
    if family == "y3-lb":
        return [
            InequalityCheck("|px| < |pq|", dist("p", "x"), "<", pq),
            InequalityCheck("|qy| < |qp|", dist("q", "y"), "<", pq),
            InequalityCheck("|xy| > d", dist("x", "y"), ">", d),
            InequalityCheck("|a1b1| > d", dist("a1", "b1"), ">", d),
            InequalityCheck("|xq| > d", dist("x", "q"), ">", d),
            InequalityCheck("|a1y| > d", dist("a1", "y"), ">", d),
        ]
    checks = [
        InequalityCheck("|pa1| < |pq|", dist("p", "a1"), "<", pq),
        InequalityCheck("|qb1| < |qp|", dist("q", "b1"), "<", pq),
    ]
    if family == "y4-lb":
        checks.append(InequalityCheck("|a1q| > d", dist("a1", "q"), ">", d))
    else:
        # for large d only the chain ends need to clear the opposite anchor
        r = chain_length(s)
        checks += [
            InequalityCheck(f"|a{r}q| > d", dist(f"a{r}", "q"), ">", d),
            InequalityCheck(f"|b{r}p| > d", dist(f"b{r}", "p"), ">", d),
        ]
    return checks


@dataclass
class VerificationReport:
    """Outcome of checking one lower-bound instance at radius ``d`` with ``k`` cones.

    ``path_claim`` names the graph whose path shape the family promises:
    ``"G^d"`` for y4-lb, ``"G^1"`` for y3-lb and y2-lb.
    """

    family: Optional[str]
    k: int
    d: float
    g1_connected: bool
    g1_is_path: bool
    gd_is_path: bool
    yk_disconnected: bool
    component_count: int
    pq_in_yao: Optional[bool]
    path_claim: str
    violated_inequalities: list = field(default_factory=list)
    checks: list = field(default_factory=list)

    @property
    def path_ok(self) -> bool:
        return self.gd_is_path if self.path_claim == "G^d" else self.g1_is_path

    @property
    def passed(self) -> bool:
        return self.g1_connected and self.path_ok and self.yk_disconnected and not self.violated_inequalities

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "k": self.k,
            "d": self.d,
            "passed": self.passed,
            "g1_connected": self.g1_connected,
            "g1_is_path": self.g1_is_path,
            "gd_is_path": self.gd_is_path,
            "path_claim": self.path_claim,
            "yk_disconnected": self.yk_disconnected,
            "component_count": self.component_count,
            "pq_in_yao": self.pq_in_yao,
            "violated_inequalities": [c.as_dict() for c in self.violated_inequalities],
        }


def verify_counterexample(s: PointSet, k: int, d: float, family: Optional[str] = None) -> VerificationReport:
    """Check connectivity of G^1, the path shape, Yao disconnection and the family's inequalities.

    ``family`` defaults to what the labels suggest; unlabeled sets get the
    graph checks only.
    """
    if family is None:
        family = infer_family(s, k)
    g1 = disk_graph(s, 1.0)
    gd = disk_graph(s, d)
    yao = yao_undirected(gd, YaoParams(k))
    comps = components(yao)
    checks = inequality_checks(s, family, d) if family else []
    pq = None
    if s.labels and {"p", "q"} <= set(s.labels):
        pq = yao.has_edge(s.index("p"), s.index("q"))
    return VerificationReport(
        family=family,
        k=k,
        d=d,
        g1_connected=is_connected(g1),
        g1_is_path=is_path_graph(g1),
        gd_is_path=is_path_graph(gd),
        yk_disconnected=len(comps) > 1,
        component_count=len(comps),
        pq_in_yao=pq,
        path_claim="G^d" if family in (None, "y4-lb") else "G^1",
        violated_inequalities=[c for c in checks if not c.holds],
        checks=checks,
    )
