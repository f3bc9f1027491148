"""Executable checks of the connectivity bounds and the distance inequalities behind them.

Every runner returns a list of :class:`Claim`; a failing claim carries the
offending point set so callers can dump it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .counterexamples import (
    ConstructionParams,
    Y3_D_MAX,
    gen_y2_lower,
    generate,
    verify_counterexample,
    y3_eps_range,
    y4_eps_range,
)
from .geometry import TWO_PI, cone_number, d_rhombus, euclid, l_inf, polar_angle
from .graphs import PointSet
from .radius import bound_study

SQRT2 = math.sqrt(2.0)
Y3_UPPER = 2.0 / math.sqrt(3.0)
HALF_SQRT3 = math.sqrt(3.0) / 2.0
BOUND_TOL = 1e-9

Y4_GRID_D = (1.0, 1.1, 1.2, 1.3, 1.4)
Y3_GRID_D = (1.0, 1.02, 1.04, 1.05)
Y2_GRID_D = (1.0, 2.0, 5.0, 10.0)
ALPHAS = (1e-3, 1e-4)


@dataclass
class Claim:
    name: str
    passed: bool
    detail: str = ""
    instance: Optional[PointSet] = None
    metadata: dict = field(default_factory=dict)

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}" + (f"  [{self.detail}]" if self.detail else "")


def _eps_grid(lo: float, hi: float) -> list[float]:
    return [lo + f * (hi - lo) for f in (0.25, 0.5, 0.75)]


def _family_grid(family, k, upper, ds, eps_range, r=3):
    failures, total = [], 0
    for d in ds:
        for eps in _eps_grid(*eps_range(d)):
            for alpha in ALPHAS:
                total += 1
                params = ConstructionParams(family, d, eps, alpha, r)
                s = generate(params, check=False)
                low = verify_counterexample(s, k, d, family)
                high = verify_counterexample(s, k, upper, family)
                if not low.passed or high.yk_disconnected:
                    failures.append((params, s, low, high))
    return failures, total


def _grid_claim(name, failures, total) -> Claim:
    if not failures:
        return Claim(name, True, f"{total} instances")
    params, s, low, high = failures[0]
    why = []
    if not low.passed:
        why.append(f"at d={params.d}: components={low.component_count}, "
                   f"violated={[c.name for c in low.violated_inequalities]}")
    if high.yk_disconnected:
        why.append(f"still disconnected at d={high.d:.6g}")
    return Claim(name, False, f"{len(failures)}/{total} failed; first eps={params.eps:.6g} alpha={params.alpha}: "
                 + "; ".join(why), s, params.as_metadata())


def theorem1() -> list[Claim]:
    failures, total = _family_grid("y4-lb", 4, SQRT2, Y4_GRID_D, y4_eps_range)
    return [_grid_claim("y4-lb grid: Y_4[G^d] disconnected for d < sqrt(2), reconnected at sqrt(2)",
                        failures, total)]


def theorem3() -> list[Claim]:
    ds = [d for d in Y3_GRID_D if d < Y3_D_MAX]
    failures, total = _family_grid("y3-lb", 3, Y3_UPPER, ds, y3_eps_range)
    return [_grid_claim("y3-lb grid: Y_3[G^d] disconnected for d < 5-(2/3)sqrt(35), reconnected at 2/sqrt(3)",
                        failures, total)]


def y2_r_estimate(d: float, eps: float) -> int:
    """Smallest ``r`` with ``(r - eps)^2 + 1 > d^2``: chain length needed as the tilt goes to 0."""
    return math.floor(eps + math.sqrt(max(d * d - 1.0, 0.0))) + 1


def theorem_y2() -> list[Claim]:
    claims = []
    sizes = []
    for d in Y2_GRID_D:
        params = ConstructionParams("y2-lb", d).resolved()
        s = gen_y2_lower(params, check=False)
        rep = verify_counterexample(s, 2, d, "y2-lb")
        r = (len(s) - 2) // 2
        est = y2_r_estimate(d, params.eps)
        sizes.append((d, len(s)))
        ok = rep.passed and abs(r - est) <= 1
        claims.append(Claim(f"y2-lb d={d:g}: Y_2[G^d] disconnected", ok,
                            f"r={r} (estimate {est}), |S|={len(s)}, components={rep.component_count}",
                            None if ok else s, {**params.as_metadata(), "r": r}))
    # |S| = 2r + 2 and r tracks d within a constant
    slopes = [(n - 2) / 2 / d for d, n in sizes]
    linear = all(0.5 <= sl <= 2.0 for sl in slopes) and all(b[1] > a[1] for a, b in zip(sizes, sizes[1:]))
    claims.append(Claim("y2-lb point count grows linearly in d", linear,
                        ", ".join(f"d={d:g}:|S|={n}" for d, n in sizes)))
    return claims


def _upper_bound_claim(k, bound, label, trials, n, seed) -> list[Claim]:
    claims = []
    for normalize in (False, True):
        study = bound_study(k, trials, n, seed, normalize=normalize)
        worst = study.max_radius
        ok = study.unbounded == 0 and worst is not None and worst <= bound + BOUND_TOL
        detail = f"{trials} trials n={n} seed={seed}: max radius={worst!r}, mean={study.mean_radius!r}, bound={bound!r}"
        if study.unbounded:
            detail += f", {study.unbounded} unbounded above cap"
        kind = "MST-normalized instances" if normalize else "random instances"
        claims.append(Claim(f"connectivity radius of Y_{k} <= {label} ({kind})", ok, detail,
                            None if ok else study.worst_instance,
                            {"k": k, "seed": seed, "n": n, "normalize": normalize}))
    return claims


def theorem2(trials: int = 500, n: int = 40, seed: int = 0) -> list[Claim]:
    return _upper_bound_claim(4, SQRT2, "sqrt(2)", trials, n, seed)


def theorem4(trials: int = 500, n: int = 40, seed: int = 0) -> list[Claim]:
    return _upper_bound_claim(3, Y3_UPPER, "2/sqrt(3)", trials, n, seed)


def _pairs(rng, samples):
    return rng.uniform(-10.0, 10.0, size=(samples, 2, 2)).tolist()


def lemma1(samples: int, rng) -> list[Claim]:
    worst_sym, bad_sandwich, worst_pair = 0.0, 0, None
    for a, b in _pairs(rng, samples):
        if a == b:
            continue
        dr = d_rhombus(a, b, 3)
        asym = abs(dr - d_rhombus(b, a, 3))
        if asym > worst_sym:
            worst_sym, worst_pair = asym, (a, b)
        e = euclid(a, b)
        if not HALF_SQRT3 * dr - 1e-12 <= e <= dr + 1e-12:
            bad_sandwich += 1
            worst_pair = worst_pair or (a, b)
    sym_ok = worst_sym <= 1e-9
    return [
        Claim("rhombus distance symmetric within 1e-9", sym_ok, f"{samples} pairs, max asymmetry {worst_sym:.3g}",
              None if sym_ok else PointSet(worst_pair)),
        Claim("(sqrt(3)/2) d_R <= |ab| <= d_R", bad_sandwich == 0, f"{samples} pairs, {bad_sandwich} violations"),
    ]


def sample_half_cone_triple(rng, k: int = 3, gap: float = 1e-9):
    """Random ``(a, b, c)`` with ``b, c`` in one half of a cone of ``a`` and ``|ac| <= |ab|``.

    The lower half excludes the bisector, the upper half includes it; samples
    within ``gap`` radians of a ray or the bisector are redrawn.
    """
    width = TWO_PI / k
    while True:
        a = rng.uniform(-10.0, 10.0, size=2)
        i = int(rng.integers(k))
        upper = bool(rng.integers(2))
        lo = i * width + (width / 2 if upper else 0.0)
        rb = rng.uniform(0.0, 10.0)
        rc = rb * rng.random()
        tb = lo + rng.random() * width / 2
        tc = lo + rng.random() * width / 2
        b = (a[0] + rb * math.cos(tb), a[1] + rb * math.sin(tb))
        c = (a[0] + rc * math.cos(tc), a[1] + rc * math.sin(tc))
        a = (float(a[0]), float(a[1]))
        if b == a or c == a or b == c or euclid(a, c) > euclid(a, b):
            continue
        if not all(_clear_of_boundaries(a, p, k, i, upper, gap) for p in (b, c)):
            continue
        return a, b, c


def _clear_of_boundaries(a, p, k, i, upper, gap) -> bool:
    width = TWO_PI / k
    theta = polar_angle(p[0] - a[0], p[1] - a[1])
    if cone_number(p[0] - a[0], p[1] - a[1], k) != i + 1:
        return False
    rel = theta - i * width
    half = width / 2
    if min(rel, width - rel, abs(rel - half)) <= gap:
        return False
    return (rel >= half) == upper


def lemma2(samples: int, rng) -> list[Claim]:
    bad, first = 0, None
    for _ in range(samples):
        a, b, c = sample_half_cone_triple(rng)
        if not d_rhombus(b, c, 3) < d_rhombus(a, b, 3):
            bad += 1
            first = first or (a, b, c)
    return [Claim("d_R(b,c) < d_R(a,b) for b, c in one half-cone with |ac| <= |ab|", bad == 0,
                  f"{samples} triples, {bad} violations", PointSet(first) if first else None)]


def eq1(samples: int, rng) -> list[Claim]:
    bad = 0
    for a, b in _pairs(rng, samples):
        di, e = l_inf(a, b), euclid(a, b)
        if not (di <= e <= SQRT2 * di + 1e-12):
            bad += 1
    return [Claim("d_inf <= |ab| <= sqrt(2) d_inf", bad == 0, f"{samples} pairs, {bad} violations")]


def lemmas(samples: int = 100_000, seed: int = 0) -> list[Claim]:
    rng = np.random.default_rng(seed)
    return lemma1(samples, rng) + lemma2(samples, rng) + eq1(samples, rng)


THEOREMS = ("1", "2", "3", "4", "y2", "lemmas")


def run(theorem: str, trials: int = 500, n: int = 40, seed: int = 0, samples: int = 100_000) -> list[Claim]:
    if theorem == "all":
        out = []
        for t in THEOREMS:
            out += run(t, trials, n, seed, samples)
        return out
    if theorem == "1":
        return theorem1()
    if theorem == "2":
        return theorem2(trials, n, seed)
    if theorem == "3":
        return theorem3()
    if theorem == "4":
        return theorem4(trials, n, seed)
    if theorem == "y2":
        return theorem_y2()
    if theorem == "lemmas":
        return lemmas(samples, seed)
    raise ValueError(f"unknown theorem {theorem!r}; known: {THEOREMS + ('all',)}")
