"""Coarse-geometry primitives: Gromov products, chain estimates, criteria.

Everything here works through the backend protocol only, so the same
inequalities run on exact tree metrics and on float plane distances.  The
Gromov product is <x, y>_o = (d(x,o) + d(y,o) - d(x,y)) / 2; a space is
delta-hyperbolic when <x,y>_o >= min(<x,z>_o, <z,y>_o) - delta for all
quadruples (the four-point inequality).
"""

import math
import random
from dataclasses import dataclass
from typing import Dict, List

from .errors import HypothesisFailed, NotLoxodromic
from .spaces.base import Point, basepoint_candidates, word_str


def gromov_product(x: Point, y: Point, o: Point) -> float:
    backend = o.backend
    return 0.5 * (backend.dist(x, o) + backend.dist(y, o) - backend.dist(x, y))


def four_point_defect(x, y, z, o) -> float:
    return min(gromov_product(x, z, o), gromov_product(z, y, o)) - gromov_product(x, y, o)


def estimate_delta(backend, sample_size: int, seed: int) -> float:
    """Empirical lower bound for a valid four-point delta.

    Draws ``sample_size`` seeded quadruples from the backend's sampling window
    and returns the worst defect (clamped at 0).  A lower bound only; it never
    certifies hyperbolicity, but it catches a configured delta that is too
    small for the space.
    """
    if sample_size < 4:
        raise ValueError("sample_size must be >= 4")
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(sample_size):
        x, y, z, o = backend.sample_points(rng, 4)
        worst = max(worst, four_point_defect(x, y, z, o))
    return worst


# -- loxodromicity criteria -------------------------------------------------


def loxodromic_criterion(g, o: Point, delta=None) -> bool:
    """Sufficient displacement test: d(o, go) >= 2 <o, g^2 o>_{go} + 6 delta.

    True certifies that g is loxodromic; False says nothing.
    """
    backend = o.backend
    if delta is None:
        delta = backend.delta
    go = backend.apply(g, o)
    ggo = backend.apply(g, go)
    lhs = backend.dist(o, go)
    rhs = 2.0 * gromov_product(o, ggo, go) + 6.0 * delta
    # at delta = 0 equality certifies nothing: the orbit lower bound
    # degenerates to tau >= 0 and a fixed point passes 0 >= 0
    return lhs >= rhs if delta > 0 else lhs > rhs


def product_loxodromic_criterion(g, h, o: Point, delta=None) -> bool:
    """Certifies that g*h is loxodromic when the axes of g and h diverge:

        min(d(go, o), d(ho, o)) / 4 >= max(<go, h^-1 o>_o, <g^-1 o, ho>_o) + delta
    """
    backend = o.backend
    if delta is None:
        delta = backend.delta
    go = backend.apply(g, o)
    ho = backend.apply(h, o)
    gio = backend.apply(backend.invert(g), o)
    hio = backend.apply(backend.invert(h), o)
    lhs = 0.25 * min(backend.dist(go, o), backend.dist(ho, o))
    rhs = max(gromov_product(go, hio, o), gromov_product(gio, ho, o)) + delta
    # same degenerate-equality caveat as loxodromic_criterion
    return lhs >= rhs if delta > 0 else lhs > rhs


# -- chains -------------------------------------------------------------------


@dataclass
class Chain:
    """A finite sequence of points x_1 ... x_k (k >= 2), 1-based in messages."""

    points: List[Point]

    def __post_init__(self):
        if len(self.points) < 2:
            raise ValueError("a chain needs at least two points")

    @property
    def backend(self):
        return self.points[0].backend

    def gaps(self):
        b = self.backend
        return [b.dist(p, q) for p, q in zip(self.points, self.points[1:])]

    def interior_products(self):
        # product at x_i (2 <= i <= k-1): <x_{i-1}, x_{i+1}>_{x_i}
        return [
            gromov_product(self.points[i - 1], self.points[i + 1], self.points[i])
            for i in range(1, len(self.points) - 1)
        ]


def chain_lower_bound(chain: Chain, delta=None) -> float:
    """Endpoint distance bound sum(d_i) - 2 sum(<...> + delta) for chains whose
    consecutive interior products are small against the gaps.

    Hypothesis (checked, HypothesisFailed(i) on violation, i 1-based):
        <x_{i-1}, x_{i+1}>_{x_i} + <x_i, x_{i+2}>_{x_{i+1}} <= d_i - 3 delta
    for 2 <= i <= k-2.
    """
    if delta is None:
        delta = chain.backend.delta
    gaps = chain.gaps()
    prods = chain.interior_products()
    k = len(chain.points)
    for i0 in range(1, k - 2):
        if prods[i0 - 1] + prods[i0] > gaps[i0] - 3.0 * delta:
            raise HypothesisFailed(i0 + 1)
    return sum(gaps) - 2.0 * sum(p + delta for p in prods)


def chain_condition_holds(chain: Chain, delta=None) -> bool:
    """Stronger local condition certifying d(x_1, x_k) >= sum(d_i) / 2:

        <x_{i-1}, x_{i+1}>_{x_i} + <x_i, x_{i+2}>_{x_{i+1}} <= d_i / 4 - delta

    for 2 <= i <= k-2, plus two guards without which the half-sum conclusion
    can fail: every step must satisfy d_i >= 4 delta (short steps cannot
    carry the delta slack), and the first and last interior products get the
    same test with the out-of-range partner taken as 0 (this is the whole
    condition at k = 3).
    """
    if len(chain.points) < 3:
        raise ValueError("need k >= 3")
    if delta is None:
        delta = chain.backend.delta
    gaps = chain.gaps()
    prods = chain.interior_products()
    k = len(chain.points)
    if any(d / 4.0 - delta < 0.0 for d in gaps):
        return False
    if prods[0] > gaps[0] / 4.0 - delta or prods[-1] > gaps[-1] / 4.0 - delta:
        return False
    for i0 in range(1, k - 2):
        if prods[i0 - 1] + prods[i0] > gaps[i0] / 4.0 - delta:
            return False
    return True


# -- translation length -------------------------------------------------------


@dataclass(frozen=True)
class Bracket:
    upper: float
    estimate: float


def translation_length_bracket(g, o: Point, N: int = 32) -> Bracket:
    """Subadditive upper bound min_m d(o, g^m o)/m and the difference estimate
    (d(o, g^2N o) - d(o, g^N o)) / N for the stable translation length."""
    if N < 1:
        raise ValueError("N must be >= 1")
    backend = o.backend
    upper = float("inf")
    cur = o
    d_n = d_2n = None
    for m in range(1, 2 * N + 1):
        cur = backend.apply(g, cur)
        d = backend.dist(o, cur)
        if m <= N:
            upper = min(upper, d / m)
        if m == N:
            d_n = d
        if m == 2 * N:
            d_2n = d
    return Bracket(upper=upper, estimate=(d_2n - d_n) / N)


# -- displacement -------------------------------------------------------------


@dataclass
class DisplacementRecord:
    point: Point
    per_generator: Dict[str, float]
    value: float


def displacement(S, x: Point) -> DisplacementRecord:
    """max_{s in S} d(x, sx) with the per-generator breakdown."""
    backend = S.backend
    per = {}
    for g in S:
        try:
            d = backend.dist(x, backend.apply(g, x))
        except OverflowError:
            d = math.inf
        per[word_str(g.word)] = d
    return DisplacementRecord(point=x, per_generator=per, value=max(per.values()))


def min_displacement_search(S, budget: int = 64) -> DisplacementRecord:
    """Upper bound for inf_x max_{s in S} d(x, sx) over the candidate pool.

    Deterministic: candidates come in a fixed order and ties keep the first.
    """
    best = None
    for x in basepoint_candidates(S, budget):
        rec = displacement(S, x)
        if best is None or rec.value < best.value:
            best = rec
    return best


# -- axis overlap -------------------------------------------------------------


def axis_overlap_diameter(b, f, o: Point, theta: float = 1.0, window: int = 8) -> float:
    """Diameter of the part of the sampled axis of b that stays theta*d(o,bo)
    close to its f-translate.

    Proxy for |E(b)|-style tests on float backends: a conjugating f maps the
    axis near itself, so a large overlap diameter flags a likely elementary
    pair, a bounded one certifies nothing but suggests independence.
    """
    backend = o.backend
    if backend.classify(b).kind != "loxodromic":
        raise NotLoxodromic("axis sampling needs a loxodromic b")
    R = theta * backend.dist(o, backend.apply(b, o))
    orbit = [o]
    cur_f, cur_b = o, o
    binv = backend.invert(b)
    for _ in range(window):
        cur_f = backend.apply(b, cur_f)
        orbit.append(cur_f)
        cur_b = backend.apply(binv, cur_b)
        orbit.insert(0, cur_b)
    samples = []
    for p, q in zip(orbit, orbit[1:]):
        samples.append(p)
        d = backend.dist(p, q)
        if d > 0:
            for j in range(1, 4):
                t = d * j / 4.0
                if backend.kind != "half_plane":
                    t = round(t)
                    if t <= 0 or t >= d:
                        continue
                samples.append(backend.geodesic_point(p, q, t))
    samples.append(orbit[-1])
    translated = [backend.apply(f, p) for p in samples]
    near = [
        p for p in samples if any(backend.dist(p, q) <= R + 1e-12 for q in translated)
    ]
    best = 0.0
    for i in range(len(near)):
        for j in range(i + 1, len(near)):
            best = max(best, backend.dist(near[i], near[j]))
    return best
