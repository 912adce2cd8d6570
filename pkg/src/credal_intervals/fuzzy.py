"""Choquet and Sugeno integrals with respect to possibility/necessity measures.

The integrals on :class:`WeightedValueList` only use comparisons, ``+``,
``-``, ``*`` and ``max``, so they accept :class:`fractions.Fraction` entries
and are then exact.

The interval extractors come in two flavours: ``*_extreme_interval`` works on
the normalized extreme points of a :class:`WeightedConditionalSet`, and
``*_full_interval`` on the whole convex set it spans.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .conditioning import WeightedConditionalSet
from .core import GEOM_TOL, PROB_TOL, Event, UncertaintyInterval
from .errors import FrameMismatch
from .geometry import ProjectedPoint, convex_hull, upper_chain


@dataclass(frozen=True)
class WeightedValueList:
    """Finite function values paired with the possibility of their argument."""

    entries: tuple[tuple, ...]

    def __post_init__(self):
        entries = tuple((v, p) for v, p in self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise ValueError("a value list needs at least one entry")
        for v, p in entries:
            if not (-PROB_TOL <= v <= 1 + PROB_TOL and -PROB_TOL <= p <= 1 + PROB_TOL):
                raise ValueError(f"entry ({v}, {p}) outside [0, 1]^2")
        if abs(max(p for _, p in entries) - 1) > PROB_TOL:
            raise ValueError("the largest possibility must be 1")

    @property
    def values(self) -> list:
        return [v for v, _ in self.entries]

    def complement(self) -> WeightedValueList:
        """Same possibilities, values replaced by ``1 - value``."""
        return WeightedValueList(tuple((1 - v, p) for v, p in self.entries))


def choquet_possibility(l: WeightedValueList):
    """Integral of the possibility of the upper level sets of the values."""
    levels = sorted({v for v, _ in l.entries}, reverse=True)
    total = 0
    for j, v in enumerate(levels):
        below = levels[j + 1] if j + 1 < len(levels) else 0
        total += (v - below) * max(p for w, p in l.entries if w >= v)
    return total


def choquet_necessity(l: WeightedValueList):
    levels = sorted({v for v, _ in l.entries})
    total = 0
    prev = 0
    for v in levels:
        # alpha in (prev, v]: the entries strictly below alpha are those <= prev
        pi_below = max((p for w, p in l.entries if w <= prev), default=0)
        total += (v - prev) * (1 - pi_below)
        prev = v
    return total


def sugeno_possibility(l: WeightedValueList):
    return max(min(v, p) for v, p in l.entries)


def sugeno_necessity(l: WeightedValueList):
    """Infimum over alpha of max(N(values >= alpha), alpha).

    N(values >= alpha) only changes just above each distinct value, so the
    infimum is approached at those points.
    """
    best = 1
    for v in sorted({v for v, _ in l.entries}):
        pi_upto = max(p for w, p in l.entries if w <= v)
        best = min(best, max(1 - pi_upto, v))
    return best


def choquet_upper_by_levels(l: WeightedValueList):
    """Upper Choquet value accumulated level by level over the possibilities.

    At each step, pick the largest value among entries more possible than the
    current level (largest possibility on ties) and credit it for the
    possibility gap it covers.
    """
    level = 0
    acc = 0
    while level < 1:
        eligible = [(v, p) for v, p in l.entries if p > level]
        if not eligible:
            break
        v, p = max(eligible)
        acc += (p - level) * v
        level = p
    return acc


def value_list(w: WeightedConditionalSet, a: Event) -> WeightedValueList:
    """P(a | given) at each normalized extreme point, with its possibility."""
    if a.frame != w.frame:
        raise FrameMismatch("event is on another frame")
    values = w.normalized_matrix[:, a.mask].sum(axis=1)
    return WeightedValueList(tuple((float(v), p) for v, (_, p) in zip(values, w.normalized_extremes())))


def choquet_extreme_interval(w: WeightedConditionalSet, a: Event) -> UncertaintyInterval:
    upper = choquet_upper_by_levels(value_list(w, a))
    lower = 1 - choquet_upper_by_levels(value_list(w, a.complement()))
    return UncertaintyInterval(lower, upper)


def sugeno_extreme_interval(w: WeightedConditionalSet, a: Event) -> UncertaintyInterval:
    upper = sugeno_possibility(value_list(w, a))
    lower = 1 - sugeno_possibility(value_list(w, a.complement()))
    return UncertaintyInterval(lower, upper)


# -- whole convex set ----------------------------------------------------------


def _integrate_max(s: float, a: float, b: float, lo: float, hi: float) -> float:
    """Integral over [lo, hi] of max(s, a/phi + b)."""
    cuts = [lo, hi]
    if s != b:
        cross_at = a / (s - b)
        if lo < cross_at < hi:
            cuts.insert(1, cross_at)
    total = 0.0
    for x0, x1 in zip(cuts, cuts[1:]):
        mid = 0.5 * (x0 + x1)
        if a / mid + b > s:
            total += a * math.log(x1 / x0) + b * (x1 - x0)
        else:
            total += s * (x1 - x0)
    return total


def choquet_full_upper(points: Sequence[ProjectedPoint]) -> float:
    """Upper Choquet value over the convex hull of (r, t) points.

    With possibility ``r / r_max`` and value ``t / r``, the level-``phi``
    envelope is the best ratio over hull points with ``r >= phi``: either a
    hull vertex or the top of the hull at ``r = phi``. Between consecutive
    vertex abscissae the top is one edge ``t = a + b r``, whose ratio
    ``a / r + b`` integrates to a logarithm.
    """
    hull = [p for p in convex_hull(points) if p.r > GEOM_TOL]
    top = upper_chain(hull)
    r_max = max(p.r for p in hull)
    breaks = sorted({p.r for p in hull} | {p.r for p in top})

    total = max(p.t / p.r for p in hull) * breaks[0]
    edge = 0
    for lo, hi in zip(breaks, breaks[1:]):
        while top[edge + 1].r < hi:
            edge += 1
        pa, pb = top[edge], top[edge + 1]
        slope = (pb.t - pa.t) / (pb.r - pa.r)
        intercept = pa.t - slope * pa.r
        s = max(p.t / p.r for p in hull if p.r >= hi)
        total += _integrate_max(s, intercept, slope, lo, hi)
    return min(1.0, max(0.0, total / r_max))


def _full_upper(kind: str, func, w: WeightedConditionalSet, a: Event) -> float:
    if a.frame != w.frame:
        raise FrameMismatch("event is on another frame")
    # only the part of ``a`` inside the conditioning event matters
    key = (kind, a.members & w.given.members)
    return w.memoized(key, lambda: func(w.projected(a)))


def choquet_full_interval(w: WeightedConditionalSet, a: Event) -> UncertaintyInterval:
    upper = _full_upper("choquet", choquet_full_upper, w, a)
    lower = 1 - _full_upper("choquet", choquet_full_upper, w, a.complement())
    return UncertaintyInterval(lower, upper)


class FrontierPoint(NamedTuple):
    u: float  # conditional probability t / r
    v: float  # possibility r / r_max


def pareto_frontier(points: Sequence[FrontierPoint], tol: float = GEOM_TOL) -> list[FrontierPoint]:
    """Points not weakly dominated by a different point, sorted by ``u``."""
    pts: list[FrontierPoint] = []
    for p in sorted(points):
        if not any(abs(p.u - q.u) <= tol and abs(p.v - q.v) <= tol for q in pts):
            pts.append(p)
    front = []
    for p in pts:
        dominated = any(q is not p and q.u >= p.u - tol and q.v >= p.v - tol for q in pts)
        if not dominated:
            front.append(p)
    return front


def _root_between(a: float, b: float, c: float, lo: float, hi: float) -> float:
    if abs(a) <= GEOM_TOL:
        return -c / b
    disc = math.sqrt(max(0.0, b * b - 4 * a * c))
    # numerically stable pair of roots
    q = -0.5 * (b + math.copysign(disc, b))
    roots = [q / a, c / q] if q != 0 else [0.0]
    inside = [x for x in roots if lo - PROB_TOL <= x <= hi + PROB_TOL]
    return max(inside) if inside else max(roots)


def _frontier(points: Sequence[ProjectedPoint], tol: float) -> tuple[list[ProjectedPoint], list[FrontierPoint]]:
    hull = [p for p in convex_hull(points) if p.r > GEOM_TOL]
    r_max = max(p.r for p in hull)
    return hull, pareto_frontier([FrontierPoint(p.t / p.r, p.r / r_max) for p in hull], tol)


def _crossing(p: FrontierPoint, q: FrontierPoint) -> float:
    """Where the image of the segment between two points meets value == possibility.

    ``p`` has value <= possibility and ``q`` the reverse.
    """
    (u0, v0), (u1, v1) = p, q
    return _root_between(v1 - v0, u0 * v0 - u1 * v1, (u1 - u0) * v0 * v1, min(v0, v1), max(v0, v1))


def sugeno_steps_upper(points: Sequence[ProjectedPoint], tol: float = GEOM_TOL) -> float:
    """Upper Sugeno value by the four-step frontier procedure, taken literally.

    Keep the Pareto frontier of the hull vertices in (value, possibility)
    coordinates; if it lies entirely on one side of the diagonal the answer
    is read off directly, otherwise it is where the segment joining the last
    frontier point with value <= possibility to the first one with
    possibility < value crosses the diagonal.

    Exact when that segment is the hull edge carrying the optimum, which is
    always so for two generators. With more hull vertices the optimum can sit
    on a different edge and this falls short; :func:`sugeno_full_upper`
    handles the general case.
    """
    _, front = _frontier(points, tol)
    if all(p.u >= p.v - tol for p in front):
        return max(p.v for p in front)
    if all(p.u <= p.v + tol for p in front):
        return max(p.u for p in front)

    u0 = max(p.u for p in front if p.u <= p.v + tol)
    v0 = max(p.v for p in front if abs(p.u - u0) <= tol)
    v1 = max(p.v for p in front if p.v < p.u - tol)
    u1 = max(p.u for p in front if abs(p.v - v1) <= tol)
    x = _crossing(FrontierPoint(u0, v0), FrontierPoint(u1, v1))
    return min(1.0, max(0.0, x))


def sugeno_full_upper(points: Sequence[ProjectedPoint], tol: float = GEOM_TOL) -> float:
    """Upper Sugeno value, max of min(t/r, r/r_max), over the hull of (r, t) points.

    The value ``t / r`` and the possibility are both monotone along a hull
    edge, so on an edge the maximum of their minimum is at an endpoint or,
    when the endpoints lie on opposite sides of the diagonal, at the crossing
    (the root of the same quadratic as in :func:`sugeno_steps_upper`). When
    the frontier lies on one side of the diagonal no edge crosses it and this
    reduces to the direct readings of the step procedure.
    """
    hull, front = _frontier(points, tol)
    best = max(min(p.u, p.v) for p in front)
    r_max = max(p.r for p in hull)
    uv = [FrontierPoint(p.t / p.r, p.r / r_max) for p in hull]
    edges = list(zip(uv, uv[1:] + uv[:1])) if len(uv) > 2 else list(zip(uv, uv[1:]))
    for p, q in edges:
        if p.u > p.v:
            p, q = q, p
        if p.u <= p.v + tol and q.v < q.u - tol and p.u < p.v - tol:
            best = max(best, _crossing(p, q))
    return min(1.0, max(0.0, best))


def sugeno_full_interval(w: WeightedConditionalSet, a: Event) -> UncertaintyInterval:
    upper = _full_upper("sugeno", sugeno_full_upper, w, a)
    lower = 1 - _full_upper("sugeno", sugeno_full_upper, w, a.complement())
    return UncertaintyInterval(lower, upper)
