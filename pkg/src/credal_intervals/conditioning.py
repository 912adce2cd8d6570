"""Dempster, robust and possibility-weighted conditioning of credal sets."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .core import (
    GEOM_TOL,
    PROB_TOL,
    CredalSet,
    Distribution,
    Event,
    Frame,
    MassAssignment,
    SubDistribution,
    UncertaintyInterval,
    belief,
    extreme_filter,
    plausibility,
    upper_probability,
)
from .errors import ConditioningImpossible, FrameMismatch
from .geometry import ProjectedPoint, convex_hull, ray_far_intersection
from .lp import extreme_indices

DEFAULT_RESOLUTION = 1000


@dataclass(frozen=True)
class WeightedConditionalSet:
    """Unnormalized restrictions ``p * I_B`` of a credal set's generators.

    The total mass of each generator is its normalizing factor; divided by the
    largest total it becomes the possibility of the normalized conditional.
    Generators with (numerically) zero total are discarded on construction.
    """

    frame: Frame
    given: Event
    generators: tuple[SubDistribution, ...]

    def __post_init__(self):
        if self.given.frame != self.frame:
            raise FrameMismatch("conditioning event is on another frame")
        outside = ~self.given.mask
        kept = []
        for g in self.generators:
            if g.frame != self.frame:
                raise FrameMismatch("generator on another frame")
            if np.any(g.array[outside] > GEOM_TOL):
                raise ValueError("generator has mass outside the conditioning event")
            if g.total > GEOM_TOL:
                kept.append(g)
        if not kept:
            raise ConditioningImpossible("every generator gives the conditioning event zero mass")
        object.__setattr__(self, "generators", tuple(kept))

    @cached_property
    def matrix(self) -> np.ndarray:
        """One row of weights per generator."""
        m = np.array([g.weights for g in self.generators])
        m.flags.writeable = False
        return m

    @cached_property
    def totals(self) -> np.ndarray:
        return np.array([g.total for g in self.generators])

    @property
    def r_max(self) -> float:
        return float(self.totals.max())

    @cached_property
    def possibilities(self) -> np.ndarray:
        return self.totals / self.r_max

    def masses(self, a: Event) -> np.ndarray:
        """Unnormalized mass of ``a`` (within the conditioning event) per generator."""
        if a.frame != self.frame:
            raise FrameMismatch("event is on another frame")
        return self.matrix[:, a.mask & self.given.mask].sum(axis=1)

    def projected(self, a: Event) -> list[ProjectedPoint]:
        return [ProjectedPoint(float(r), float(t)) for r, t in zip(self.totals, self.masses(a))]

    @cached_property
    def _memo(self) -> dict:
        return {}

    def memoized(self, key, compute):
        """Cache a derived value of this (immutable) set under ``key``."""
        memo = self._memo
        if key not in memo:
            memo[key] = compute()
        return memo[key]

    @cached_property
    def normalized_matrix(self) -> np.ndarray:
        """Rows of :meth:`normalized_extremes`, as an array."""
        m = np.array([d.weights for d, _ in self._normalized_extremes])
        m.flags.writeable = False
        return m

    def normalized_extremes(self) -> list[tuple[Distribution, float]]:
        """Normalized images of the generators with their possibilities.

        Generators that normalize to the same distribution are merged and keep
        the largest possibility, as the possibility of a conditional is the
        supremum over all of its unnormalized preimages.
        """
        return list(self._normalized_extremes)

    @cached_property
    def _normalized_extremes(self) -> tuple[tuple[Distribution, float], ...]:
        out: list[tuple[Distribution, float]] = []
        for g, pi in zip(self.generators, self.possibilities):
            d = g.normalized()
            for k, (e, p) in enumerate(out):
                if max(abs(x - y) for x, y in zip(e.weights, d.weights)) < PROB_TOL:
                    out[k] = (e, max(p, float(pi)))
                    break
            else:
                out.append((d, float(pi)))
        return tuple(out)


@dataclass(frozen=True)
class PossibilityProfile:
    """Possibility of each value of P(event | given).

    ``anchors`` are the exact (value, possibility) pairs of the generators;
    ``samples`` evaluate the profile on a uniform grid of values.
    """

    event: Event
    given: Event
    anchors: tuple[tuple[float, float], ...]
    samples: tuple[tuple[float, float], ...]


def _require_positive(value: float, what: str) -> None:
    if value <= GEOM_TOL:
        raise ConditioningImpossible(f"{what} is {value:.3g}; cannot condition")


def _dempster_conditionals(c: CredalSet, b: Event) -> list[Distribution]:
    probs = [g.probability(b) for g in c.generators]
    top = max(probs)
    _require_positive(top, "upper probability of the conditioning event")
    return [g.conditional(b) for g, p in zip(c.generators, probs) if p >= top - PROB_TOL]


def _robust_conditionals(c: CredalSet, b: Event) -> list[Distribution]:
    conds = [g.conditional(b) for g in c.generators if g.probability(b) > GEOM_TOL]
    if not conds:
        raise ConditioningImpossible("every generator gives the conditioning event zero probability")
    return conds


def dempster_condition(c: CredalSet, b: Event) -> CredalSet:
    """Condition only the generators that maximize P(b) (ties within 1e-9 kept)."""
    return extreme_filter(_dempster_conditionals(c.canonicalize(), b))


def robust_condition(c: CredalSet, b: Event) -> CredalSet:
    """Condition every generator that gives ``b`` positive probability."""
    return extreme_filter(_robust_conditionals(c.canonicalize(), b))


# P(a | b) is linear on the conditioned set, so its range is read off the
# conditioned generators directly; pruning them first would not change it.
def _conditional_values(c: CredalSet, a: Event, b: Event) -> tuple[np.ndarray, np.ndarray]:
    if a.frame != c.frame or b.frame != c.frame:
        raise FrameMismatch("event is on another frame")
    m = c.matrix()
    pb = m[:, b.mask].sum(axis=1)
    pab = m[:, a.mask & b.mask].sum(axis=1)
    return pb, pab


def dempster_set_interval(c: CredalSet, a: Event, b: Event) -> UncertaintyInterval:
    pb, pab = _conditional_values(c.canonicalize(), a, b)
    top = float(pb.max())
    _require_positive(top, "upper probability of the conditioning event")
    keep = pb >= top - PROB_TOL
    vals = pab[keep] / pb[keep]
    return UncertaintyInterval(float(vals.min()), float(vals.max()))


def robust_interval(c: CredalSet, a: Event, b: Event) -> UncertaintyInterval:
    pb, pab = _conditional_values(c, a, b)
    keep = pb > GEOM_TOL
    if not keep.any():
        raise ConditioningImpossible("every generator gives the conditioning event zero probability")
    vals = pab[keep] / pb[keep]
    return UncertaintyInterval(float(vals.min()), float(vals.max()))


def dempster_interval(m: MassAssignment, a: Event, b: Event) -> UncertaintyInterval:
    """Closed-form focusing bounds: Pl(a&b)/Pl(b) and 1 - Pl(b-a)/Pl(b)."""
    pl_b = plausibility(m, b)
    _require_positive(pl_b, "plausibility of the conditioning event")
    upper = plausibility(m, a & b) / pl_b
    lower = (pl_b - plausibility(m, b - a)) / pl_b
    return UncertaintyInterval(lower, upper)


def robust_interval_closed(m: MassAssignment, a: Event, b: Event) -> UncertaintyInterval:
    """Closed-form bounds of conditioning every compatible distribution.

    A vanishing denominator means every distribution with P(b) > 0 agrees on
    P(a|b) (0 for the upper bound, 1 for the lower), which is the limit used.
    """
    _require_positive(plausibility(m, b), "plausibility of the conditioning event")
    pl_ab, bel_ab = plausibility(m, a & b), belief(m, a & b)
    pl_rest, bel_rest = plausibility(m, b - a), belief(m, b - a)

    den = pl_ab + bel_rest
    upper = pl_ab / den if den > GEOM_TOL else 0.0
    den = bel_ab + pl_rest
    lower = bel_ab / den if den > GEOM_TOL else 1.0
    return UncertaintyInterval(lower, upper)


def possibility_condition(c: CredalSet, b: Event) -> WeightedConditionalSet:
    """Restrict every generator to ``b`` without normalizing.

    Extreme points are taken among the restricted vectors themselves, not
    their normalizations.
    """
    c = c.canonicalize()
    _require_positive(upper_probability(c, b), "upper probability of the conditioning event")
    restricted = [g.restrict(b) for g in c.generators]
    restricted = [g for g in restricted if g.total > GEOM_TOL]
    idx = extreme_indices([g.weights for g in restricted], PROB_TOL)
    return WeightedConditionalSet(c.frame, b, tuple(restricted[i] for i in idx))


def profile_value(w: WeightedConditionalSet, a: Event, x: float, hull=None) -> float:
    """Possibility that P(a | given) equals ``x``."""
    if hull is None:
        hull = convex_hull(w.projected(a))
    r = ray_far_intersection(hull, x)
    return 0.0 if r is None else min(1.0, r / w.r_max)


def event_profile(w: WeightedConditionalSet, a: Event, resolution: int = DEFAULT_RESOLUTION) -> PossibilityProfile:
    if resolution < 1:
        raise ValueError("resolution must be a positive integer")
    pts = w.projected(a)
    hull = convex_hull(pts)
    anchors = sorted({(p.t / p.r, p.r / w.r_max) for p in pts})
    samples = [(k / resolution, profile_value(w, a, k / resolution, hull)) for k in range(resolution + 1)]
    return PossibilityProfile(a, w.given, tuple(anchors), tuple(samples))
