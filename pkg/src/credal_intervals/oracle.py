"""Brute-force checks by sampling the conditional convex set.

The default ``"grid"`` sampler visits every convex combination of the
unnormalized generators whose barycentric coordinates are multiples of
``1/resolution``. The ``"edges"`` sampler walks only the segments joining
pairs of generators, at the same step, and also visits on each segment the
points whose value is the centre of each of ``resolution`` equal value bins
(a uniform step in the mixing weight can jump over many values near a
generator of small mass). Every quantity checked here (the
level-wise best value, the max-min, the farthest point on a ray) is attained
on the boundary of the set: at an interior point one can always move so that
both the value ``t / r`` and the possibility ``r / r_max`` increase. Each
boundary edge lies on one of those segments, so edge sampling converges to
the same answers with far fewer points when there are three or more
generators. ``"auto"`` uses the grid for one or two generators (where it
is the single segment) and the edges otherwise.

Sampling only sees points inside the set, so the upper values here approach
the exact ones from below.
"""

from __future__ import annotations

from math import comb
from typing import Iterator, Literal

import numpy as np

from .conditioning import PossibilityProfile, WeightedConditionalSet, profile_value
from .core import GEOM_TOL, Event
from .errors import ResolutionTooHigh
from .geometry import convex_hull

MAX_COMBINATIONS = 10**7

Sampler = Literal["grid", "edges", "auto"]


def compositions(n: int, k: int) -> Iterator[np.ndarray]:
    """All k-part compositions of n, in blocks sharing their first k-2 parts."""
    if k == 1:
        yield np.array([[n]])
        return
    if k == 2:
        j = np.arange(n + 1)
        yield np.column_stack([j, n - j])
        return
    for first in range(n + 1):
        for block in compositions(n - first, k - 1):
            yield np.column_stack([np.full(len(block), first), block])


def grid_count(k: int, resolution: int) -> int:
    return comb(resolution + k - 1, k - 1)


def edge_count(k: int, resolution: int) -> int:
    return 1 if k == 1 else comb(k, 2) * 2 * (resolution + 1)


def _check_size(count: int, what: str, k: int, resolution: int) -> None:
    if resolution < 1:
        raise ValueError("resolution must be a positive integer")
    if count > MAX_COMBINATIONS:
        raise ResolutionTooHigh(
            f"{count} {what} for {k} generators at resolution {resolution} exceed {MAX_COMBINATIONS}"
        )


def _pairs(w: WeightedConditionalSet, lam_blocks, r_gen, t_gen) -> np.ndarray:
    chunks = []
    for lam in lam_blocks:
        r = lam @ r_gen
        t = lam @ t_gen
        keep = r > GEOM_TOL
        chunks.append(np.column_stack([r[keep] / w.r_max, t[keep] / r[keep]]))
    return np.vstack(chunks)


def grid_points(w: WeightedConditionalSet, a: Event, resolution: int) -> np.ndarray:
    """(possibility, P(a | given)) for every grid combination, one per row.

    Combinations with (numerically) zero total mass are skipped.
    """
    k = len(w.generators)
    _check_size(grid_count(k, resolution) if resolution >= 1 else 0, "grid combinations", k, resolution)
    blocks = (block / resolution for block in compositions(resolution, k))
    return _pairs(w, blocks, w.totals, w.masses(a))


def edge_points(w: WeightedConditionalSet, a: Event, resolution: int) -> np.ndarray:
    """Like :func:`grid_points`, restricted to segments between two generators."""
    k = len(w.generators)
    _check_size(edge_count(k, resolution) if resolution >= 1 else 0, "edge samples", k, resolution)
    r_gen, t_gen = w.totals, w.masses(a)
    if k == 1:
        return _pairs(w, [np.ones((1, 1))], r_gen, t_gen)
    steps = np.arange(resolution + 1) / resolution
    centres = (np.arange(resolution) + 0.5) / resolution
    blocks = []
    for i in range(k):
        for j in range(i + 1, k):
            # value at weight lam on generator i: (lam*ti + (1-lam)*tj) / (lam*ri + (1-lam)*rj)
            dt, dr = t_gen[i] - t_gen[j], r_gen[i] - r_gen[j]
            den = dt - centres * dr
            with np.errstate(divide="ignore", invalid="ignore"):
                hit = (centres * r_gen[j] - t_gen[j]) / den
            hit = hit[(np.abs(den) > GEOM_TOL) & (hit >= 0) & (hit <= 1)]
            lam = np.concatenate([steps, hit])
            block = np.zeros((len(lam), k))
            block[:, i] = lam
            block[:, j] = 1 - lam
            blocks.append(block)
    return _pairs(w, blocks, r_gen, t_gen)


def sample_points(w: WeightedConditionalSet, a: Event, resolution: int, sampler: Sampler = "grid") -> np.ndarray:
    if sampler == "auto":
        sampler = "grid" if len(w.generators) <= 2 else "edges"
    if sampler == "grid":
        return grid_points(w, a, resolution)
    if sampler == "edges":
        return edge_points(w, a, resolution)
    raise ValueError(f"unknown sampler {sampler!r}")


def _level_envelope(pairs: np.ndarray, resolution: int) -> np.ndarray:
    """Largest value among pairs with possibility >= j/resolution, j = 1..resolution."""
    order = np.argsort(-pairs[:, 0], kind="stable")
    poss = pairs[order, 0]
    best = np.maximum.accumulate(pairs[order, 1])
    betas = np.arange(1, resolution + 1) / resolution
    # number of pairs with possibility >= beta (poss is sorted descending)
    counts = np.searchsorted(-poss, -betas + 1e-12, side="right")
    return np.where(counts > 0, best[np.maximum(counts - 1, 0)], 0.0)


def oracle_upper_choquet(
    w: WeightedConditionalSet, a: Event, resolution: int, sampler: Sampler = "grid"
) -> float:
    pairs = sample_points(w, a, resolution, sampler)
    return float(_level_envelope(pairs, resolution).mean())


def oracle_upper_sugeno(
    w: WeightedConditionalSet, a: Event, resolution: int, sampler: Sampler = "grid"
) -> float:
    pairs = sample_points(w, a, resolution, sampler)
    return float(np.max(np.minimum(pairs[:, 0], pairs[:, 1])))


def oracle_profile(
    w: WeightedConditionalSet, a: Event, resolution: int, sampler: Sampler = "grid"
) -> PossibilityProfile:
    """Sampled possibility profile.

    Pairs are binned by value into ``resolution`` equal bins; each non-empty
    bin contributes its most possible pair ``(value, possibility)``, so every
    sample is an actual point of the profile's hypograph. The anchors are the
    pure generators.
    """
    pairs = sample_points(w, a, resolution, sampler)
    bins = np.minimum((pairs[:, 1] * resolution).astype(int), resolution - 1)
    order = np.lexsort((-pairs[:, 0], bins))
    first = np.ones(len(order), dtype=bool)
    first[1:] = bins[order][1:] != bins[order][:-1]
    top = pairs[order][first]
    samples = tuple((float(x), float(p)) for p, x in top)

    r_gen, t_gen = w.totals, w.masses(a)
    anchors = tuple(sorted({(float(t / r), float(r / w.r_max)) for r, t in zip(r_gen, t_gen)}))
    return PossibilityProfile(a, w.given, anchors, samples)


def profile_discrepancy(
    w: WeightedConditionalSet, a: Event, resolution: int, sampler: Sampler = "grid"
) -> tuple[float, float]:
    """Compare :func:`oracle_profile` with the exact profile.

    Returns ``(overshoot, gap)``. ``overshoot`` is the largest amount by which
    a sampled possibility exceeds the exact profile at the same value (zero up
    to rounding, since samples are inner points). ``gap`` is the largest
    difference, over non-empty bins, between the exact supremum of the profile
    on the bin and the sampled maximum. The exact profile is unimodal and
    monotone between anchors, so its supremum on a bin is attained at a bin
    edge or at an anchor inside it.
    """
    sampled = oracle_profile(w, a, resolution, sampler)
    hull = convex_hull(w.projected(a))
    overshoot = 0.0
    gap = 0.0
    for x, pi in sampled.samples:
        overshoot = max(overshoot, pi - profile_value(w, a, x, hull))
        k = min(int(x * resolution), resolution - 1)
        lo, hi = k / resolution, (k + 1) / resolution
        sup = max(profile_value(w, a, lo, hull), profile_value(w, a, hi, hull))
        sup = max([sup] + [p for ax, p in sampled.anchors if lo <= ax <= hi])
        gap = max(gap, sup - pi)
    return overshoot, gap
