"""Frames, events, distributions, credal sets and mass assignments."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import FrameMismatch
from .lp import extreme_indices

PROB_TOL = 1e-9
GEOM_TOL = 1e-12
MAX_ALLOCATIONS = 10**6


@dataclass(frozen=True)
class Frame:
    """A finite, ordered universe of outcome labels."""

    outcomes: tuple[str, ...]

    def __init__(self, outcomes: Iterable[str]):
        outcomes = tuple(outcomes)
        if not outcomes:
            raise ValueError("a frame needs at least one outcome")
        if any(not isinstance(o, str) or not o for o in outcomes):
            raise ValueError("outcome labels must be non-empty strings")
        if len(set(outcomes)) != len(outcomes):
            raise ValueError(f"duplicate outcome labels in {outcomes}")
        object.__setattr__(self, "outcomes", outcomes)

    def __len__(self) -> int:
        return len(self.outcomes)

    @cached_property
    def index(self) -> dict[str, int]:
        return {o: i for i, o in enumerate(self.outcomes)}

    def event(self, *labels: str) -> Event:
        return Event(self, frozenset(labels))

    @property
    def universe(self) -> Event:
        return Event(self, frozenset(self.outcomes))


@dataclass(frozen=True)
class Event:
    frame: Frame
    members: frozenset[str]

    def __post_init__(self):
        if not isinstance(self.members, frozenset):
            object.__setattr__(self, "members", frozenset(self.members))
        unknown = self.members - set(self.frame.outcomes)
        if unknown:
            raise ValueError(f"labels {sorted(unknown)} are not in the frame")

    @cached_property
    def mask(self) -> np.ndarray:
        m = np.zeros(len(self.frame), dtype=bool)
        for o in self.members:
            m[self.frame.index[o]] = True
        m.flags.writeable = False
        return m

    def _check(self, other: Event) -> None:
        if other.frame != self.frame:
            raise FrameMismatch("events live on different frames")

    def complement(self) -> Event:
        return Event(self.frame, frozenset(self.frame.outcomes) - self.members)

    def __and__(self, other: Event) -> Event:
        self._check(other)
        return Event(self.frame, self.members & other.members)

    def __or__(self, other: Event) -> Event:
        self._check(other)
        return Event(self.frame, self.members | other.members)

    def __sub__(self, other: Event) -> Event:
        self._check(other)
        return Event(self.frame, self.members - other.members)

    def __le__(self, other: Event) -> bool:
        self._check(other)
        return self.members <= other.members

    def __bool__(self) -> bool:
        return bool(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def sorted_members(self) -> list[str]:
        """Members in frame order."""
        return [o for o in self.frame.outcomes if o in self.members]


@dataclass(frozen=True, eq=False)
class SubDistribution:
    """Non-negative weights over a frame with total mass at most one."""

    frame: Frame
    weights: tuple[float, ...]

    def __post_init__(self):
        w = tuple(float(x) for x in self.weights)
        object.__setattr__(self, "weights", w)
        if len(w) != len(self.frame):
            raise ValueError(f"expected {len(self.frame)} weights, got {len(w)}")
        if any(not math.isfinite(x) or x < -PROB_TOL for x in w):
            raise ValueError(f"weights must be finite and non-negative: {w}")
        if self.total > 1 + PROB_TOL:
            raise ValueError(f"total mass {self.total} exceeds 1")

    @cached_property
    def array(self) -> np.ndarray:
        a = np.array(self.weights)
        a.flags.writeable = False
        return a

    @cached_property
    def total(self) -> float:
        return math.fsum(self.weights)

    def mass(self, a: Event) -> float:
        if a.frame != self.frame:
            raise FrameMismatch("event and distribution live on different frames")
        return math.fsum(w for w, m in zip(self.weights, a.mask) if m)

    def restrict(self, b: Event) -> SubDistribution:
        """Pointwise product with the indicator of ``b``."""
        if b.frame != self.frame:
            raise FrameMismatch("event and distribution live on different frames")
        return SubDistribution(self.frame, tuple(w if m else 0.0 for w, m in zip(self.weights, b.mask)))

    def normalized(self) -> Distribution:
        t = self.total
        if t <= GEOM_TOL:
            raise ValueError("cannot normalize a zero-mass vector")
        return Distribution(self.frame, tuple(w / t for w in self.weights))

    def as_dict(self) -> dict[str, float]:
        return dict(zip(self.frame.outcomes, self.weights))

    def __eq__(self, other):
        if not isinstance(other, SubDistribution):
            return NotImplemented
        return self.frame == other.frame and self.weights == other.weights

    def __hash__(self):
        return hash((self.frame, self.weights))

    def __repr__(self):
        inner = ", ".join(f"{o}: {w:.6g}" for o, w in zip(self.frame.outcomes, self.weights))
        return f"{type(self).__name__}({inner})"


class Distribution(SubDistribution):
    """A probability vector: non-negative weights summing to one."""

    def __post_init__(self):
        super().__post_init__()
        if abs(self.total - 1.0) > PROB_TOL:
            raise ValueError(f"weights sum to {self.total}, not 1")

    def conditional(self, b: Event) -> Distribution:
        return self.restrict(b).normalized()

    def probability(self, a: Event) -> float:
        return self.mass(a)


def distribution(frame: Frame, weights: Sequence[float] | dict[str, float]) -> Distribution:
    """Build a distribution from a weight list or a label->weight mapping."""
    if isinstance(weights, dict):
        for k in weights:
            if k not in frame.index:
                raise ValueError(f"label {k!r} is not in the frame")
        weights = [weights.get(o, 0.0) for o in frame.outcomes]
    return Distribution(frame, tuple(weights))


@dataclass(frozen=True)
class CredalSet:
    """Convex hull of a finite list of distributions on one frame.

    ``canonical`` means the generators are exactly the extreme points.
    """

    frame: Frame
    generators: tuple[Distribution, ...]
    canonical: bool = False

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise ValueError("a credal set needs at least one generator")
        if any(g.frame != self.frame for g in gens):
            raise FrameMismatch("all generators must share the credal set's frame")

    def __len__(self) -> int:
        return len(self.generators)

    def matrix(self) -> np.ndarray:
        """One row of weights per generator (read-only)."""
        return self._matrix

    @cached_property
    def _matrix(self) -> np.ndarray:
        m = np.array([g.weights for g in self.generators])
        m.flags.writeable = False
        return m

    def canonicalize(self) -> CredalSet:
        return self if self.canonical else extreme_filter(self.generators)

    def same_hull(self, other: CredalSet, tol: float = PROB_TOL) -> bool:
        """Both generator lists span the same polytope (as sets of extreme points)."""
        a = self.canonicalize().matrix()
        b = other.canonicalize().matrix()
        if a.shape != b.shape:
            return False
        return all(np.min(np.max(np.abs(b - row), axis=1)) < tol for row in a)


@dataclass(frozen=True)
class MassAssignment:
    frame: Frame
    focal_elements: tuple[tuple[Event, float], ...]

    def __post_init__(self):
        focal = tuple((e, float(v)) for e, v in self.focal_elements)
        object.__setattr__(self, "focal_elements", focal)
        if not focal:
            raise ValueError("a mass assignment needs at least one focal element")
        seen = set()
        for e, v in focal:
            if e.frame != self.frame:
                raise FrameMismatch("focal element on a different frame")
            if not e:
                raise ValueError("the empty set cannot be a focal element")
            if e.members in seen:
                raise ValueError(f"duplicate focal element {e.sorted_members()}")
            seen.add(e.members)
            if not (0.0 < v <= 1.0 + PROB_TOL):
                raise ValueError(f"focal mass {v} outside (0, 1]")
        total = math.fsum(v for _, v in focal)
        if abs(total - 1.0) > PROB_TOL:
            raise ValueError(f"masses sum to {total}, not 1")

    @classmethod
    def from_dict(cls, frame: Frame, masses: dict) -> MassAssignment:
        """``masses`` maps iterables of labels (or single labels) to masses."""
        focal = []
        for k, v in masses.items():
            labels = (k,) if isinstance(k, str) else tuple(k)
            focal.append((frame.event(*labels), v))
        return cls(frame, tuple(focal))


@dataclass(frozen=True)
class UncertaintyInterval:
    lower: float
    upper: float

    def __post_init__(self):
        lo, up = float(self.lower), float(self.upper)
        if not (-PROB_TOL <= lo <= up + PROB_TOL and up <= 1 + PROB_TOL):
            raise ValueError(f"invalid interval [{lo}, {up}]")
        # absorb rounding noise at the edges of [0, 1]
        lo = min(max(lo, 0.0), 1.0)
        up = min(max(up, 0.0), 1.0)
        object.__setattr__(self, "lower", min(lo, up))
        object.__setattr__(self, "upper", up)

    def __iter__(self):
        yield self.lower
        yield self.upper

    def contains(self, other: UncertaintyInterval, tol: float = PROB_TOL) -> bool:
        return self.lower <= other.lower + tol and other.upper <= self.upper + tol

    def width(self) -> float:
        return self.upper - self.lower


def _check_frame(frame: Frame, a: Event) -> None:
    if a.frame != frame:
        raise FrameMismatch("event is not on the model's frame")


def belief(m: MassAssignment, a: Event) -> float:
    _check_frame(m.frame, a)
    return math.fsum(v for e, v in m.focal_elements if e.members <= a.members)


def plausibility(m: MassAssignment, a: Event) -> float:
    _check_frame(m.frame, a)
    return math.fsum(v for e, v in m.focal_elements if e.members & a.members)


def extreme_filter(points: Sequence[Distribution]) -> CredalSet:
    """Drop duplicates and every point that is a convex combination of the rest."""
    points = list(points)
    if not points:
        raise ValueError("extreme_filter needs at least one point")
    frame = points[0].frame
    if any(p.frame != frame for p in points):
        raise FrameMismatch("points live on different frames")
    idx = extreme_indices([p.weights for p in points], PROB_TOL)
    return CredalSet(frame, tuple(points[i] for i in idx), canonical=True)


def credal_from_mass(m: MassAssignment) -> CredalSet:
    """Extreme points of the set of distributions compatible with ``m``.

    Every allocation of each focal mass to one of its members is a point of the
    set, and the set is their convex hull. The hull of all allocations is the
    Minkowski sum of the per-focal-element simplices, so extreme points are
    pruned after adding each focal element instead of materialising the full
    product of allocations.
    """
    count = math.prod(len(e) for e, _ in m.focal_elements)
    if count > MAX_ALLOCATIONS:
        raise ValueError(f"{count} allocations exceed the limit of {MAX_ALLOCATIONS}")

    n = len(m.frame)
    partial = np.zeros((1, n))
    for e, v in m.focal_elements:
        cols = np.flatnonzero(e.mask)
        steps = np.zeros((len(cols), n))
        steps[np.arange(len(cols)), cols] = v
        cand = (partial[:, None, :] + steps[None, :, :]).reshape(-1, n)
        partial = cand[extreme_indices(cand, PROB_TOL)]

    gens = []
    for row in partial:
        row = np.clip(row, 0.0, None)
        gens.append(Distribution(m.frame, tuple(row / row.sum())))
    return CredalSet(m.frame, tuple(gens), canonical=True)


def upper_probability(c: CredalSet, a: Event) -> float:
    _check_frame(c.frame, a)
    return max(g.probability(a) for g in c.generators)


def lower_probability(c: CredalSet, a: Event) -> float:
    _check_frame(c.frame, a)
    return min(g.probability(a) for g in c.generators)
