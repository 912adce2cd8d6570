"""Planar convex hulls of (r, t) points.

``r`` is the unnormalized mass of the conditioning event and ``t`` the
unnormalized mass of the target event, so every point satisfies 0 <= t <= r.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

COLLINEAR_TOL = 1e-12


class ProjectedPoint(NamedTuple):
    r: float
    t: float


def cross(o, a, b) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _snap(values: list[float], tol: float) -> dict[float, float]:
    """Map each value to the largest member of its run of ``tol``-close values."""
    out: dict[float, float] = {}
    run: list[float] = []
    for x in sorted(set(values)):
        if run and x - run[-1] > tol:
            out.update((y, run[-1]) for y in run)
            run = []
        run.append(x)
    out.update((y, run[-1]) for y in run)
    return out


def _dedupe(points: Iterable, tol: float = COLLINEAR_TOL) -> list[ProjectedPoint]:
    """Sorted points with rounding noise removed.

    Abscissae closer than ``tol`` are merged first, so that nearly vertical
    pairs do not produce spurious slopes; then points closer than ``tol`` in
    ``t`` at the same abscissa are merged.
    """
    pts = [(float(r), float(t)) for r, t in points]
    snap_r = _snap([r for r, _ in pts], tol)
    out: list[ProjectedPoint] = []
    for r, t in sorted((snap_r[r], t) for r, t in pts):
        if out and out[-1].r == r and t - out[-1].t <= tol:
            out[-1] = ProjectedPoint(r, t)
            continue
        out.append(ProjectedPoint(r, t))
    return out


def convex_hull(points: Iterable, tol: float = COLLINEAR_TOL) -> list[ProjectedPoint]:
    """Hull vertices in counter-clockwise order (Andrew's monotone chain).

    Collinear boundary points are dropped. A segment comes back as its two
    endpoints and a single point as itself.
    """
    pts = _dedupe(points, tol)
    if len(pts) <= 2:
        return pts

    def half(seq):
        chain: list[ProjectedPoint] = []
        for p in seq:
            while len(chain) >= 2 and cross(chain[-2], chain[-1], p) <= tol:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(reversed(pts))
    return lower[:-1] + upper[:-1]


def upper_chain(points: Iterable, tol: float = COLLINEAR_TOL) -> list[ProjectedPoint]:
    """Vertices of the upper boundary sorted by increasing ``r``.

    For each abscissa only the highest point is kept, so the chain is the
    graph of a concave piecewise-linear function on [min r, max r].
    """
    best: dict[float, float] = {}
    for p in _dedupe(points, tol):
        best[p.r] = max(best.get(p.r, p.t), p.t)
    pts = [ProjectedPoint(r, t) for r, t in sorted(best.items())]
    chain: list[ProjectedPoint] = []
    for p in pts:
        while len(chain) >= 2 and cross(chain[-2], chain[-1], p) >= -tol:
            chain.pop()
        chain.append(p)
    return chain


def ray_far_intersection(hull: list[ProjectedPoint], slope: float, tol: float = COLLINEAR_TOL) -> float | None:
    """Largest ``r`` of a hull point on the ray ``t = slope * r``, or None.

    ``hull`` is the output of :func:`convex_hull`.
    """
    def f(p):
        return p.t - slope * p.r

    if len(hull) == 1:
        p = hull[0]
        return p.r if abs(f(p)) <= tol * max(1.0, p.r) else None

    edges = list(zip(hull, hull[1:] + hull[:1])) if len(hull) > 2 else [(hull[0], hull[1])]
    best = None
    for p, q in edges:
        fp, fq = f(p), f(q)
        if abs(fp) <= tol:
            best = p.r if best is None else max(best, p.r)
        if abs(fq) <= tol:
            best = q.r if best is None else max(best, q.r)
        if (fp > tol and fq < -tol) or (fp < -tol and fq > tol):
            lam = fp / (fp - fq)
            r = p.r + lam * (q.r - p.r)
            best = r if best is None else max(best, r)
    return best
