"""Dense phase-I simplex used to decide convex-hull membership."""

from __future__ import annotations

import numpy as np

PIVOT_TOL = 1e-12


def hull_residual(point: np.ndarray, others: np.ndarray) -> float:
    """Smallest L1 residual ``|sum_j l_j y_j - x|`` over convex weights ``l``.

    ``others`` holds one candidate generator per row. The residual also counts
    the violation of ``sum_j l_j = 1``, so a return value of 0 means ``point``
    lies in the convex hull of ``others``.

    Solved as the phase-I problem of a dense tableau simplex with Bland's
    rule, which cannot cycle.
    """
    others = np.atleast_2d(np.asarray(others, dtype=float))
    point = np.asarray(point, dtype=float)
    k, n = others.shape
    a = np.vstack([others.T, np.ones(k)])
    b = np.append(point, 1.0)
    # keep the right-hand side non-negative so the artificial basis is feasible
    neg = b < 0
    a[neg] *= -1.0
    b[neg] *= -1.0
    m = n + 1

    tab = np.zeros((m + 1, k + m + 1))
    tab[:m, :k] = a
    tab[:m, k : k + m] = np.eye(m)
    tab[:m, -1] = b
    tab[m, :k] = -a.sum(axis=0)
    tab[m, -1] = -b.sum()
    basis = list(range(k, k + m))

    for _ in range(10_000):
        entering = np.flatnonzero(tab[m, :-1] < -PIVOT_TOL)
        if entering.size == 0:
            break
        j = int(entering[0])
        col = tab[:m, j]
        eligible = np.flatnonzero(col > PIVOT_TOL)
        if eligible.size == 0:
            break
        ratios = tab[eligible, -1] / col[eligible]
        best = ratios.min()
        tied = eligible[ratios <= best + PIVOT_TOL * max(1.0, abs(best))]
        i = int(min(tied, key=lambda r: basis[r]))
        tab[i] /= tab[i, j]
        for r in range(m + 1):
            if r != i and tab[r, j] != 0.0:
                tab[r] -= tab[r, j] * tab[i]
        basis[i] = j
    else:  # pragma: no cover - Bland's rule terminates long before this
        raise RuntimeError("simplex iteration limit reached")

    return max(0.0, -float(tab[m, -1]))


def in_convex_hull(point, others, tol: float = 1e-9) -> bool:
    """True if ``point`` is a convex combination of the rows of ``others``."""
    others = np.atleast_2d(np.asarray(others, dtype=float))
    if others.shape[0] == 0:
        return False
    return hull_residual(point, others) <= tol


def extreme_indices(points, tol: float = 1e-9) -> list[int]:
    """Indices of the rows of ``points`` that are vertices of their convex hull.

    Near-duplicates (max-norm distance below ``tol``) keep their first
    occurrence. Non-extreme rows are removed one at a time; removing a point
    that lies in the hull of the rest never changes the hull, so the order of
    removal does not matter.
    """
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    kept: list[int] = []
    for i, p in enumerate(pts):
        if not any(np.max(np.abs(pts[j] - p)) < tol for j in kept):
            kept.append(i)

    alive = list(kept)
    for i in kept:
        rest = [j for j in alive if j != i]
        if rest and in_convex_hull(pts[i], pts[rest], tol):
            alive = rest
    return alive
