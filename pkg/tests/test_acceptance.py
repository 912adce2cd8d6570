"""Acceptance criteria, one test each.

Every test records a one-line verdict; the lines are printed in the terminal
summary of a pytest run, or directly with ``python3 tests/test_acceptance.py``.
"""

import math
import sys
import time
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from credal_intervals.conditioning import (  # noqa: E402
    dempster_interval,
    dempster_set_interval,
    possibility_condition,
    robust_interval,
    robust_interval_closed,
)
from credal_intervals.core import credal_from_mass, plausibility  # noqa: E402
from credal_intervals.fuzzy import (  # noqa: E402
    choquet_extreme_interval,
    choquet_full_interval,
    choquet_necessity,
    choquet_possibility,
    sugeno_extreme_interval,
    sugeno_full_interval,
    sugeno_necessity,
    sugeno_possibility,
    value_list,
)
from credal_intervals.models import (  # noqa: E402
    BALL_FRAME,
    ball_urn,
    ball_urn_given_red_white,
    ball_urn_modified_given_red_white,
    two_urns,
    two_urns_given_red,
    two_urns_given_red_with_midpoint,
    two_urns_perturbed_given_red,
    urn1,
    urn2,
)
from credal_intervals.oracle import (  # noqa: E402
    oracle_upper_choquet,
    oracle_upper_sugeno,
    profile_discrepancy,
)

from fixtures import worked_examples  # noqa: E402
from randmodels import all_events, random_mass  # noqa: E402

RED = two_urns_given_red().given
R, W = BALL_FRAME.event("r"), BALL_FRAME.event("w")
LN999 = math.log(999) / 998
RESULTS: dict[int, str] = {}


class Check:
    """Collects failed comparisons for one criterion."""

    def __init__(self):
        self.failures: list[str] = []
        self.count = 0

    # labels may be callables so that passing checks cost no formatting
    def close(self, label, got, expected, tol):
        self.count += 1
        if not abs(got - expected) <= tol:
            label = label() if callable(label) else label
            self.failures.append(f"{label}: {got!r} vs {expected!r} (tol {tol:g})")

    def true(self, label, cond):
        self.count += 1
        if not cond:
            self.failures.append(label() if callable(label) else label)

    def interval(self, label, iv, lo, hi, tol):
        self.close(f"{label} lower", iv.lower, lo, tol)
        self.close(f"{label} upper", iv.upper, hi, tol)


def _report(n, title, check, started):
    ok = not check.failures
    line = f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {title}  ({check.count} checks, {time.perf_counter() - started:.2f}s)"
    if not ok:
        line += "\n    " + "\n    ".join(check.failures[:10])
    RESULTS[n] = line
    print(line)
    assert ok, line


def test_criterion_01_conditioning_rules():
    t0, ck = time.perf_counter(), Check()
    c = two_urns()
    ck.interval("dempster u1", dempster_set_interval(c, urn1(), RED), 1, 1, 1e-9)
    ck.interval("dempster u2", dempster_set_interval(c, urn2(), RED), 0, 0, 1e-9)
    ck.interval("robust u1", robust_interval(c, urn1(), RED), 0, 1, 1e-9)
    ck.interval("robust u2", robust_interval(c, urn2(), RED), 0, 1, 1e-9)
    _report(1, "dempster and robust intervals on two urns", ck, t0)


def test_criterion_02_choquet_extreme_two_urns():
    t0, ck = time.perf_counter(), Check()
    w = two_urns_given_red()
    ck.interval("u1", choquet_extreme_interval(w, urn1()), 1 - 1 / 999, 1, 1e-12)
    ck.interval("u2", choquet_extreme_interval(w, urn2()), 0, 1 / 999, 1e-12)
    _report(2, "choquet-extreme on two urns", ck, t0)


def test_criterion_03_choquet_full_two_urns():
    t0, ck = time.perf_counter(), Check()
    w = two_urns_given_red()
    u1, u2 = choquet_full_interval(w, urn1()), choquet_full_interval(w, urn2())
    ck.interval("u1", u1, 1 - LN999, 1, 1e-9)
    ck.interval("u2", u2, 0, LN999, 1e-9)
    ck.close("u1 lower vs 0.9931", u1.lower, 0.9931, 5e-4)
    ck.close("u2 upper vs 0.0069", u2.upper, 0.0069, 5e-4)
    _report(3, "choquet-full on two urns", ck, t0)


def test_criterion_04_choquet_extreme_ball_urn():
    t0, ck = time.perf_counter(), Check()
    w = ball_urn_given_red_white()
    ck.interval("r", choquet_extreme_interval(w, R), 0.625, 0.75, 1e-12)
    ck.interval("w", choquet_extreme_interval(w, W), 0.25, 0.375, 1e-12)
    _report(4, "choquet-extreme on the ball urn", ck, t0)


def test_criterion_05_choquet_full_ball_urn():
    t0, ck = time.perf_counter(), Check()
    w = ball_urn_given_red_white()
    k = 0.25 * (1 + math.log(2))
    r, wh = choquet_full_interval(w, R), choquet_full_interval(w, W)
    ck.interval("r", r, 1 - k, 0.75, 1e-9)
    ck.interval("w", wh, 0.25, k, 1e-9)
    ck.close("r lower vs 0.5767", r.lower, 0.5767, 5e-4)
    ck.close("w upper vs 0.4233", wh.upper, 0.4233, 5e-4)
    _report(5, "choquet-full on the ball urn", ck, t0)


def test_criterion_06_sugeno_extreme():
    t0, ck = time.perf_counter(), Check()
    w = two_urns_given_red()
    ck.interval("u1", sugeno_extreme_interval(w, urn1()), 1 - 1 / 999, 1, 1e-12)
    ck.interval("u2", sugeno_extreme_interval(w, urn2()), 0, 1 / 999, 1e-12)
    ck.close("u1 lower vs 0.999", sugeno_extreme_interval(w, urn1()).lower, 0.999, 5e-4)
    w = ball_urn_given_red_white()
    ck.interval("r", sugeno_extreme_interval(w, R), 0.5, 0.75, 1e-12)
    ck.interval("w", sugeno_extreme_interval(w, W), 0.25, 0.5, 1e-12)
    _report(6, "sugeno-extreme on two urns and the ball urn", ck, t0)


def test_criterion_07_sugeno_full():
    t0, ck = time.perf_counter(), Check()
    w = two_urns_given_red()
    root = (-1 + math.sqrt(3993)) / 1996
    u1, u2 = sugeno_full_interval(w, urn1()), sugeno_full_interval(w, urn2())
    ck.interval("u1", u1, 1 - root, 1, 1e-9)
    ck.interval("u2", u2, 0, root, 1e-9)
    ck.close("u1 lower vs 0.9688", u1.lower, 0.9688, 5e-4)
    ck.close("u2 upper vs 0.0312", u2.upper, 0.0312, 5e-4)

    w = ball_urn_modified_given_red_white()
    h = math.sqrt(0.5)
    r, wh = sugeno_full_interval(w, R), sugeno_full_interval(w, W)
    ck.interval("modified r", r, 1 - h, 0.5, 1e-9)
    ck.interval("modified w", wh, 0.5, h, 1e-9)
    ck.interval("modified r to 4 decimals", r, 0.2929, 0.5, 5e-4)
    ck.interval("modified w to 4 decimals", wh, 0.5, 0.7071, 5e-4)

    w = ball_urn_given_red_white()
    for name, a in (("r", R), ("w", W)):
        full, ext = sugeno_full_interval(w, a), sugeno_extreme_interval(w, a)
        ck.true(f"ball urn {name}: full {full} == extreme {ext}", full.lower == ext.lower and full.upper == ext.upper)
    _report(7, "sugeno-full on two urns, the modified urn and the ball urn", ck, t0)


def test_criterion_08_perturbations():
    t0, ck = time.perf_counter(), Check()
    mid = two_urns_given_red_with_midpoint()
    ck.interval("midpoint u1", choquet_extreme_interval(mid, urn1()), 0.9985, 1, 5e-4)
    ck.interval("midpoint u2", choquet_extreme_interval(mid, urn2()), 0, 0.0015, 5e-4)

    base, pert = two_urns_given_red(), two_urns_perturbed_given_red(1e-6)
    ck.true("perturbed set keeps three generators", len(pert.generators) == 3)
    for name, a in (("u1", urn1()), ("u2", urn2())):
        bf, pf = choquet_full_interval(base, a), choquet_full_interval(pert, a)
        be, pe = choquet_extreme_interval(base, a), choquet_extreme_interval(pert, a)
        df = max(abs(bf.lower - pf.lower), abs(bf.upper - pf.upper))
        de = max(abs(be.lower - pe.lower), abs(be.upper - pe.upper))
        ck.true(f"{name}: choquet-full moves {df:.3g} >= 1e-3", df < 1e-3)
        ck.true(f"{name}: choquet-extreme moves {de:.3g} <= 4e-4", de > 4e-4)
    _report(8, "midpoint and epsilon perturbations of two urns", ck, t0)


def test_criterion_09_random_belief_functions():
    t0, ck = time.perf_counter(), Check()
    rng = np.random.default_rng(20240601)
    pairs = 0
    for trial in range(500):
        m = random_mass(rng, max_outcomes=5, max_focal=6)
        c = credal_from_mass(m)
        events = all_events(m.frame)
        for b in events:
            if not b or plausibility(m, b) <= 1e-12:
                continue
            w = possibility_condition(c, b)
            for a in events:
                pairs += 1
                tag = lambda: f"#{trial} a={a.sorted_members()} b={b.sorted_members()}"  # noqa: E731
                d = dempster_interval(m, a, b)
                rc = robust_interval_closed(m, a, b)
                rg = robust_interval(c, a, b)
                ck.true(lambda: f"{tag()} nesting", rc.lower - 1e-9 <= d.lower <= d.upper <= rc.upper + 1e-9)
                ck.close(lambda: f"{tag()} robust lower", rc.lower, rg.lower, 1e-9)
                ck.close(lambda: f"{tag()} robust upper", rc.upper, rg.upper, 1e-9)

                ce, cf = choquet_extreme_interval(w, a), choquet_full_interval(w, a)
                se, sf = sugeno_extreme_interval(w, a), sugeno_full_interval(w, a)
                for name, iv in (("ce", ce), ("cf", cf), ("se", se), ("sf", sf)):
                    ck.true(lambda: f"{tag()} {name} {iv} in {rc}", rc.lower - 1e-9 <= iv.lower and iv.upper <= rc.upper + 1e-9)
                ck.true(lambda: f"{tag()} cf {cf} contains ce {ce}", cf.contains(ce, 1e-12))
                ck.true(lambda: f"{tag()} sf {sf} contains se {se}", sf.contains(se, 1e-12))

                l = value_list(w, a)
                lc = l.complement()
                ck.close(lambda: f"{tag()} choquet duality", choquet_possibility(l) + choquet_necessity(lc), 1.0, 1e-12)
                ck.close(lambda: f"{tag()} sugeno duality", sugeno_possibility(l) + sugeno_necessity(lc), 1.0, 1e-12)
                ck.close(lambda: f"{tag()} choquet lower", ce.lower, choquet_necessity(l), 1e-12)
                ck.close(lambda: f"{tag()} sugeno lower", se.lower, sugeno_necessity(l), 1e-12)
    ck.true(f"only {pairs} event pairs", pairs > 10_000)
    _report(9, f"500 random belief functions, {pairs} event pairs", ck, t0)


def test_criterion_10_oracle_equivalence():
    t0, ck = time.perf_counter(), Check()
    n = 10**4
    tol = 2 / n
    for name, (w, events) in worked_examples().items():
        for a in events:
            na = a.complement()
            tag = f"{name} {a.sorted_members()}"
            cf, sf = choquet_full_interval(w, a), sugeno_full_interval(w, a)
            ck.close(f"{tag} choquet upper", cf.upper, oracle_upper_choquet(w, a, n, "auto"), tol)
            ck.close(f"{tag} choquet lower", cf.lower, 1 - oracle_upper_choquet(w, na, n, "auto"), tol)
            ck.close(f"{tag} sugeno upper", sf.upper, oracle_upper_sugeno(w, a, n, "auto"), tol)
            ck.close(f"{tag} sugeno lower", sf.lower, 1 - oracle_upper_sugeno(w, na, n, "auto"), tol)
            overshoot, gap = profile_discrepancy(w, a, n, "auto")
            ck.close(f"{tag} profile overshoot", overshoot, 0.0, tol)
            ck.close(f"{tag} profile gap", gap, 0.0, tol)
    _report(10, "closed forms against the oracle at resolution 10^4", ck, t0)


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    failed = 0
    for t in tests:
        try:
            t()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
