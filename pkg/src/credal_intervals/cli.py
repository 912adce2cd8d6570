"""Command line front end.

    credal-intervals intervals MODEL --event A --given B --method choquet-full
    credal-intervals condition MODEL --given B --method possibility
    credal-intervals profile   MODEL --event A --given B --resolution 1000
    credal-intervals compare   MODEL --event A --given B
    credal-intervals check     MODEL --event A --given B --resolution 10000

Exit codes: 0 success, 1 failed check, 2 bad input, 3 conditioning on an
event of zero upper probability.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from .conditioning import (
    DEFAULT_RESOLUTION,
    dempster_condition,
    dempster_interval,
    dempster_set_interval,
    event_profile,
    possibility_condition,
    robust_condition,
    robust_interval,
)
from .core import CredalSet, Event, UncertaintyInterval
from .errors import ConditioningImpossible, ModelError, ResolutionTooHigh
from .fuzzy import (
    choquet_extreme_interval,
    choquet_full_interval,
    sugeno_extreme_interval,
    sugeno_full_interval,
)
from .model import ModelDocument, load_model, parse_event
from .oracle import oracle_upper_choquet, oracle_upper_sugeno, profile_discrepancy

METHODS = ["dempster", "robust", "choquet-extreme", "choquet-full", "sugeno-extreme", "sugeno-full"]

_INTEGRALS: dict[str, Callable] = {
    "choquet-extreme": choquet_extreme_interval,
    "choquet-full": choquet_full_interval,
    "sugeno-extreme": sugeno_extreme_interval,
    "sugeno-full": sugeno_full_interval,
}


def interval(c: CredalSet, a: Event, b: Event, method: str) -> UncertaintyInterval:
    """Uncertainty interval for ``a`` given ``b`` by one of :data:`METHODS`."""
    if method == "dempster":
        return dempster_set_interval(c, a, b)
    if method == "robust":
        return robust_interval(c, a, b)
    if method in _INTEGRALS:
        return _INTEGRALS[method](possibility_condition(c, b), a)
    raise ValueError(f"unknown method {method!r}")


def fmt(x: float) -> str:
    return f"{x:.10g}"


def _num(x: float) -> float:
    return float(fmt(x))


def _table(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in [header] + rows]
    return "\n".join(lines) + "\n"


def _csv(header: list[str], rows: list[list[str]]) -> str:
    return "\n".join(",".join(r) for r in [header] + rows) + "\n"


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _events(doc: ModelDocument, args, need_event: bool = True):
    f = doc.frame_obj
    a = parse_event(f, args.event, "event") if need_event else None
    b = parse_event(f, args.given, "given") if args.given else f.universe
    return a, b


def cmd_intervals(doc: ModelDocument, args) -> tuple[str, int]:
    a, b = _events(doc, args)
    iv = interval(doc.credal_set(), a, b, args.method)
    if args.output == "json":
        return _json({"lower": _num(iv.lower), "upper": _num(iv.upper), "method": args.method}), 0
    header, rows = ["method", "lower", "upper"], [[args.method, fmt(iv.lower), fmt(iv.upper)]]
    return (_csv if args.output == "csv" else _table)(header, rows), 0


def cmd_condition(doc: ModelDocument, args) -> tuple[str, int]:
    _, b = _events(doc, args, need_event=False)
    c = doc.credal_set()
    labels = list(doc.frame)
    if args.method == "possibility":
        w = possibility_condition(c, b)
        gens = [
            {
                "weights": {o: _num(x) for o, x in zip(labels, g.weights)},
                "total": _num(r),
                "possibility": _num(p),
            }
            for g, r, p in zip(w.generators, w.totals, w.possibilities)
        ]
    else:
        cond = dempster_condition(c, b) if args.method == "dempster" else robust_condition(c, b)
        gens = [{"weights": {o: _num(x) for o, x in zip(labels, g.weights)}} for g in cond.generators]

    if args.output == "json":
        return _json({"method": args.method, "given": b.sorted_members(), "generators": gens}), 0
    header = labels + (["total", "possibility"] if args.method == "possibility" else [])
    rows = []
    for g in gens:
        row = [fmt(g["weights"][o]) for o in labels]
        if "total" in g:
            row += [fmt(g["total"]), fmt(g["possibility"])]
        rows.append(row)
    return (_csv if args.output == "csv" else _table)(header, rows), 0


def cmd_profile(doc: ModelDocument, args) -> tuple[str, int]:
    a, b = _events(doc, args)
    w = possibility_condition(doc.credal_set(), b)
    prof = event_profile(w, a, args.resolution)
    rows = sorted([(x, p, 0) for x, p in prof.samples] + [(x, p, 1) for x, p in prof.anchors])
    if args.output == "json":
        return _json({
            "event": a.sorted_members(),
            "given": b.sorted_members(),
            "anchors": [[_num(x), _num(p)] for x, p in prof.anchors],
            "samples": [[_num(x), _num(p)] for x, p in prof.samples],
        }), 0
    return _csv(["x", "pi", "anchor"], [[fmt(x), fmt(p), str(k)] for x, p, k in rows]), 0


def compare_rows(doc: ModelDocument, a: Event, b: Event) -> list[tuple[str, UncertaintyInterval]]:
    c = doc.credal_set()
    rows = []
    for method in METHODS:
        rows.append((method, interval(c, a, b, method)))
        if method == "dempster" and doc.kind == "mass":
            rows.append(("dempster-closed", dempster_interval(doc.mass_assignment(), a, b)))
    return rows


def cmd_compare(doc: ModelDocument, args) -> tuple[str, int]:
    a, b = _events(doc, args)
    rows = compare_rows(doc, a, b)
    if args.output == "json":
        return _json([{"method": m, "lower": _num(iv.lower), "upper": _num(iv.upper)} for m, iv in rows]), 0
    table = [[m, fmt(iv.lower), fmt(iv.upper)] for m, iv in rows]
    return (_csv if args.output == "csv" else _table)(["method", "lower", "upper"], table), 0


def check_rows(
    doc: ModelDocument, a: Event, b: Event, resolution: int, sampler: str = "auto"
) -> list[tuple[str, float, float]]:
    """(quantity, closed form, oracle) triples for the whole-set extractors."""
    w = possibility_condition(doc.credal_set(), b)
    na = a.complement()
    cf = choquet_full_interval(w, a)
    sf = sugeno_full_interval(w, a)
    overshoot, gap = profile_discrepancy(w, a, resolution, sampler)
    return [
        ("choquet-full upper", cf.upper, oracle_upper_choquet(w, a, resolution, sampler)),
        ("choquet-full lower", cf.lower, 1 - oracle_upper_choquet(w, na, resolution, sampler)),
        ("sugeno-full upper", sf.upper, oracle_upper_sugeno(w, a, resolution, sampler)),
        ("sugeno-full lower", sf.lower, 1 - oracle_upper_sugeno(w, na, resolution, sampler)),
        ("profile overshoot", 0.0, overshoot),
        ("profile gap", 0.0, gap),
    ]


def cmd_check(doc: ModelDocument, args) -> tuple[str, int]:
    a, b = _events(doc, args)
    rows = check_rows(doc, a, b, args.resolution, args.sampler)
    limit = 2 / args.resolution + 1e-9
    ok = all(abs(x - y) < limit for _, x, y in rows)
    if args.output == "json":
        out = {
            "resolution": args.resolution,
            "sampler": args.sampler,
            "limit": _num(limit),
            "pass": ok,
            "rows": [
                {"quantity": q, "closed_form": _num(x), "oracle": _num(y), "difference": _num(abs(x - y))}
                for q, x, y in rows
            ],
        }
        return _json(out), 0 if ok else 1
    table = [[q, fmt(x), fmt(y), fmt(abs(x - y)), "ok" if abs(x - y) < limit else "FAIL"] for q, x, y in rows]
    text = _table(["quantity", "closed-form", "oracle", "difference", "status"], table)
    text += f"limit {fmt(limit)}: {'pass' if ok else 'FAIL'}\n"
    return text, 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="credal-intervals",
        description="Condition credal sets and extract uncertainty intervals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, event=True, method=None, resolution=None, outputs=("json",)):
        p = sub.add_parser(name, help=help)
        p.add_argument("model", help="model file (JSON)")
        if event:
            p.add_argument("--event", required=True, help="comma-separated outcome labels")
        p.add_argument("--given", default=None, help="comma-separated labels (default: whole frame)")
        if method:
            choices, default = method
            p.add_argument("--method", choices=choices, default=default, required=default is None)
        if resolution:
            p.add_argument("--resolution", type=int, default=resolution)
        p.add_argument("--output", choices=outputs, default=outputs[0])
        p.set_defaults(func=func)
        return p

    add("intervals", cmd_intervals, "interval for one method", method=(METHODS, None),
        outputs=("json", "table", "csv"))
    add("condition", cmd_condition, "conditioned generators", event=False,
        method=(["dempster", "robust", "possibility"], "possibility"), outputs=("json", "table", "csv"))
    add("profile", cmd_profile, "possibility profile of P(event | given)",
        resolution=DEFAULT_RESOLUTION, outputs=("csv", "json"))
    add("compare", cmd_compare, "all methods side by side", outputs=("table", "json", "csv"))
    check = add("check", cmd_check, "closed forms against the brute-force oracle",
                resolution=10_000, outputs=("table", "json"))
    check.add_argument("--sampler", choices=["auto", "grid", "edges"], default="auto",
                       help="grid: whole simplex grid; edges: generator pairs only; "
                            "auto: grid for up to two generators, edges beyond")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "resolution", 1) < 1:
        print("error: --resolution must be a positive integer", file=sys.stderr)
        return 2
    try:
        doc = load_model(args.model)
        text, code = args.func(doc, args)
    except ConditioningImpossible as e:
        print(f"error: conditioning impossible: {e}", file=sys.stderr)
        return 3
    except ResolutionTooHigh as e:
        print(f"error: ResolutionTooHigh: {e}", file=sys.stderr)
        return 2
    except ModelError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: invalid model: {e}", file=sys.stderr)
        return 2
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
