"""JSON model documents.

A document names the frame and gives either the extreme points of a credal
set or the focal elements of a mass assignment::

    {"frame": ["r", "w", "b"],
     "model": {"kind": "mass",
               "focal": [{"set": ["r"], "mass": 0.25},
                         {"set": ["w"], "mass": 0.25},
                         {"set": ["r", "b"], "mass": 0.5}]}}

    {"frame": ["a", "b"],
     "model": {"kind": "credal", "extreme_points": [[1, 0], [0.5, 0.5]]}}
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

from .core import CredalSet, Distribution, Event, Frame, MassAssignment, credal_from_mass, extreme_filter
from .errors import InvalidModel, MalformedDocument, UnknownOutcome

PARSE_TOL = 1e-6


@dataclass(frozen=True)
class ModelDocument:
    frame: tuple[str, ...]
    kind: str
    extreme_points: tuple[tuple[float, ...], ...] = ()
    focal: tuple[tuple[tuple[str, ...], float], ...] = ()

    @cached_property
    def frame_obj(self) -> Frame:
        return Frame(self.frame)

    def mass_assignment(self) -> MassAssignment | None:
        if self.kind != "mass":
            return None
        f = self.frame_obj
        return MassAssignment(f, tuple((Event(f, frozenset(s)), v) for s, v in self.focal))

    def credal_set(self) -> CredalSet:
        if self.kind == "mass":
            return credal_from_mass(self.mass_assignment())
        f = self.frame_obj
        return extreme_filter([Distribution(f, p) for p in self.extreme_points])

    def to_json(self) -> dict:
        if self.kind == "mass":
            model = {"kind": "mass", "focal": [{"set": list(s), "mass": v} for s, v in self.focal]}
        else:
            model = {"kind": "credal", "extreme_points": [list(p) for p in self.extreme_points]}
        return {"frame": list(self.frame), "model": model}


def _number(x, where: str) -> float:
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise MalformedDocument(f"{where}: expected a number, got {json.dumps(x)}")
    x = float(x)
    if not math.isfinite(x):
        raise InvalidModel(f"{where}: {x} is not finite")
    return x


def _require(obj, key: str, typ, where: str):
    if not isinstance(obj, dict) or key not in obj:
        raise MalformedDocument(f"{where}: missing field {key!r}")
    val = obj[key]
    if not isinstance(val, typ):
        raise MalformedDocument(f"{where}.{key}: expected {typ.__name__}")
    return val


def parse_model(text: str) -> ModelDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedDocument(f"line {e.lineno}, column {e.colno}: {e.msg}") from None

    frame = _require(raw, "frame", list, "document")
    if not frame:
        raise InvalidModel("frame: needs at least one outcome")
    for i, o in enumerate(frame):
        if not isinstance(o, str) or not o:
            raise MalformedDocument(f"frame[{i}]: labels must be non-empty strings")
    if len(set(frame)) != len(frame):
        raise InvalidModel("frame: duplicate outcome labels")
    labels = set(frame)

    model = _require(raw, "model", dict, "document")
    kind = _require(model, "kind", str, "model")

    if kind == "credal":
        pts = _require(model, "extreme_points", list, "model")
        if not pts:
            raise InvalidModel("model.extreme_points: needs at least one point")
        out = []
        for i, p in enumerate(pts):
            where = f"model.extreme_points[{i}]"
            if not isinstance(p, list):
                raise MalformedDocument(f"{where}: expected a list of weights")
            if len(p) != len(frame):
                raise InvalidModel(f"{where}: has {len(p)} weights, frame has {len(frame)} outcomes")
            w = [_number(x, f"{where}[{j}]") for j, x in enumerate(p)]
            if any(x < 0 for x in w):
                raise InvalidModel(f"{where}: negative weight")
            s = math.fsum(w)
            if abs(s - 1.0) > PARSE_TOL:
                raise InvalidModel(f"{where}: weights sum to {s:.10g}, not 1")
            out.append(tuple(x / s for x in w))
        return ModelDocument(tuple(frame), "credal", extreme_points=tuple(out))

    if kind == "mass":
        focal = _require(model, "focal", list, "model")
        if not focal:
            raise InvalidModel("model.focal: needs at least one focal element")
        out = []
        seen = set()
        for i, item in enumerate(focal):
            where = f"model.focal[{i}]"
            members = _require(item, "set", list, where)
            mass = _number(_require(item, "mass", (int, float), where), f"{where}.mass")
            for o in members:
                if o not in labels:
                    raise UnknownOutcome(f"{where}.set: {json.dumps(o)} is not in the frame")
            key = frozenset(members)
            if not key:
                raise InvalidModel(f"{where}.set: focal elements cannot be empty")
            if key in seen:
                raise InvalidModel(f"{where}.set: duplicate focal element")
            seen.add(key)
            if not 0 < mass <= 1 + PARSE_TOL:
                raise InvalidModel(f"{where}.mass: {mass} outside (0, 1]")
            ordered = tuple(o for o in frame if o in key)
            out.append((ordered, mass))
        s = math.fsum(v for _, v in out)
        if abs(s - 1.0) > PARSE_TOL:
            raise InvalidModel(f"model.focal: masses sum to {s:.10g}, not 1")
        out = [(k, v / s) for k, v in out]
        return ModelDocument(tuple(frame), "mass", focal=tuple(out))

    raise MalformedDocument(f"model.kind: expected 'credal' or 'mass', got {kind!r}")


def serialize_model(doc: ModelDocument) -> str:
    return json.dumps(doc.to_json(), indent=2)


def load_model(path: str | Path) -> ModelDocument:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise MalformedDocument(f"cannot read {path}: {e.strerror}") from None
    except UnicodeDecodeError:
        raise MalformedDocument(f"{path} is not UTF-8 text") from None
    return parse_model(text)


def parse_event(frame: Frame, text: str, option: str = "event") -> Event:
    """Comma-separated labels, e.g. ``"u1r,u1w"``."""
    labels = [s.strip() for s in text.split(",") if s.strip()]
    if not labels:
        raise MalformedDocument(f"--{option}: no outcome labels given")
    for o in labels:
        if o not in frame.index:
            raise UnknownOutcome(f"--{option}: {o!r} is not in the frame {list(frame.outcomes)}")
    return Event(frame, frozenset(labels))
