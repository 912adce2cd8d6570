import json

import pytest

from credal_intervals.core import Frame
from credal_intervals.errors import InvalidModel, MalformedDocument, ModelError, UnknownOutcome
from credal_intervals.model import load_model, parse_event, parse_model, serialize_model

TWO_URNS = {
    "frame": ["u1r", "u1w", "u2r", "u2w"],
    "model": {"kind": "credal", "extreme_points": [[0.999, 0.001, 0, 0], [0, 0, 0.001, 0.999]]},
}
BALL_URN = {
    "frame": ["r", "w", "b"],
    "model": {
        "kind": "mass",
        "focal": [{"set": ["r"], "mass": 0.25}, {"set": ["w"], "mass": 0.25}, {"set": ["r", "b"], "mass": 0.5}],
    },
}


def _doc(frame, model):
    return json.dumps({"frame": frame, "model": model})


class TestParse:
    def test_credal(self):
        doc = parse_model(json.dumps(TWO_URNS))
        assert doc.kind == "credal"
        assert len(doc.credal_set().generators) == 2

    def test_mass(self):
        doc = parse_model(json.dumps(BALL_URN))
        assert doc.kind == "mass"
        weights = sorted(tuple(round(x, 12) for x in g.weights) for g in doc.credal_set().generators)
        assert weights == [(0.25, 0.25, 0.5), (0.75, 0.25, 0.0)]

    def test_loose_sum_is_renormalized(self):
        doc = parse_model(_doc(["a", "b"], {"kind": "credal", "extreme_points": [[0.5000004, 0.5]]}))
        assert sum(doc.extreme_points[0]) == pytest.approx(1.0, abs=1e-15)

    @pytest.mark.parametrize(
        "text, error, fragment",
        [
            ("{", MalformedDocument, "line 1"),
            ('{"frame": ["a"]}', MalformedDocument, "model"),
            (_doc(["a", "b"], {"kind": "credal", "extreme_points": [[0.5, 0.4]]}), InvalidModel, "sum"),
            (_doc(["a", "b"], {"kind": "credal", "extreme_points": [[1.5, -0.5]]}), InvalidModel, "negative"),
            (_doc(["a", "b"], {"kind": "credal", "extreme_points": [[1.0]]}), InvalidModel, "extreme_points[0]"),
            (_doc(["a", "b"], {"kind": "credal", "extreme_points": [["x", 1]]}), MalformedDocument, "[0][0]"),
            (_doc(["a", "a"], {"kind": "credal", "extreme_points": [[1, 0]]}), InvalidModel, "duplicate"),
            (_doc(["a", "b"], {"kind": "other"}), MalformedDocument, "kind"),
            (_doc(["a"], {"kind": "mass", "focal": [{"set": ["z"], "mass": 1}]}), UnknownOutcome, "focal[0]"),
            (_doc(["a"], {"kind": "mass", "focal": [{"set": [], "mass": 1}]}), InvalidModel, "empty"),
            (_doc(["a", "b"], {"kind": "mass", "focal": [{"set": ["a"], "mass": 0.5}]}), InvalidModel, "sum"),
            (_doc(["a"], {"kind": "mass", "focal": [{"set": ["a"]}]}), MalformedDocument, "mass"),
        ],
    )
    def test_errors(self, text, error, fragment):
        with pytest.raises(error) as info:
            parse_model(text)
        assert fragment in str(info.value)
        assert isinstance(info.value, ModelError)

    def test_round_trip(self):
        for raw in (TWO_URNS, BALL_URN):
            doc = parse_model(json.dumps(raw))
            assert parse_model(serialize_model(doc)) == doc

    def test_load_missing_file(self, tmp_path):
        with pytest.raises(MalformedDocument):
            load_model(tmp_path / "nope.json")

    def test_load(self, tmp_path):
        p = tmp_path / "m.json"
        p.write_text(json.dumps(BALL_URN), encoding="utf-8")
        assert load_model(p).kind == "mass"


class TestEvents:
    def test_parse(self):
        f = Frame(["r", "w", "b"])
        assert parse_event(f, "r, w").members == frozenset({"r", "w"})

    def test_unknown(self):
        with pytest.raises(UnknownOutcome):
            parse_event(Frame(["r"]), "x")

    def test_empty(self):
        with pytest.raises(MalformedDocument):
            parse_event(Frame(["r"]), " , ")
