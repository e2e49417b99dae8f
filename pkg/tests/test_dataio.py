"""Dataset JSON loading, saving, and error reporting."""

import json

import pytest

from fuzzycurve import (
    DatasetFormatError,
    ValidationError,
    dataset_from_json,
    load_dataset,
    load_worked_example,
    save_dataset,
)
from fuzzycurve.dataio import dataset_to_obj, worked_example_json
from fuzzycurve.points import CrispPoint

from conftest import random_dataset
import numpy as np


def test_worked_example_contents():
    ds = load_worked_example()
    assert len(ds) == 4
    assert ds.label == "worked_example"
    assert ds.points[0].crisp == CrispPoint(-5.0, 0.0)
    assert ds.points[2].rr == CrispPoint(3.0, -27.0)
    assert json.loads(worked_example_json()) == dataset_to_obj(ds)


def test_round_trip(tmp_path):
    ds = random_dataset(np.random.default_rng(2), 5)
    path = tmp_path / "ds.json"
    save_dataset(ds, path)
    back = load_dataset(path)
    assert back.points == ds.points
    assert back.label == "ds"


def test_load_reports_json_position(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('[{"ll": [0, 0],]')
    with pytest.raises(DatasetFormatError) as exc:
        load_dataset(path)
    msg = str(exc.value)
    assert "line 1" in msg and "column" in msg and str(path) in msg


def test_top_level_must_be_list():
    with pytest.raises(DatasetFormatError, match="top level"):
        dataset_from_json('{"points": []}')


def test_missing_keys_are_named():
    row = {"ll": [0, 0], "l": [1, 0], "crisp": [2, 0]}
    with pytest.raises(DatasetFormatError) as exc:
        dataset_from_json(json.dumps([row]))
    msg = str(exc.value)
    assert "point 0" in msg
    assert "rl" in msg and "lr" in msg and "rr" in msg


def test_unknown_keys_rejected():
    ds = load_worked_example()
    rows = dataset_to_obj(ds)
    rows[1]["weight"] = 2
    with pytest.raises(DatasetFormatError, match="unknown keys: weight"):
        dataset_from_json(json.dumps(rows))


@pytest.mark.parametrize("value", [[0], [0, 1, 2], "pair", {"x": 0, "y": 0}, [0, True], [0, "1"]])
def test_bad_coordinate_pairs_rejected(value):
    rows = dataset_to_obj(load_worked_example())
    rows[0]["rl"] = value
    with pytest.raises(DatasetFormatError, match="channel 'rl'"):
        dataset_from_json(json.dumps(rows))


def test_point_entries_must_be_objects():
    with pytest.raises(DatasetFormatError, match="point 0: expected an object"):
        dataset_from_json('[3]')


def test_validation_on_load_is_optional(tmp_path):
    rows = dataset_to_obj(load_worked_example())
    rows[0]["ll"], rows[0]["l"] = rows[0]["l"], rows[0]["ll"]
    path = tmp_path / "swapped.json"
    path.write_text(json.dumps(rows))
    with pytest.raises(ValidationError, match=r"\(ll, l\)"):
        load_dataset(path)
    ds = load_dataset(path, validate=False)
    assert len(ds) == 4


def test_missing_file_raises_oserror(tmp_path):
    with pytest.raises(OSError):
        load_dataset(tmp_path / "absent.json")


def test_origin_appears_in_messages():
    with pytest.raises(DatasetFormatError, match="somewhere"):
        dataset_from_json("[", origin="somewhere")
