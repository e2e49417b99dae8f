"""Dataset JSON I/O and the bundled worked example.

A dataset file is a JSON list of point objects. Each object carries exactly
the seven channel keys (ll, l, rl, crisp, lr, r, rr), each a two-element
array of numbers. Example entry:

    {"ll": [-12, 0], "l": [-11, 0], "rl": [-9, 0], "crisp": [-5, 0],
     "lr": [3, 0], "r": [6, 0], "rr": [9, 0]}
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .points import CHANNELS, CrispPoint, Dataset, FuzzyDataPoint, require_valid_dataset


class DatasetFormatError(ValueError):
    """The file is not valid JSON or does not have the dataset shape."""


def _coerce_pair(value, where: str) -> CrispPoint:
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise DatasetFormatError(f"{where}: expected a two-element array, got {value!r}")
    coords = []
    for c in value:
        if isinstance(c, bool) or not isinstance(c, (int, float)):
            raise DatasetFormatError(f"{where}: coordinate {c!r} is not a number")
        coords.append(float(c))
    return CrispPoint(*coords)


def _point_from_obj(obj, where: str) -> FuzzyDataPoint:
    if not isinstance(obj, dict):
        raise DatasetFormatError(f"{where}: expected an object, got {type(obj).__name__}")
    missing = [name for name in CHANNELS if name not in obj]
    if missing:
        raise DatasetFormatError(f"{where}: missing channel keys: {', '.join(missing)}")
    unknown = sorted(set(obj) - set(CHANNELS))
    if unknown:
        raise DatasetFormatError(f"{where}: unknown keys: {', '.join(unknown)}")
    return FuzzyDataPoint(
        **{name: _coerce_pair(obj[name], f"{where}, channel {name!r}") for name in CHANNELS}
    )


def dataset_from_json(text: str, origin: str = "dataset", label: str = "") -> Dataset:
    """Parse dataset JSON text; origin names the source in error messages."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise DatasetFormatError(
            f"{origin}: invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}"
        ) from e
    if not isinstance(raw, list):
        raise DatasetFormatError(
            f"{origin}: top level must be a list of point objects, "
            f"got {type(raw).__name__}"
        )
    points = [_point_from_obj(obj, f"{origin}: point {i}") for i, obj in enumerate(raw)]
    return Dataset(points=tuple(points), label=label)


def load_dataset(path, validate: bool = True) -> Dataset:
    """Load a dataset file, optionally checking the structural invariants."""
    p = Path(path)
    dataset = dataset_from_json(p.read_text(), origin=str(p), label=p.stem)
    if validate:
        require_valid_dataset(dataset, context=str(p))
    return dataset


def dataset_to_obj(dataset: Dataset) -> list[dict]:
    return [
        {name: list(p.channel(name).as_tuple()) for name in CHANNELS}
        for p in dataset.points
    ]


def save_dataset(dataset: Dataset, path) -> None:
    """Write a dataset as indented JSON with a trailing newline."""
    Path(path).write_text(json.dumps(dataset_to_obj(dataset), indent=2) + "\n")


def worked_example_json() -> str:
    """Raw JSON text of the bundled example dataset."""
    return resources.files(__package__).joinpath("data/worked_example.json").read_text()


def load_worked_example() -> Dataset:
    """The bundled example dataset: four points with distinctly shaped footprints."""
    return dataset_from_json(
        worked_example_json(), origin="worked example", label="worked_example"
    )
