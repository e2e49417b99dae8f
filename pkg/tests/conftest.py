"""Shared fixtures and data generators for the test suite."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import settings, strategies as st

from fuzzycurve import CrispPoint, Dataset, FuzzyDataPoint, load_worked_example

settings.register_profile("suite", deadline=None)
settings.load_profile("suite")


@pytest.fixture
def example_dataset() -> Dataset:
    return load_worked_example()


def point_from_seqs(xs, ys) -> FuzzyDataPoint:
    """Zip two 7-sequences of coordinates into a fuzzy data point."""
    return FuzzyDataPoint(*(CrispPoint(float(x), float(y)) for x, y in zip(xs, ys)))


def _seq_around(center: float, left, right, sign: float) -> list[float]:
    left = sorted(left)
    right = sorted(right)
    return [
        center - sign * left[2],
        center - sign * left[1],
        center - sign * left[0],
        center,
        center + sign * right[0],
        center + sign * right[1],
        center + sign * right[2],
    ]


def random_valid_point(rng: np.random.Generator, cx: float, cy: float) -> FuzzyDataPoint:
    def seq(c):
        sign = 1.0 if rng.random() < 0.5 else -1.0
        return _seq_around(c, rng.uniform(0.0, 10.0, 3), rng.uniform(0.0, 10.0, 3), sign)

    return point_from_seqs(seq(cx), seq(cy))


def random_dataset(rng: np.random.Generator, n_points: int) -> Dataset:
    """Valid dataset with strictly increasing crisp x, so chords never vanish."""
    xs = np.cumsum(rng.uniform(1.0, 5.0, n_points))
    ys = rng.uniform(-50.0, 50.0, n_points)
    points = [random_valid_point(rng, x, y) for x, y in zip(xs, ys)]
    return Dataset(points=tuple(points), label="random")


_coord = st.floats(-1e3, 1e3, allow_nan=False, allow_infinity=False)
_offsets = st.lists(st.floats(0.0, 100.0, allow_nan=False), min_size=3, max_size=3)
_sign = st.sampled_from((1.0, -1.0))


@st.composite
def monotone_seqs(draw) -> list[float]:
    center = draw(_coord)
    return _seq_around(center, draw(_offsets), draw(_offsets), draw(_sign))


@st.composite
def valid_points(draw) -> FuzzyDataPoint:
    return point_from_seqs(draw(monotone_seqs()), draw(monotone_seqs()))


@st.composite
def alphas(draw) -> float:
    return draw(st.floats(0.0, 1.0, allow_nan=False))
