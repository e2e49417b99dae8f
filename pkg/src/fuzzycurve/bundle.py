"""Curve-level pipeline: one interpolating B-spline per lateral channel.

A bundle holds the channel curves of one modeling stage. All channels share
the parameters and knot vector computed once from the crisp data, so the
curves stay laterally synchronized at any parameter value. Because every
stage is an affine combination with position-independent coefficients and
the interpolation solve is linear in its right-hand side, the stages can be
applied directly to control points; re-solving from staged data gives the
same curves.

Stages advance strictly in order: fuzzy -> alpha-cut -> reduced -> defuzzified.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .bspline import KnotVector, ParamChoice, SplineCurve, average_knots, parametrize, solve_interpolation
from .ops import mean3, move_toward, run_point_pipeline
from .points import CHANNELS, CrispPoint, Dataset, require_valid_dataset


class Stage(enum.Enum):
    FUZZY = "fuzzy"
    ALPHA_CUT = "alpha-cut"
    REDUCED = "reduced"
    DEFUZZIFIED = "defuzzified"


STAGE_CHANNELS: dict[Stage, tuple[str, ...]] = {
    Stage.FUZZY: CHANNELS,
    Stage.ALPHA_CUT: CHANNELS,
    Stage.REDUCED: ("left", "crisp", "right"),
    Stage.DEFUZZIFIED: ("defuzzified",),
}

STAGE_ORDER = (Stage.FUZZY, Stage.ALPHA_CUT, Stage.REDUCED, Stage.DEFUZZIFIED)


class StageError(ValueError):
    """A stage transition was requested out of order."""


@dataclass(frozen=True)
class FuzzyCurveBundle:
    """Channel curves of one stage, sharing parameters and knots."""

    channels: dict[str, SplineCurve]
    params: tuple[float, ...]
    knots: KnotVector
    stage: Stage
    alpha: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "channels", dict(self.channels))
        object.__setattr__(self, "params", tuple(self.params))
        expected = STAGE_CHANNELS[self.stage]
        if tuple(self.channels) != expected:
            raise ValueError(
                f"stage {self.stage.value} needs channels {expected}, "
                f"got {tuple(self.channels)}"
            )
        for name, curve in self.channels.items():
            if curve.knots != self.knots:
                raise ValueError(f"channel {name} does not share the bundle knots")
        if (self.alpha is None) != (self.stage is Stage.FUZZY):
            raise ValueError("alpha is set exactly from the alpha-cut stage onward")

    def channel(self, name: str) -> SplineCurve:
        return self.channels[name]

    def channel_names(self) -> tuple[str, ...]:
        return tuple(self.channels)


def _require_stage(bundle: FuzzyCurveBundle, expected: Stage) -> None:
    if bundle.stage is not expected:
        raise StageError(
            f"operation requires stage {expected.value!r}, "
            f"bundle is at {bundle.stage.value!r}"
        )


def _with_control(curve: SplineCurve, control) -> SplineCurve:
    return SplineCurve(degree=curve.degree, knots=curve.knots, control=tuple(control))


def build_bundle(
    dataset: Dataset,
    degree: int = 3,
    choice: ParamChoice = ParamChoice.CHORD_LENGTH,
) -> FuzzyCurveBundle:
    """Interpolate every lateral channel against shared crisp-derived knots."""
    require_valid_dataset(dataset)
    if len(dataset) < degree + 1:
        raise ValueError(
            f"degree {degree} interpolation needs at least {degree + 1} points, "
            f"dataset has {len(dataset)}"
        )
    params = parametrize(dataset.crisp_points(), choice)
    knots = average_knots(params, degree)
    channels = {
        name: solve_interpolation(dataset.channel_points(name), params, knots)
        for name in CHANNELS
    }
    return FuzzyCurveBundle(
        channels=channels, params=tuple(params), knots=knots, stage=Stage.FUZZY
    )


def apply_alpha_cut(bundle: FuzzyCurveBundle, alpha: float) -> FuzzyCurveBundle:
    """Shrink every non-crisp channel's control polygon toward the crisp one."""
    _require_stage(bundle, Stage.FUZZY)
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    crisp = bundle.channel("crisp")
    channels = {}
    for name, curve in bundle.channels.items():
        if name == "crisp":
            channels[name] = curve
            continue
        control = [
            move_toward(v, c, alpha)
            for v, c in zip(curve.control, crisp.control)
        ]
        channels[name] = _with_control(curve, control)
    return FuzzyCurveBundle(
        channels=channels,
        params=bundle.params,
        knots=bundle.knots,
        stage=Stage.ALPHA_CUT,
        alpha=alpha,
    )


def apply_type_reduction(bundle: FuzzyCurveBundle) -> FuzzyCurveBundle:
    """Collapse each footprint's three channels into its centroid channel."""
    _require_stage(bundle, Stage.ALPHA_CUT)
    def centroid(names):
        triples = zip(*(bundle.channel(n).control for n in names))
        return [mean3(a, b, c) for a, b, c in triples]

    crisp = bundle.channel("crisp")
    channels = {
        "left": _with_control(crisp, centroid(("ll", "l", "rl"))),
        "crisp": crisp,
        "right": _with_control(crisp, centroid(("lr", "r", "rr"))),
    }
    return FuzzyCurveBundle(
        channels=channels,
        params=bundle.params,
        knots=bundle.knots,
        stage=Stage.REDUCED,
        alpha=bundle.alpha,
    )


def apply_defuzzification(bundle: FuzzyCurveBundle) -> FuzzyCurveBundle:
    """Average the reduced triple of channels into the single output curve."""
    _require_stage(bundle, Stage.REDUCED)
    control = [
        mean3(a, b, c)
        for a, b, c in zip(
            bundle.channel("left").control,
            bundle.channel("crisp").control,
            bundle.channel("right").control,
        )
    ]
    channels = {"defuzzified": _with_control(bundle.channel("crisp"), control)}
    return FuzzyCurveBundle(
        channels=channels,
        params=bundle.params,
        knots=bundle.knots,
        stage=Stage.DEFUZZIFIED,
        alpha=bundle.alpha,
    )


def run_curve_pipeline(
    dataset: Dataset,
    alpha: float,
    degree: int = 3,
    choice: ParamChoice = ParamChoice.CHORD_LENGTH,
) -> dict[Stage, FuzzyCurveBundle]:
    """Build all four stage bundles for a dataset in pipeline order."""
    fuzzy = build_bundle(dataset, degree=degree, choice=choice)
    cut = apply_alpha_cut(fuzzy, alpha)
    reduced = apply_type_reduction(cut)
    defuzzified = apply_defuzzification(reduced)
    return {
        Stage.FUZZY: fuzzy,
        Stage.ALPHA_CUT: cut,
        Stage.REDUCED: reduced,
        Stage.DEFUZZIFIED: defuzzified,
    }


def stage_data(dataset: Dataset, stage: Stage, alpha: float) -> dict[str, list[CrispPoint]]:
    """Per-channel data rows of a stage, from the point-level pipeline."""
    records = [run_point_pipeline(p, alpha) for p in dataset.points]
    if stage in (Stage.FUZZY, Stage.ALPHA_CUT):
        source = [r.source for r in records] if stage is Stage.FUZZY else [r.cut for r in records]
        return {name: [p.channel(name) for p in source] for name in CHANNELS}
    if stage is Stage.REDUCED:
        return {
            "left": [r.reduced.left for r in records],
            "crisp": [r.reduced.crisp for r in records],
            "right": [r.reduced.right for r in records],
        }
    return {"defuzzified": [r.defuzzified for r in records]}
