"""File export for stage bundles: sampled CSV/JSON tables and SVG drawings.

The SVG output is deliberately plain: one polyline per channel plus small
circles at the stage's data points, drawn in data coordinates inside a
scale(1,-1) group so the y axis points up. Coordinates are written with
repr(), so parsing an endpoint back gives the exact float that was sampled.
"""

from __future__ import annotations

import json
from pathlib import Path

from .bundle import FuzzyCurveBundle, Stage, stage_data
from .bspline import eval_curve, sample_params
from .points import CrispPoint, Dataset

STAGE_STEMS = {
    Stage.FUZZY: "stage_a_fuzzy",
    Stage.ALPHA_CUT: "stage_b_alpha_cut",
    Stage.REDUCED: "stage_c_reduced",
    Stage.DEFUZZIFIED: "stage_d_defuzzified",
}

CHANNEL_COLORS = {
    "ll": "#9ecae1",
    "l": "#6baed6",
    "rl": "#3182bd",
    "crisp": "#000000",
    "lr": "#fd8d3c",
    "r": "#e6550d",
    "rr": "#a63603",
    "left": "#3182bd",
    "right": "#e6550d",
    "defuzzified": "#6a51a3",
}


def sample_rows(bundle: FuzzyCurveBundle, n_samples: int) -> list[tuple[float, str, float, float]]:
    """(t, channel, x, y) rows, channel-major, n_samples per channel."""
    rows = []
    for name in bundle.channel_names():
        curve = bundle.channel(name)
        for t in sample_params(curve, n_samples):
            p = eval_curve(curve, t)
            rows.append((t, name, p.x, p.y))
    return rows


def write_samples_csv(bundle: FuzzyCurveBundle, n_samples: int, path) -> None:
    lines = ["t,channel,x,y"]
    lines += [f"{t!r},{name},{x!r},{y!r}" for t, name, x, y in sample_rows(bundle, n_samples)]
    Path(path).write_text("\n".join(lines) + "\n")


def write_samples_json(bundle: FuzzyCurveBundle, n_samples: int, path) -> None:
    doc = {
        "stage": bundle.stage.value,
        "alpha": bundle.alpha,
        "degree": bundle.knots.degree,
        "n_samples": n_samples,
        "rows": [
            {"t": t, "channel": name, "x": x, "y": y}
            for t, name, x, y in sample_rows(bundle, n_samples)
        ],
    }
    Path(path).write_text(json.dumps(doc, indent=2) + "\n")


def _bounds(points: list[CrispPoint]) -> tuple[float, float, float, float]:
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    return min(xs), min(ys), max(xs), max(ys)


def write_svg(
    bundle: FuzzyCurveBundle,
    markers: dict[str, list[CrispPoint]],
    n_samples: int,
    path,
) -> None:
    """Draw each channel curve as a polyline with circles at its data points."""
    sampled = {
        name: [eval_curve(bundle.channel(name), t)
               for t in sample_params(bundle.channel(name), n_samples)]
        for name in bundle.channel_names()
    }
    everything = [p for pts in sampled.values() for p in pts]
    everything += [p for pts in markers.values() for p in pts]
    xmin, ymin, xmax, ymax = _bounds(everything)
    pad_x = 0.05 * (xmax - xmin) or 1.0
    pad_y = 0.05 * (ymax - ymin) or 1.0
    width = (xmax - xmin) + 2 * pad_x
    height = (ymax - ymin) + 2 * pad_y
    # the scale(1,-1) group renders (x, y) at (x, -y)
    view = f"{xmin - pad_x:g} {-(ymax + pad_y):g} {width:g} {height:g}"
    stroke = max(width, height) / 250
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="720" height="{720 * height / width:g}" viewBox="{view}">',
        f'  <desc>stage {bundle.stage.value}, {n_samples} samples per channel</desc>',
        '  <g transform="scale(1,-1)" fill="none">',
    ]
    for name, pts in sampled.items():
        coords = " ".join(f"{p.x!r},{p.y!r}" for p in pts)
        color = CHANNEL_COLORS[name]
        parts.append(
            f'    <polyline class="channel channel-{name}" stroke="{color}" '
            f'stroke-width="{stroke:g}" points="{coords}"/>'
        )
    for name, pts in markers.items():
        color = CHANNEL_COLORS[name]
        for p in pts:
            parts.append(
                f'    <circle class="marker marker-{name}" fill="{color}" '
                f'cx="{p.x!r}" cy="{p.y!r}" r="{1.8 * stroke:g}"/>'
            )
    parts += ["  </g>", "</svg>"]
    Path(path).write_text("\n".join(parts) + "\n")


def export_bundles(
    dataset: Dataset,
    bundles: dict[Stage, FuzzyCurveBundle],
    out_dir,
    n_samples: int = 200,
    fmt: str = "csv",
) -> list[Path]:
    """Write one SVG per stage, plus one sample table per stage unless
    fmt == "svg" (drawings only); returns the paths written."""
    if fmt not in ("csv", "json", "svg"):
        raise ValueError(f"unknown sample format {fmt!r} (choose csv, json, or svg)")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for stage, bundle in bundles.items():
        markers = stage_data(dataset, stage, bundle.alpha if bundle.alpha is not None else 0.0)
        stem = STAGE_STEMS[stage]
        svg_path = out / f"{stem}.svg"
        write_svg(bundle, markers, n_samples, svg_path)
        written.append(svg_path)
        if fmt == "svg":
            continue
        table_path = out / f"{stem}.{fmt}"
        if fmt == "csv":
            write_samples_csv(bundle, n_samples, table_path)
        else:
            write_samples_json(bundle, n_samples, table_path)
        written.append(table_path)
    return written
