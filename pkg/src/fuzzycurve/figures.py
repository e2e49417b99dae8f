"""Matplotlib overview figure: the four pipeline stages on a 2x2 grid."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .bundle import STAGE_ORDER, FuzzyCurveBundle, Stage, stage_data
from .bspline import sample_curve
from .points import Dataset
from .render import CHANNEL_COLORS


def render_stage_figure(
    dataset: Dataset,
    bundles: dict[Stage, FuzzyCurveBundle],
    path,
    n_samples: int = 200,
) -> Path:
    """Save a PNG with one panel per stage; returns the path written."""
    fig, axes = plt.subplots(2, 2, figsize=(10, 8), sharex=True, sharey=True)
    for ax, stage in zip(axes.flat, STAGE_ORDER):
        bundle = bundles[stage]
        alpha = bundle.alpha if bundle.alpha is not None else 0.0
        markers = stage_data(dataset, stage, alpha)
        for name in bundle.channel_names():
            color = CHANNEL_COLORS[name]
            pts = sample_curve(bundle.channel(name), n_samples)
            ax.plot([p.x for p in pts], [p.y for p in pts], color=color, label=name)
            data = markers[name]
            ax.plot([p.x for p in data], [p.y for p in data], "o", color=color, ms=4)
        title = stage.value if bundle.alpha is None else f"{stage.value} (alpha={bundle.alpha:g})"
        ax.set_title(title)
        ax.grid(True, alpha=0.3)
    axes[0, 0].legend(fontsize=8, loc="best")
    fig.tight_layout()
    out = Path(path)
    fig.savefig(out, dpi=150)
    plt.close(fig)
    return out
