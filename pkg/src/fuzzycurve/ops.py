"""Point-level pipeline stages: alpha-cut, type-reduction, defuzzification.

Each stage is a fixed affine combination applied per coordinate:

  alpha-cut      v  ->  (1 - alpha) * v + alpha * crisp        (lateral points,
                 clamped so rounding never crosses the crisp point)
  type-reduce    left  = mean(ll, l, rl),  right = mean(lr, r, rr)
  defuzzify      mean(left, crisp, right)

All operations are pure and preserve lateral monotonicity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .points import (
    CrispPoint,
    FuzzyDataPoint,
    LEFT_CHANNELS,
    RIGHT_CHANNELS,
    require_valid_point,
)


@dataclass(frozen=True)
class AlphaCutPoint(FuzzyDataPoint):
    """A fuzzy data point after its footprints were shrunk toward crisp."""

    alpha: float = 0.0


@dataclass(frozen=True)
class ReducedPoint:
    """Footprint centroids around the crisp point, one per side."""

    left: CrispPoint
    crisp: CrispPoint
    right: CrispPoint
    alpha: float


@dataclass(frozen=True)
class PipelineRecord:
    """The three stage outputs for one point at a fixed alpha."""

    source: FuzzyDataPoint
    cut: AlphaCutPoint
    reduced: ReducedPoint
    defuzzified: CrispPoint

    @property
    def alpha(self) -> float:
        return self.cut.alpha


def _check_alpha(alpha: float) -> None:
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")


def move_toward(v: CrispPoint, target: CrispPoint, alpha: float) -> CrispPoint:
    # (1 - alpha) * v + alpha * target; both footprint directions reduce to
    # this one affine form, and it is exact at alpha = 0 and alpha = 1.
    # The rounded sum can land an ulp outside [v, target] when the two are
    # very close, which would put a lateral value on the wrong side of the
    # crisp point, so the combination is clamped to that interval.
    def blend(a: float, b: float) -> float:
        out = (1.0 - alpha) * a + alpha * b
        lo, hi = (a, b) if a <= b else (b, a)
        return min(max(out, lo), hi)

    return CrispPoint(blend(v.x, target.x), blend(v.y, target.y))


def mean3(a: CrispPoint, b: CrispPoint, c: CrispPoint) -> CrispPoint:
    return CrispPoint((a.x + b.x + c.x) / 3.0, (a.y + b.y + c.y) / 3.0)


def alpha_cut(p: FuzzyDataPoint, alpha: float) -> AlphaCutPoint:
    """Shrink every lateral point toward the crisp point by factor alpha.

    At alpha = 0 the point is returned unchanged; at alpha = 1 all seven
    positions collapse onto the crisp point.
    """
    _check_alpha(alpha)
    require_valid_point(p)
    return AlphaCutPoint(
        ll=move_toward(p.ll, p.crisp, alpha),
        l=move_toward(p.l, p.crisp, alpha),
        rl=move_toward(p.rl, p.crisp, alpha),
        crisp=p.crisp,
        lr=move_toward(p.lr, p.crisp, alpha),
        r=move_toward(p.r, p.crisp, alpha),
        rr=move_toward(p.rr, p.crisp, alpha),
        alpha=alpha,
    )


def type_reduce(a: AlphaCutPoint) -> ReducedPoint:
    """Collapse each 3-point footprint to its centroid (componentwise mean)."""
    require_valid_point(a, "alpha-cut point")
    left = mean3(*(a.channel(name) for name in LEFT_CHANNELS))
    right = mean3(*(a.channel(name) for name in RIGHT_CHANNELS))
    return ReducedPoint(left=left, crisp=a.crisp, right=right, alpha=a.alpha)


def defuzzify(r: ReducedPoint) -> CrispPoint:
    """Collapse the reduced triple to a single crisp point by averaging."""
    return mean3(r.left, r.crisp, r.right)


def run_point_pipeline(p: FuzzyDataPoint, alpha: float) -> PipelineRecord:
    """Apply the three stages in sequence and return all intermediate results."""
    cut = alpha_cut(p, alpha)
    reduced = type_reduce(cut)
    return PipelineRecord(
        source=p,
        cut=cut,
        reduced=reduced,
        defuzzified=defuzzify(reduced),
    )
