"""Lateral fuzzy data points and their structural validation.

A fuzzy data point models one uncertain 2D datum as seven ordered lateral
positions around a crisp point: three on the left footprint (ll, l, rl),
the crisp point itself, and three on the right footprint (lr, r, rr).
Membership grades are never stored; both membership bounds peak at 1 over
the crisp point, so the seven positions fully determine the datum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

CHANNELS = ("ll", "l", "rl", "crisp", "lr", "r", "rr")

LEFT_CHANNELS = ("ll", "l", "rl")
RIGHT_CHANNELS = ("lr", "r", "rr")


@dataclass(frozen=True)
class CrispPoint:
    """A plain 2D point in model units."""

    x: float
    y: float

    def as_tuple(self) -> tuple[float, float]:
        return (self.x, self.y)

    def is_finite(self) -> bool:
        return math.isfinite(self.x) and math.isfinite(self.y)


@dataclass(frozen=True)
class FuzzyDataPoint:
    """One uncertain datum: seven lateral 2D positions around a crisp point.

    Per coordinate the 7-sequence (ll, l, rl, crisp, lr, r, rr) must be
    monotone (non-decreasing or non-increasing; constant counts as both).
    """

    ll: CrispPoint
    l: CrispPoint
    rl: CrispPoint
    crisp: CrispPoint
    lr: CrispPoint
    r: CrispPoint
    rr: CrispPoint

    def channel(self, name: str) -> CrispPoint:
        if name not in CHANNELS:
            raise KeyError(f"unknown channel {name!r}")
        return getattr(self, name)

    def channel_points(self) -> tuple[CrispPoint, ...]:
        """The seven points in lateral order."""
        return tuple(getattr(self, name) for name in CHANNELS)

    def reversed(self) -> "FuzzyDataPoint":
        """The same datum with the lateral order flipped end to end."""
        pts = self.channel_points()[::-1]
        return FuzzyDataPoint(*pts)


@dataclass(frozen=True)
class Dataset:
    """An ordered collection of fuzzy data points to be modeled as curves."""

    points: tuple[FuzzyDataPoint, ...]
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))

    def __len__(self) -> int:
        return len(self.points)

    def crisp_points(self) -> tuple[CrispPoint, ...]:
        return tuple(p.crisp for p in self.points)

    def channel_points(self, name: str) -> tuple[CrispPoint, ...]:
        return tuple(p.channel(name) for p in self.points)


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a structural check: empty violations means ok."""

    violations: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        return "\n".join(self.violations)


class ValidationError(ValueError):
    """Raised when an operation requires a valid input and got a report instead."""

    def __init__(self, report: ValidationReport, context: str = ""):
        self.report = report
        head = f"{context}: " if context else ""
        super().__init__(head + "; ".join(report.violations))


def _monotone_violations(values, labels, coord: str) -> list[str]:
    """Adjacent pairs breaking monotonicity, for the closer of the two directions."""
    increasing_bad = []
    decreasing_bad = []
    for a, b, la, lb in zip(values, values[1:], labels, labels[1:]):
        if a > b:
            increasing_bad.append((la, lb))
        if a < b:
            decreasing_bad.append((la, lb))
    if not increasing_bad or not decreasing_bad:
        return []
    bad = increasing_bad if len(increasing_bad) <= len(decreasing_bad) else decreasing_bad
    return [f"{coord}: order breaks at pair ({la}, {lb})" for la, lb in bad]


def validate_point(p: FuzzyDataPoint) -> ValidationReport:
    """Check finiteness and per-coordinate lateral monotonicity.

    Violations name the coordinate and the offending adjacent channel pair.
    """
    violations: list[str] = []
    pts = p.channel_points()
    for name, pt in zip(CHANNELS, pts):
        if not pt.is_finite():
            violations.append(f"{name}: coordinates not finite")
    if violations:
        return ValidationReport(tuple(violations))
    for coord, values in (("x", [q.x for q in pts]), ("y", [q.y for q in pts])):
        violations.extend(_monotone_violations(values, CHANNELS, coord))
    return ValidationReport(tuple(violations))


def validate_dataset(d: Dataset) -> ValidationReport:
    """Aggregate per-point reports and add dataset-level checks.

    Dataset-level violations: fewer than 2 points, and identical consecutive
    crisp points (which would break chord-length parametrization).
    """
    violations: list[str] = []
    if len(d.points) < 2:
        violations.append(f"dataset: length {len(d.points)} < 2")
    for i, p in enumerate(d.points):
        report = validate_point(p)
        violations.extend(f"point {i}: {v}" for v in report.violations)
    for i, (a, b) in enumerate(zip(d.points, d.points[1:])):
        if a.crisp == b.crisp:
            violations.append(f"points {i},{i + 1}: repeated crisp point {a.crisp.as_tuple()}")
    return ValidationReport(tuple(violations))


def require_valid_point(p: FuzzyDataPoint, context: str = "fuzzy point") -> None:
    report = validate_point(p)
    if not report.ok:
        raise ValidationError(report, context)


def require_valid_dataset(d: Dataset, context: str = "dataset") -> None:
    report = validate_dataset(d)
    if not report.ok:
        raise ValidationError(report, context)
