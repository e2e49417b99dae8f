"""Crisp B-spline machinery: parametrization, clamped knots, basis, solve, eval.

Global curve interpolation in the classical form: choose parameters for the
data, build a clamped knot vector by knot averaging (which keeps the
collocation matrix nonsingular for strictly increasing parameters), solve
the square collocation system for the control points, and evaluate with
de Boor's algorithm.

The final knot span is treated as closed, so evaluation and basis queries
at the last knot return the values one would expect from the limit from
the left (the last basis function equals 1 there).
"""

from __future__ import annotations

import bisect
import enum
import math
from dataclasses import dataclass

import numpy as np

from .points import CrispPoint

PIVOT_TOL = 1e-12


class ParamChoice(enum.Enum):
    """Parametrization rule used to place data along the curve parameter."""

    UNIFORM = "uniform"
    CHORD_LENGTH = "chord-length"
    CENTRIPETAL = "centripetal"

    @classmethod
    def from_name(cls, name: str) -> "ParamChoice":
        for member in cls:
            if member.value == name:
                return member
        names = ", ".join(m.value for m in cls)
        raise ValueError(f"unknown parametrization {name!r} (choose from: {names})")


class DegenerateChordError(ValueError):
    """A zero-length chord makes the chosen parametrization collapse."""


class SolverError(ArithmeticError):
    """The collocation system could not be eliminated safely."""


@dataclass(frozen=True)
class KnotVector:
    """A clamped, non-decreasing knot vector for a given spline degree."""

    degree: int
    knots: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "knots", tuple(float(t) for t in self.knots))
        d = self.degree
        if d < 1:
            raise ValueError(f"degree must be >= 1, got {d}")
        if len(self.knots) < 2 * (d + 1):
            raise ValueError(f"need at least {2 * (d + 1)} knots for degree {d}")
        if any(a > b for a, b in zip(self.knots, self.knots[1:])):
            raise ValueError("knots must be non-decreasing")
        first, last = self.knots[0], self.knots[-1]
        if any(t != first for t in self.knots[: d + 1]):
            raise ValueError(f"first {d + 1} knots must coincide (clamped)")
        if any(t != last for t in self.knots[-(d + 1):]):
            raise ValueError(f"last {d + 1} knots must coincide (clamped)")
        if first == last:
            raise ValueError("knot range is empty")

    @property
    def num_basis(self) -> int:
        """Number of basis functions (= control points) this vector supports."""
        return len(self.knots) - self.degree - 1

    @property
    def domain(self) -> tuple[float, float]:
        return (self.knots[0], self.knots[-1])

    def check_param(self, t: float) -> None:
        lo, hi = self.domain
        if not lo <= t <= hi:
            raise ValueError(f"parameter {t} outside knot range [{lo}, {hi}]")


@dataclass(frozen=True)
class SplineCurve:
    """A clamped B-spline curve: degree, knot vector, and 2D control points."""

    degree: int
    knots: KnotVector
    control: tuple[CrispPoint, ...]

    def __post_init__(self):
        object.__setattr__(self, "control", tuple(self.control))
        if self.degree != self.knots.degree:
            raise ValueError("curve degree must match knot vector degree")
        if len(self.control) < self.degree + 1:
            raise ValueError("need at least degree + 1 control points")
        if len(self.control) != self.knots.num_basis:
            raise ValueError(
                f"{len(self.control)} control points need "
                f"{len(self.control) + self.degree + 1} knots, "
                f"got {len(self.knots.knots)}"
            )

    def control_array(self) -> np.ndarray:
        return np.array([(p.x, p.y) for p in self.control], dtype=float)


def parametrize(points, choice: ParamChoice) -> list[float]:
    """Assign strictly increasing parameters in [0, 1] to the data points.

    uniform:      i / n
    chord-length: normalized cumulative segment length
    centripetal:  normalized cumulative square-root segment length
    """
    pts = list(points)
    if len(pts) < 2:
        raise ValueError(f"need at least 2 points to parametrize, got {len(pts)}")
    n = len(pts) - 1
    if choice is ParamChoice.UNIFORM:
        return [i / n for i in range(n + 1)]

    acc = [0.0]
    for i, (a, b) in enumerate(zip(pts, pts[1:])):
        d = math.hypot(b.x - a.x, b.y - a.y)
        if d == 0.0:
            raise DegenerateChordError(
                f"zero-length chord between points {i} and {i + 1}"
            )
        if choice is ParamChoice.CENTRIPETAL:
            d = math.sqrt(d)
        acc.append(acc[-1] + d)
    total = acc[-1]
    params = [a / total for a in acc]
    params[-1] = 1.0
    if any(a >= b for a, b in zip(params, params[1:])):
        raise DegenerateChordError("chords too short: parameters failed to increase")
    return params


def average_knots(params, degree: int) -> KnotVector:
    """Build a clamped knot vector by averaging runs of `degree` parameters.

    Interior knot j is the mean of params[j..j+degree-1]; the ends are
    clamped with multiplicity degree + 1. Total length is
    len(params) + degree + 1.
    """
    ts = [float(t) for t in params]
    if len(ts) < degree + 1:
        raise ValueError(f"need at least {degree + 1} parameters for degree {degree}")
    if any(a >= b for a, b in zip(ts, ts[1:])):
        raise ValueError("parameters must be strictly increasing")
    n = len(ts) - 1
    interior = [
        sum(ts[j : j + degree]) / degree for j in range(1, n - degree + 1)
    ]
    knots = [ts[0]] * (degree + 1) + interior + [ts[-1]] * (degree + 1)
    return KnotVector(degree=degree, knots=tuple(knots))


def _basis_degree0(knots: tuple[float, ...], i: int, t: float) -> float:
    if knots[i] <= t < knots[i + 1]:
        return 1.0
    # closed right end: the last nonempty span owns the final knot value
    if t == knots[-1] and knots[i] < knots[i + 1] == t:
        return 1.0
    return 0.0


def basis(knots: KnotVector, i: int, t: float) -> float:
    """Evaluate one basis function of the vector's degree at t (Cox-de Boor).

    Terms with zero denominators drop out of the recursion.
    """
    if not 0 <= i < knots.num_basis:
        raise ValueError(f"basis index {i} outside [0, {knots.num_basis})")
    knots.check_param(t)
    return _basis_recurse(knots.knots, i, knots.degree, t)


def _basis_recurse(kv: tuple[float, ...], i: int, k: int, t: float) -> float:
    if k == 0:
        return _basis_degree0(kv, i, t)
    value = 0.0
    left_den = kv[i + k] - kv[i]
    if left_den > 0.0:
        value += (t - kv[i]) / left_den * _basis_recurse(kv, i, k - 1, t)
    right_den = kv[i + k + 1] - kv[i + 1]
    if right_den > 0.0:
        value += (kv[i + k + 1] - t) / right_den * _basis_recurse(kv, i + 1, k - 1, t)
    return value


def _find_span(knots: KnotVector, t: float) -> int:
    """Index of the knot span containing t, right end mapped to the last span."""
    kv = knots.knots
    d = knots.degree
    n = knots.num_basis - 1
    if t >= kv[n + 1]:
        return n
    if t <= kv[d]:
        return d
    return bisect.bisect_right(kv, t, d, n + 1) - 1


def collocation_matrix(params, knots: KnotVector) -> np.ndarray:
    """Matrix of basis values at the parameters; row i holds all B_j(params[i])."""
    ts = list(params)
    m = np.zeros((len(ts), knots.num_basis))
    for row, t in enumerate(ts):
        for col in range(knots.num_basis):
            m[row, col] = basis(knots, col, t)
    return m


def _solve_dense(matrix: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """Gaussian elimination with partial pivoting for small square systems."""
    a = np.array(matrix, dtype=float)
    b = np.array(rhs, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n) or b.shape[0] != n:
        raise ValueError(f"system shape mismatch: {a.shape} vs {b.shape}")
    for k in range(n):
        p = k + int(np.argmax(np.abs(a[k:, k])))
        if abs(a[p, k]) < PIVOT_TOL:
            raise SolverError(
                f"pivot {a[p, k]:.3e} below {PIVOT_TOL:g} at elimination row {k}"
            )
        if p != k:
            a[[k, p]] = a[[p, k]]
            b[[k, p]] = b[[p, k]]
        for row in range(k + 1, n):
            factor = a[row, k] / a[k, k]
            if factor != 0.0:
                a[row, k:] -= factor * a[k, k:]
                b[row] -= factor * b[k]
    x = np.zeros_like(b)
    for k in range(n - 1, -1, -1):
        x[k] = (b[k] - a[k, k + 1 :] @ x[k + 1 :]) / a[k, k]
    return x


def solve_interpolation(data, params, knots: KnotVector) -> SplineCurve:
    """Solve the square collocation system so the curve passes through the data."""
    pts = list(data)
    ts = list(params)
    if len(pts) != len(ts):
        raise ValueError(f"{len(pts)} data points but {len(ts)} parameters")
    if len(pts) != knots.num_basis:
        raise ValueError(
            f"{len(pts)} data points but knot vector supports {knots.num_basis}"
        )
    matrix = collocation_matrix(ts, knots)
    rhs = np.array([(p.x, p.y) for p in pts], dtype=float)
    solution = _solve_dense(matrix, rhs)
    control = tuple(CrispPoint(float(x), float(y)) for x, y in solution)
    return SplineCurve(degree=knots.degree, knots=knots, control=control)


def eval_curve(curve: SplineCurve, t: float) -> CrispPoint:
    """Evaluate the curve at t by de Boor's algorithm."""
    curve.knots.check_param(t)
    kv = curve.knots.knots
    d = curve.degree
    span = _find_span(curve.knots, t)
    work = [curve.control[span - d + j] for j in range(d + 1)]
    pts = np.array([(p.x, p.y) for p in work], dtype=float)
    for r in range(1, d + 1):
        for j in range(d, r - 1, -1):
            i = span - d + j
            den = kv[i + d - r + 1] - kv[i]
            frac = (t - kv[i]) / den
            pts[j] = (1.0 - frac) * pts[j - 1] + frac * pts[j]
    return CrispPoint(float(pts[d, 0]), float(pts[d, 1]))


def sample_curve(curve: SplineCurve, n_samples: int) -> list[CrispPoint]:
    """Evaluate at n_samples uniformly spaced parameters over the full domain."""
    if n_samples < 2:
        raise ValueError(f"need at least 2 samples, got {n_samples}")
    lo, hi = curve.knots.domain
    return [
        eval_curve(curve, lo + (hi - lo) * (i / (n_samples - 1)))
        for i in range(n_samples)
    ]


def sample_params(curve: SplineCurve, n_samples: int) -> list[float]:
    """The uniformly spaced parameters used by sample_curve."""
    if n_samples < 2:
        raise ValueError(f"need at least 2 samples, got {n_samples}")
    lo, hi = curve.knots.domain
    return [lo + (hi - lo) * (i / (n_samples - 1)) for i in range(n_samples)]
