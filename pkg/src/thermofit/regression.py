"""Closed-form linear least squares, weighted variants, and fit diagnostics.

A best-fit line minimizes the sum of squared deviations from the data.  For
the regression of y on x the deviations are vertical and the minimizer is

    m = (n*sum(xy) - sum(x)*sum(y)) / (n*sum(x^2) - sum(x)^2)
    b = (sum(y) - m*sum(x)) / n

computed here in the numerically equivalent centered form m = Sxy/Sxx,
b = ybar - m*xbar.  The regression of x on y minimizes horizontal deviations
instead; the two lines coincide only when the data are perfectly collinear.
Weighted fits minimize sum(w_i * d_i^2) via the weighted normal equations.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import (
    DegenerateVariance,
    EmptyInput,
    InsufficientData,
    LengthMismatch,
    NonPositiveWeight,
    OutOfRange,
)

Point = tuple[float, float]


class Axis(enum.Enum):
    """Which deviations the fit minimizes."""

    Y_ON_X = "y-on-x"
    X_ON_Y = "x-on-y"


class FitClass(enum.IntEnum):
    """Qualitative fit quality, ordered GOOD > MODERATE > POOR."""

    POOR = 0
    MODERATE = 1
    GOOD = 2


@dataclass(frozen=True)
class SummaryStats:
    """Running sums of a point set: n, sum x, sum y, sum xy, sum x^2, sum y^2."""

    n: int
    sum_x: float
    sum_y: float
    sum_xy: float
    sum_x2: float
    sum_y2: float


@dataclass(frozen=True)
class LinearFit:
    """A fitted line y = slope*x + intercept with diagnostics.

    ``sse`` is the objective the fit minimized: vertical squared deviations
    for Y_ON_X, horizontal ones for X_ON_Y.  ``r`` is the correlation
    coefficient of the data (weighted when the fit is weighted).
    """

    slope: float
    intercept: float
    axis: Axis
    r: float
    sse: float
    n: int


def _split(points: list[Point]) -> tuple[list[float], list[float]]:
    xs = [float(p[0]) for p in points]
    ys = [float(p[1]) for p in points]
    for v in xs + ys:
        if not math.isfinite(v):
            raise OutOfRange(f"non-finite coordinate {v!r}")
    return xs, ys


def summarize(points: list[Point]) -> SummaryStats:
    """Accumulate the five least-squares sums over the points.

    Sums use exact (correctly rounded) summation, so they are invariant
    under permutation of the input.
    """
    if not points:
        raise EmptyInput("summarize requires at least one point")
    xs, ys = _split(points)
    return SummaryStats(
        n=len(xs),
        sum_x=math.fsum(xs),
        sum_y=math.fsum(ys),
        sum_xy=math.fsum(x * y for x, y in zip(xs, ys)),
        sum_x2=math.fsum(x * x for x in xs),
        sum_y2=math.fsum(y * y for y in ys),
    )


def _pearson_from_devs(dx, dy, ws) -> float:
    """Correlation from centered deviations, scaled so that squaring can
    neither overflow nor underflow; clamped to [-1, 1]."""
    sx = max(abs(d) for d in dx)
    sy = max(abs(d) for d in dy)
    nxx = math.fsum(w * (a / sx) ** 2 for w, a in zip(ws, dx))
    nyy = math.fsum(w * (b / sy) ** 2 for w, b in zip(ws, dy))
    nxy = math.fsum(w * (a / sx) * (b / sy) for w, a, b in zip(ws, dx, dy))
    return max(-1.0, min(1.0, nxy / math.sqrt(nxx * nyy)))


def _fit_weighted(xs, ys, ws, axis: Axis) -> LinearFit:
    """Weighted least-squares line in y = mx + b form.

    Shared by ols_fit (unit weights) and wls_fit so that equal weights
    reproduce the unweighted fit exactly, bit for bit.
    """
    n = len(xs)
    if min(xs) == max(xs):
        msg = "all x values are equal"
        if axis is Axis.Y_ON_X:
            msg += "; no y-on-x line exists"
        raise DegenerateVariance(msg)
    if min(ys) == max(ys):
        # For Y_ON_X a flat line would fit, but r is then undefined; erroring
        # beats inventing a conventional value.
        raise DegenerateVariance("all y values are equal")

    sw = math.fsum(ws)
    xbar = math.fsum(w * x for w, x in zip(ws, xs)) / sw
    ybar = math.fsum(w * y for w, y in zip(ws, ys)) / sw
    dx = [x - xbar for x in xs]
    dy = [y - ybar for y in ys]
    r = _pearson_from_devs(dx, dy, ws)

    if axis is Axis.Y_ON_X:
        sxx = math.fsum(w * a * a for w, a in zip(ws, dx))
        sxy = math.fsum(w * a * b for w, a, b in zip(ws, dx, dy))
        if sxx == 0.0:
            raise DegenerateVariance("x variance underflowed to zero")
        m = sxy / sxx
        b = ybar - m * xbar
        sse = math.fsum(w * (y - (m * x + b)) ** 2 for w, x, y in zip(ws, xs, ys))
        return LinearFit(slope=m, intercept=b, axis=axis, r=r, sse=sse, n=n)

    # Regress x on y (x = m'y + b'), then re-express as y = mx + b.
    syy = math.fsum(w * b * b for w, b in zip(ws, dy))
    sxy = math.fsum(w * a * b for w, a, b in zip(ws, dx, dy))
    if syy == 0.0:
        raise DegenerateVariance("y variance underflowed to zero")
    mp = sxy / syy
    bp = xbar - mp * ybar
    if mp == 0.0:
        raise DegenerateVariance("x-on-y slope is zero; line is vertical in y = mx + b form")
    sse = math.fsum(w * (x - (mp * y + bp)) ** 2 for w, x, y in zip(ws, xs, ys))
    return LinearFit(slope=1.0 / mp, intercept=-bp / mp, axis=axis, r=r, sse=sse, n=n)


def ols_fit(points: list[Point], axis: Axis = Axis.Y_ON_X) -> LinearFit:
    """Fit the unique SSE-minimizing line for the chosen deviation direction.

    Y_ON_X minimizes vertical deviations, X_ON_Y horizontal ones; an X_ON_Y
    result is re-expressed in y = mx + b form.
    """
    if not points:
        raise EmptyInput("cannot fit an empty point list")
    if len(points) < 2:
        raise InsufficientData("a line fit needs at least 2 points")
    xs, ys = _split(points)
    return _fit_weighted(xs, ys, [1.0] * len(xs), axis)


def wls_fit(points: list[Point], weights: list[float]) -> LinearFit:
    """Weighted y-on-x fit minimizing sum(w_i * (y_i - m*x_i - b)^2).

    The reported ``r`` is the weighted correlation and ``sse`` the weighted
    objective; with equal weights both reduce to their OLS values.
    """
    if not points:
        raise EmptyInput("cannot fit an empty point list")
    if len(weights) != len(points):
        raise LengthMismatch(f"{len(weights)} weights for {len(points)} points")
    for w in weights:
        if not (math.isfinite(w) and w > 0):
            raise NonPositiveWeight(f"weight {w!r} must be positive and finite")
    xs, ys = _split(points)
    return _fit_weighted(xs, ys, [float(w) for w in weights], Axis.Y_ON_X)


def predict(fit: LinearFit, x: float) -> float:
    """Evaluate the fitted line at x."""
    return fit.slope * x + fit.intercept


def residuals(fit: LinearFit, points: list[Point]) -> list[float]:
    """Per-point deviations, in input order.

    Vertical (observed y minus line) for a Y_ON_X fit; the mirrored
    horizontal definition for an X_ON_Y fit.
    """
    if fit.axis is Axis.Y_ON_X:
        return [y - (fit.slope * x + fit.intercept) for x, y in points]
    mp = 1.0 / fit.slope
    bp = -fit.intercept / fit.slope
    return [x - (mp * y + bp) for x, y in points]


def sse(fit: LinearFit, points: list[Point]) -> float:
    """Sum of squared deviations of the points from the fitted line."""
    return math.fsum(d * d for d in residuals(fit, points))


def correlation(points: list[Point]) -> float:
    """Pearson correlation coefficient, clamped to [-1, 1].

    Equals (n*sum(xy) - sum(x)*sum(y)) / sqrt((n*sum(x^2) - sum(x)^2) *
    (n*sum(y^2) - sum(y)^2)), computed in centered form.
    """
    if len(points) < 2:
        raise InsufficientData("correlation needs at least 2 points")
    xs, ys = _split(points)
    if min(xs) == max(xs):
        raise DegenerateVariance("all x values are equal")
    if min(ys) == max(ys):
        raise DegenerateVariance("all y values are equal")
    n = len(xs)
    xbar = math.fsum(xs) / n
    ybar = math.fsum(ys) / n
    ones = [1.0] * n
    return _pearson_from_devs([x - xbar for x in xs], [y - ybar for y in ys], ones)


def classify_fit(r: float) -> FitClass:
    """Bucket a correlation coefficient: |r| >= 0.9 GOOD, >= 0.5 MODERATE, else POOR."""
    if not (abs(r) <= 1.0):
        raise OutOfRange(f"|r| = {abs(r)!r} exceeds 1")
    a = abs(r)
    if a >= 0.9:
        return FitClass.GOOD
    if a >= 0.5:
        return FitClass.MODERATE
    return FitClass.POOR
