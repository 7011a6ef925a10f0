"""Sampled and analytic gestures.

A sampled gesture is a sequence of n+1 timestamped plane points with
t0 = 0, tn = 1, strictly increasing timestamps and nonzero consecutive
displacements (so every consecutive displacement pair is a valid basic
gesture).  An analytic gesture bundles a closed-form position with its
first two derivatives; these are the fixtures the convergence lab runs
against, so the derivatives are verified by finite differences in the
test suite.
"""

from __future__ import annotations

import math
import cmath
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .errors import (NonmonotoneTime, TooFewPoints, UnnormalizedTime,
                     ZeroDelta, ZeroScale)
from .geometry import Vec2

# Relative threshold (against the bounding-box diagonal) below which a
# displacement counts as zero.
DELTA_EPS = 1e-12


@dataclass(frozen=True)
class TimedPoint:
    t: float
    p: Vec2


@dataclass(frozen=True)
class SampledGesture:
    """Validated n-sample; construct through `validate_sample`."""

    points: tuple[TimedPoint, ...]

    @property
    def n(self) -> int:
        return len(self.points) - 1

    def timestamps(self) -> list[float]:
        return [tp.t for tp in self.points]

    def positions(self) -> list[Vec2]:
        return [tp.p for tp in self.points]

    def complex_points(self) -> list[complex]:
        return [complex(tp.p.x, tp.p.y) for tp in self.points]


def bbox_diagonal(points: Sequence[TimedPoint]) -> float:
    xs = [tp.p.x for tp in points]
    ys = [tp.p.y for tp in points]
    return math.hypot(max(xs) - min(xs), max(ys) - min(ys))


def validate_sample(points: Sequence[TimedPoint]) -> SampledGesture:
    """Check the n-sample invariants and wrap the points.

    Raises TooFewPoints, NonmonotoneTime, UnnormalizedTime or
    ZeroDelta(k) (k is the index of the later of the coinciding points).
    """
    pts = tuple(points)
    if len(pts) < 3:
        raise TooFewPoints(f"need at least 3 points, got {len(pts)}")
    for k in range(1, len(pts)):
        if not pts[k].t > pts[k - 1].t:
            raise NonmonotoneTime(
                f"timestamps not strictly increasing at index {k}")
    if pts[0].t != 0.0 or pts[-1].t != 1.0:
        raise UnnormalizedTime(
            f"timestamps must span [0, 1], got [{pts[0].t}, {pts[-1].t}]")
    threshold = DELTA_EPS * bbox_diagonal(pts)
    for k in range(1, len(pts)):
        if (pts[k].p - pts[k - 1].p).norm() <= threshold:
            raise ZeroDelta(k)
    return SampledGesture(pts)


@dataclass(frozen=True)
class AnalyticGesture:
    """Closed-form gesture with exact first and second derivatives."""

    name: str
    at: Callable[[float], Vec2]
    d1: Callable[[float], Vec2]
    d2: Callable[[float], Vec2]
    params: dict[str, float] = field(default_factory=dict)

    def z(self, t: float) -> complex:
        p = self.at(t)
        return complex(p.x, p.y)

    def dz(self, t: float) -> complex:
        p = self.d1(t)
        return complex(p.x, p.y)

    def ddz(self, t: float) -> complex:
        p = self.d2(t)
        return complex(p.x, p.y)


def uniform_sample(g: AnalyticGesture, n: int) -> SampledGesture:
    """Sample g at the n+1 uniform timestamps k/n."""
    if n < 2:
        raise ValueError(f"uniform_sample needs n >= 2, got {n}")
    return validate_sample(
        [TimedPoint(k / n, g.at(k / n)) for k in range(n + 1)])


def sample_at(g: AnalyticGesture, timestamps: Sequence[float]) -> SampledGesture:
    """Sample g at arbitrary (valid) timestamps."""
    return validate_sample([TimedPoint(t, g.at(t)) for t in timestamps])


def merge_duplicate_points(points: Sequence[TimedPoint]) -> list[TimedPoint]:
    """Drop consecutive points whose positions coincide, keeping the first.

    Coincidence is measured against the bounding-box diagonal with the
    shared DELTA_EPS, so the output never trips the ZeroDelta check.
    """
    pts = list(points)
    if not pts:
        return pts
    threshold = DELTA_EPS * bbox_diagonal(pts)
    merged = [pts[0]]
    for tp in pts[1:]:
        if (tp.p - merged[-1].p).norm() <= threshold:
            continue
        merged.append(tp)
    return merged


def clean_stroke(raw: Sequence[tuple[float, Vec2]]) -> SampledGesture:
    """Turn a raw device stroke (time in ms, point) into a valid sample.

    Consecutive duplicate positions are merged (first timestamp kept),
    duplicate timestamps are pushed forward by half the smallest positive
    gap, and time is affinely normalized to [0, 1].  Idempotent on
    already-clean gestures.
    """
    pts = merge_duplicate_points(
        [TimedPoint(float(t), p) for t, p in raw])
    if len(pts) < 3:
        raise TooFewPoints(
            f"need at least 3 distinct points after merging, got {len(pts)}")
    gaps = [b.t - a.t for a, b in zip(pts, pts[1:]) if b.t > a.t]
    bump = (min(gaps) if gaps else 1.0) / 2.0
    fixed = [pts[0]]
    for tp in pts[1:]:
        t = tp.t if tp.t > fixed[-1].t else fixed[-1].t + bump
        fixed.append(TimedPoint(t, tp.p))
    t0, t1 = fixed[0].t, fixed[-1].t
    span = t1 - t0
    normalized = [TimedPoint((tp.t - t0) / span, tp.p) for tp in fixed]
    return validate_sample(normalized)


def transform(gest: SampledGesture, translate: Vec2, scale: float,
              rotate: float) -> SampledGesture:
    """Similarity transform p -> scale * R(rotate) p + translate.

    Timestamps are untouched; scale may be negative but not zero.
    """
    if scale == 0.0:
        raise ZeroScale("scale factor must be nonzero")
    c, s = math.cos(rotate), math.sin(rotate)
    pts = tuple(
        TimedPoint(tp.t, Vec2(scale * (c * tp.p.x - s * tp.p.y) + translate.x,
                              scale * (s * tp.p.x + c * tp.p.y) + translate.y))
        for tp in gest.points)
    return SampledGesture(pts)


# ---------------------------------------------------------------------------
# Analytic fixtures
# ---------------------------------------------------------------------------

def circle(r: float = 1.0, x0: float = 0.0, y0: float = 0.0,
           phase: float = 0.0) -> AnalyticGesture:
    """One full counterclockwise turn of radius r around (x0, y0)."""
    w = 2.0 * math.pi

    def at(t: float) -> Vec2:
        a = w * (t - phase)
        return Vec2(x0 + r * math.cos(a), y0 + r * math.sin(a))

    def d1(t: float) -> Vec2:
        a = w * (t - phase)
        return Vec2(-r * w * math.sin(a), r * w * math.cos(a))

    def d2(t: float) -> Vec2:
        a = w * (t - phase)
        return Vec2(-r * w * w * math.cos(a), -r * w * w * math.sin(a))

    return AnalyticGesture("circle", at, d1, d2,
                           {"r": r, "x0": x0, "y0": y0, "phase": phase})


def line(x0: float = 0.0, y0: float = 0.0, vx: float = 1.0,
         vy: float = 0.0) -> AnalyticGesture:
    """Straight segment start + t * velocity; velocity must be nonzero."""
    if vx == 0.0 and vy == 0.0:
        raise ValueError("line fixture needs a nonzero velocity")
    return AnalyticGesture(
        "line",
        lambda t: Vec2(x0 + vx * t, y0 + vy * t),
        lambda t: Vec2(vx, vy),
        lambda t: Vec2(0.0, 0.0),
        {"x0": x0, "y0": y0, "vx": vx, "vy": vy})


def parabola() -> AnalyticGesture:
    """The arc (t, t^2); constant second derivative (0, 2)."""
    return AnalyticGesture(
        "parabola",
        lambda t: Vec2(t, t * t),
        lambda t: Vec2(1.0, 2.0 * t),
        lambda t: Vec2(0.0, 2.0),
        {})


def spiral(growth: float = math.log(2.0), turns: float = 2.0,
           phase: float = 0.0) -> AnalyticGesture:
    """Logarithmic spiral exp((growth + i*2*pi*turns) t + i*phase)."""
    k = complex(growth, 2.0 * math.pi * turns)
    if k == 0:
        raise ValueError("spiral fixture needs growth or turns nonzero")

    def at(t: float) -> Vec2:
        z = cmath.exp(k * t + 1j * phase)
        return Vec2(z.real, z.imag)

    def d1(t: float) -> Vec2:
        z = k * cmath.exp(k * t + 1j * phase)
        return Vec2(z.real, z.imag)

    def d2(t: float) -> Vec2:
        z = k * k * cmath.exp(k * t + 1j * phase)
        return Vec2(z.real, z.imag)

    return AnalyticGesture("spiral", at, d1, d2,
                           {"growth": growth, "turns": turns, "phase": phase})


def wave(amplitude: float = 0.25) -> AnalyticGesture:
    """One sine period (t, A sin(2 pi t)); regular for any amplitude."""
    w = 2.0 * math.pi
    return AnalyticGesture(
        "wave",
        lambda t: Vec2(t, amplitude * math.sin(w * t)),
        lambda t: Vec2(1.0, amplitude * w * math.cos(w * t)),
        lambda t: Vec2(0.0, -amplitude * w * w * math.sin(w * t)),
        {"amplitude": amplitude})


def fixtures() -> dict[str, AnalyticGesture]:
    """Default instance of every named analytic fixture."""
    return {
        "circle": circle(),
        "line": line(),
        "parabola": parabola(),
        "spiral": spiral(),
        "wave": wave(),
    }
