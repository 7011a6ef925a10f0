"""Shared random generators for the test suite (all explicitly seeded)."""

from __future__ import annotations

import math

import numpy as np

from ftlshape.geometry import BasicGesture, Vec2
from ftlshape.gesture import SampledGesture, TimedPoint, validate_sample


def random_vec(rng: np.random.Generator, lo: float = 0.25,
               hi: float = 2.0) -> Vec2:
    """Vector with norm in [lo, hi] and uniform direction."""
    angle = rng.uniform(0.0, 2.0 * math.pi)
    r = rng.uniform(lo, hi)
    return Vec2(r * math.cos(angle), r * math.sin(angle))


def random_basic_gesture(rng: np.random.Generator) -> BasicGesture:
    return BasicGesture(random_vec(rng), random_vec(rng))


def random_sample(rng: np.random.Generator, n: int) -> SampledGesture:
    """Random-walk n-sample with steps bounded away from zero."""
    pts = [TimedPoint(0.0, Vec2(float(rng.uniform(-1, 1)),
                                float(rng.uniform(-1, 1))))]
    for k in range(1, n + 1):
        step = random_vec(rng, lo=0.05, hi=1.0)
        pts.append(TimedPoint(k / n, pts[-1].p + step))
    return validate_sample(pts)


def random_similarity(rng: np.random.Generator):
    """Random (translation, scale != 0, rotation); scale may be negative."""
    translate = Vec2(float(rng.uniform(-10, 10)), float(rng.uniform(-10, 10)))
    scale = float(rng.uniform(0.2, 5.0)) * (1 if rng.uniform() < 0.5 else -1)
    theta = float(rng.uniform(0.0, 2.0 * math.pi))
    return translate, scale, theta
