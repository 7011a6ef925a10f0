"""Numerical laboratory for the discretization limits of the shape sums.

Each sweep samples analytic fixtures at refining timestamp grids
(uniform k/n or seeded jitter), evaluates the discrete statistic and
reports the error against the quadrature oracle as machine-readable
rows.  Rows are deterministic given the seed: the jitter stream for a
given n is seeded with (seed, n), so rows do not depend on sweep order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import WindowOutOfDomain
from .ftl import (ftl, shape_functional, shape_integral, shape_sum_centered,
                  wftl)
from .gesture import AnalyticGesture, sample_at
from .jsonio import dumps, fmt17


@dataclass(frozen=True)
class SamplingMode:
    """Timestamp generator: uniform grid or seeded jitter around it."""

    kind: str = "uniform"  # "uniform" | "jitter"
    seed: int = 0
    strength: float = 0.3

    def __post_init__(self):
        if self.kind not in ("uniform", "jitter"):
            raise ValueError(f"unknown sampling mode {self.kind!r}")
        if self.kind == "jitter" and not 0.0 <= self.strength < 0.5:
            # strength < 1/2 keeps jittered timestamps strictly increasing
            raise ValueError(f"jitter strength {self.strength!r} not in [0, 0.5)")

    @classmethod
    def uniform(cls) -> "SamplingMode":
        return cls("uniform")

    @classmethod
    def jitter(cls, seed: int, strength: float = 0.3) -> "SamplingMode":
        return cls("jitter", seed, strength)

    def timestamps(self, n: int) -> list[float]:
        if self.kind == "uniform":
            return [k / n for k in range(n + 1)]
        rng = np.random.default_rng([self.seed, n])
        u = rng.uniform(-1.0, 1.0, n + 1)
        u[0] = 0.0
        u[n] = 0.0
        return [(k + self.strength * u[k]) / n for k in range(n + 1)]


@dataclass(frozen=True)
class SweepRow:
    n: int
    delta: float  # max timestep of the grid
    value: complex
    oracle: complex
    abs_error: float
    rel_error: float | None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "delta": self.delta,
            "value_re": self.value.real,
            "value_im": self.value.imag,
            "oracle_re": self.oracle.real,
            "oracle_im": self.oracle.imag,
            "abs_error": self.abs_error,
            "rel_error": self.rel_error,
        }


def _row(n: int, ts: Sequence[float], value: complex,
         oracle: complex) -> SweepRow:
    delta = max(b - a for a, b in zip(ts, ts[1:]))
    abs_error = abs(value - oracle)
    rel_error = abs_error / abs(oracle) if oracle != 0 else None
    return SweepRow(n, delta, value, oracle, abs_error, rel_error)


def _check_ns(ns: Sequence[int]) -> None:
    if list(ns) != sorted(ns):
        raise ValueError("ns must be sorted ascending")
    if any(n < 2 for n in ns):
        raise ValueError("every n must be >= 2")


def sweep_ftl(f: AnalyticGesture, g: AnalyticGesture, ns: Sequence[int],
              mode: SamplingMode = SamplingMode.uniform()) -> list[SweepRow]:
    """Dissimilarity of two fixtures versus the quadrature oracle.

    Uniform mode evaluates the unweighted sum; jitter mode the weighted
    one (the weighted sum is the statistic that converges on non-uniform
    grids).
    """
    _check_ns(ns)
    oracle = complex(shape_functional(f, g))
    rows = []
    for n in ns:
        ts = mode.timestamps(n)
        sf = sample_at(f, ts)
        sg = sample_at(g, ts)
        report = ftl(sf, sg) if mode.kind == "uniform" else wftl(sf, sg)
        rows.append(_row(n, ts, complex(report.value), oracle))
    return rows


def sweep_shape_sum(g: AnalyticGesture, ns: Sequence[int],
                    mode: SamplingMode = SamplingMode.uniform()
                    ) -> list[SweepRow]:
    """Recentred shape sum of one fixture versus 2 - int g''/g' dt.

    The raw sum of shapes grows like n - 1 (every shape tends to 1), so
    rows report the recentred statistic, which converges for every
    fixture including straight lines.
    """
    _check_ns(ns)
    oracle = 2.0 - shape_integral(g)
    rows = []
    for n in ns:
        ts = mode.timestamps(n)
        value = shape_sum_centered(sample_at(g, ts),
                                   weighted=(mode.kind == "jitter"))
        rows.append(_row(n, ts, value, oracle))
    return rows


def divided_difference_check(
        g: AnalyticGesture, t: float,
        windows: Sequence[tuple[float, float]]
) -> list[tuple[tuple[float, float], float]]:
    """Three-point estimate of half the shape curvature g''/(2 g').

    For each window (h0, h1) the gesture is sampled at t - h0, t, t + h1;
    the second divided difference of those samples, normalized by the
    secant slope across the whole window, estimates g''(t)/(2 g'(t)).
    Returns (window, absolute error) pairs.  Symmetric windows converge
    at second order, asymmetric ones at first order.
    """
    results = []
    for h0, h1 in windows:
        if h0 <= 0.0 or h1 <= 0.0:
            raise WindowOutOfDomain(f"window ({h0}, {h1}) must be positive")
        if t - h0 < 0.0 or t + h1 > 1.0:
            raise WindowOutOfDomain(
                f"window ({h0}, {h1}) at t = {t} leaves [0, 1]")
        z0, z1, z2 = g.z(t - h0), g.z(t), g.z(t + h1)
        span = h0 + h1
        sdd = ((z2 - z1) / h1 - (z1 - z0) / h0) / span
        slope = (z2 - z0) / span
        estimate = sdd / slope
        target = g.ddz(t) / g.dz(t) / 2.0
        results.append(((h0, h1), abs(estimate - target)))
    return results


def estimate_rate(rows: Sequence[SweepRow]) -> float | None:
    """Log-log slope of abs_error against n; None with under two points."""
    pts = [(r.n, r.abs_error) for r in rows if r.abs_error > 0.0]
    if len(pts) < 2:
        return None
    logn = np.log([p[0] for p in pts])
    loge = np.log([p[1] for p in pts])
    slope = np.polyfit(logn, loge, 1)[0]
    return float(slope)


CSV_HEADER = "n,delta,value_re,value_im,oracle_re,oracle_im,abs_error,rel_error"


def emit_report(rows: Sequence[SweepRow], format: str = "csv") -> bytes:
    """Serialize rows with a fixed column order and 17-digit floats."""
    if format == "csv":
        lines = [CSV_HEADER]
        for r in rows:
            obj = r.to_json()
            cells = [str(obj["n"])]
            cells += [fmt17(obj[k]) for k in
                      ("delta", "value_re", "value_im",
                       "oracle_re", "oracle_im", "abs_error")]
            cells.append("" if obj["rel_error"] is None
                         else fmt17(obj["rel_error"]))
            lines.append(",".join(cells))
        return ("\n".join(lines) + "\n").encode()
    if format == "json":
        return dumps({"rows": [r.to_json() for r in rows]}).encode()
    raise ValueError(f"unknown report format {format!r}")
