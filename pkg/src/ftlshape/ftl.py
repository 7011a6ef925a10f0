"""Dissimilarity sums over sampled gestures and their limiting functional.

Two isochronous n-samples f and g define a dissimilarity

    ftl(f, g) = sum_{k=1..n-1} LSD((Df_k, Df_{k+1}), (Dg_k, Dg_{k+1}))

where Dh_k is the k-th displacement h_k - h_{k-1}.  The weighted variant
wftl multiplies each term by the timestep ratio (t_{k+1}-t_k)/(t_k-t_{k-1}),
which makes the sum robust to non-uniform timestamps.  As sampling
refines, both converge to the functional

    integral_0^1 | f''/f' - g''/g' | dt

computed here by composite Simpson quadrature (`shape_functional`).

On the single-gesture side, the sum of consecutive-delta shapes is
related to the integral of g''/g'.  The raw sum grows like n - 1 because
every shape tends to 1; the recentred statistic

    shape_sum_centered(g) = 2 - sum_{k=1..n-1} (1 - w_k * shape_k)

converges to 2 - integral_0^1 g''/g' dt, which equals 2 for straight
lines and 2 - 2*pi*i for circles.  `shape_sum` returns the raw sum,
`shape_sum_centered` the convergent form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import SampleMismatch
from .geometry import complex_quotient
from .gesture import AnalyticGesture, SampledGesture

# Absolute tolerance under which two timestamp sequences count as equal.
ISOCHRONY_TOL = 1e-9

# Simpson node count for the limiting functional; power-of-two intervals.
DEFAULT_QUAD_POINTS = 4097


@dataclass(frozen=True)
class DissimilarityReport:
    value: float
    terms: int
    mode: str  # "uniform" | "weighted"

    def to_json(self) -> dict:
        return {"value": self.value, "terms": self.terms, "mode": self.mode}


def _require_isochronous(f: SampledGesture, g: SampledGesture) -> None:
    if f.n != g.n:
        raise SampleMismatch(f"sample sizes differ: {f.n} vs {g.n}")
    for k, (a, b) in enumerate(zip(f.points, g.points)):
        if abs(a.t - b.t) > ISOCHRONY_TOL:
            raise SampleMismatch(
                f"timestamps differ at index {k}: {a.t} vs {b.t}")


def _delta_shapes(g: SampledGesture) -> list[complex]:
    """Shapes of the n-1 consecutive displacement pairs."""
    zs = g.complex_points()
    dz = [b - a for a, b in zip(zs, zs[1:])]
    return [complex_quotient(dz[k - 1], dz[k]) for k in range(1, len(dz))]


def _lsd_terms(f: SampledGesture, g: SampledGesture) -> list[float]:
    # Differences of the complex shape values.  The dot-product closed
    # form is equivalent but computes the squared distance as a tiny
    # difference of large products, which floors near-identical samples
    # at sqrt(machine epsilon) per term; the quotient route keeps the
    # absolute error of vanishing distances near machine epsilon.
    return [abs(a - b) for a, b in zip(_delta_shapes(f), _delta_shapes(g))]


def ftl(f: SampledGesture, g: SampledGesture) -> DissimilarityReport:
    """Unweighted shape dissimilarity of two isochronous samples."""
    _require_isochronous(f, g)
    return DissimilarityReport(value=math.fsum(_lsd_terms(f, g)),
                               terms=f.n - 1, mode="uniform")


def _weights(g: SampledGesture) -> list[float]:
    ts = g.timestamps()
    return [(ts[k + 1] - ts[k]) / (ts[k] - ts[k - 1])
            for k in range(1, len(ts) - 1)]


def wftl(f: SampledGesture, g: SampledGesture) -> DissimilarityReport:
    """Timestep-weighted dissimilarity; equals ftl on uniform timestamps."""
    _require_isochronous(f, g)
    terms = _lsd_terms(f, g)
    weights = _weights(f)
    return DissimilarityReport(
        value=math.fsum(w * v for w, v in zip(weights, terms)),
        terms=f.n - 1, mode="weighted")


def _shape_terms(g: SampledGesture, weighted: bool) -> list[complex]:
    shapes = _delta_shapes(g)
    if not weighted:
        return shapes
    return [w * s for w, s in zip(_weights(g), shapes)]


def shape_sum(g: SampledGesture, weighted: bool = False) -> complex:
    """Raw sum of the (optionally weighted) consecutive-delta shapes.

    Grows like n - 1; see `shape_sum_centered` for the convergent form.
    """
    terms = _shape_terms(g, weighted)
    return complex(math.fsum(s.real for s in terms),
                   math.fsum(s.imag for s in terms))


def shape_sum_centered(g: SampledGesture, weighted: bool = False) -> complex:
    """Recentred shape sum 2 - sum(1 - term); tends to 2 - int g''/g'."""
    terms = _shape_terms(g, weighted)
    return 2.0 - complex(math.fsum(1.0 - s.real for s in terms),
                         math.fsum(-s.imag for s in terms))


def gesture_shape(g: AnalyticGesture, t: float) -> complex:
    """Pointwise shape 1 - g''/(2 g') of an analytic gesture.

    Constant 1 - pi*i on circles and 1 on straight lines.
    """
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"t = {t!r} outside the gesture domain [0, 1]")
    return 1.0 - complex_quotient(g.ddz(t), g.dz(t)) / 2.0


def composite_simpson(fn: Callable[[float], complex], npoints: int):
    """Composite Simpson over [0, 1] on uniform nodes.

    npoints is rounded up to the next odd count so every panel has a
    midpoint.  Works for real- or complex-valued integrands.
    """
    if npoints < 2:
        raise ValueError(f"need at least 2 quadrature points, got {npoints}")
    m = npoints if npoints % 2 == 1 else npoints + 1
    h = 1.0 / (m - 1)
    total = fn(0.0) + fn(1.0)
    for k in range(1, m - 1):
        total += (4.0 if k % 2 == 1 else 2.0) * fn(k * h)
    return total * (h / 3.0)


def shape_functional(f: AnalyticGesture, g: AnalyticGesture,
                     quad_points: int = DEFAULT_QUAD_POINTS) -> float:
    """Limiting value integral_0^1 |f''/f' - g''/g'| dt of the ftl sums."""
    def integrand(t: float) -> float:
        return abs(complex_quotient(f.ddz(t), f.dz(t))
                   - complex_quotient(g.ddz(t), g.dz(t)))
    return float(composite_simpson(integrand, quad_points))


def shape_integral(g: AnalyticGesture,
                   quad_points: int = DEFAULT_QUAD_POINTS) -> complex:
    """Quadrature of the complex log-derivative integral_0^1 g''/g' dt."""
    return complex(composite_simpson(
        lambda t: complex_quotient(g.ddz(t), g.dz(t)), quad_points))
