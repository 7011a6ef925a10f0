"""Basic gestures, shape values and the local shape distance.

A basic gesture is an ordered pair of nonzero plane vectors (the two
consecutive displacement arrows of a stroke).  Its shape is the quotient
of the two vectors: as a complex number v1/v2 after identifying (x, y)
with x + iy, or as the even Clifford number v1 v2^{-1}.  The two agree
under the identification i <-> -I.  The local shape distance (LSD)
between two basic gestures is the plane distance between their shape
values; equal shapes characterize similar ordered triangles.

`lsd` computes the distance through the complex quotients; `lsd_dot` is
the closed form using only dot products and a single square root.  The
two cross-check each other.  The quotient route keeps tiny distances
accurate (the closed form squares first, flooring near-equal shapes at
sqrt(machine epsilon)), so it is what the sample-level sums build on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .clifford import Multivector, vector_quotient
from .errors import DegenerateBasicGesture, NonpositiveTimestep

# Relative threshold below which a basic-gesture leg counts as zero.
DEGENERACY_EPS = 1e-12


@dataclass(frozen=True)
class Vec2:
    """Plane vector/point in device-agnostic units."""

    x: float
    y: float

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def __add__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x - other.x, self.y - other.y)


@dataclass(frozen=True)
class BasicGesture:
    """Ordered pair of nonzero vectors; the carrier of shape."""

    v1: Vec2
    v2: Vec2


def complex_of_vec(v: Vec2) -> complex:
    return complex(v.x, v.y)


def vec_of_complex(c: complex) -> Vec2:
    return Vec2(c.real, c.imag)


def _check_legs(bg: BasicGesture, eps: float) -> None:
    h1 = bg.v1.norm()
    h2 = bg.v2.norm()
    scale = max(h1, h2)
    if h1 <= eps * scale or h1 == 0.0:
        raise DegenerateBasicGesture("first leg is (near-)zero")
    if h2 <= eps * scale or h2 == 0.0:
        raise DegenerateBasicGesture("second leg is (near-)zero")


def complex_quotient(u: complex, v: complex) -> complex:
    """Quotient u/v of (r + is)/(x + iy): (rx+sy)/|v|^2 - i(ry-sx)/|v|^2."""
    q = v.real * v.real + v.imag * v.imag
    return complex((u.real * v.real + u.imag * v.imag) / q,
                   -(u.real * v.imag - u.imag * v.real) / q)


def complex_shape(bg: BasicGesture, eps: float = DEGENERACY_EPS) -> complex:
    """Shape of a basic gesture as the complex number v1/v2."""
    _check_legs(bg, eps)
    return complex_quotient(complex_of_vec(bg.v1), complex_of_vec(bg.v2))


def clifford_shape(bg: BasicGesture, eps: float = DEGENERACY_EPS) -> Multivector:
    """Shape of a basic gesture as the even Clifford number v1 v2^{-1}."""
    _check_legs(bg, eps)
    return vector_quotient(Multivector.vector(bg.v1.x, bg.v1.y),
                           Multivector.vector(bg.v2.x, bg.v2.y), eps=eps)


def lsd(bg1: BasicGesture, bg2: BasicGesture,
        eps: float = DEGENERACY_EPS) -> float:
    """Local shape distance |shape(bg1) - shape(bg2)| via complex quotients."""
    return abs(complex_shape(bg1, eps) - complex_shape(bg2, eps))


def _lsd_dot_raw(u1x: float, u1y: float, u2x: float, u2y: float,
                 v1x: float, v1y: float, v2x: float, v2y: float) -> float:
    # Closed form with dot products only; denominators must be nonzero.
    nu1 = u1x * u1x + u1y * u1y
    nu2 = u2x * u2x + u2y * u2y
    nv1 = v1x * v1x + v1y * v1y
    nv2 = v2x * v2x + v2y * v2y
    duu = u1x * u2x + u1y * u2y
    dvv = v1x * v2x + v1y * v2y
    d_u1v2 = u1x * v2x + u1y * v2y
    d_u2v1 = u2x * v1x + u2y * v1y
    d_u1v1 = u1x * v1x + u1y * v1y
    d_u2v2 = u2x * v2x + u2y * v2y
    num = nu1 * nv2 + nu2 * nv1 - 2.0 * (duu * dvv - d_u1v2 * d_u2v1
                                         + d_u1v1 * d_u2v2)
    if num < 0.0:  # rounding can push an exact zero slightly negative
        num = 0.0
    return math.sqrt(num / (nu2 * nv2))


def lsd_dot(bg1: BasicGesture, bg2: BasicGesture,
            eps: float = DEGENERACY_EPS) -> float:
    """Local shape distance via the dot-product closed form.

    No divisions before the final square root.  Agrees with `lsd` to
    1e-12 (relative to max(1, distance)) except where the shapes nearly
    coincide, where squaring floors the result at sqrt(machine epsilon).
    """
    _check_legs(bg1, eps)
    _check_legs(bg2, eps)
    return _lsd_dot_raw(bg1.v1.x, bg1.v1.y, bg1.v2.x, bg1.v2.y,
                        bg2.v1.x, bg2.v1.y, bg2.v2.x, bg2.v2.y)


def weighted_shape(bg: BasicGesture, dt_prev: float, dt_next: float,
                   eps: float = DEGENERACY_EPS) -> complex:
    """Shape scaled by the timestep ratio dt_next/dt_prev.

    Coincides with the plain complex shape when the two gaps are equal.
    """
    if not dt_prev > 0.0:
        raise NonpositiveTimestep(f"dt_prev = {dt_prev!r} must be > 0")
    if not dt_next > 0.0:
        raise NonpositiveTimestep(f"dt_next = {dt_next!r} must be > 0")
    return complex_shape(bg, eps) * (dt_next / dt_prev)


def clifford_shape_matches_complex(bg: BasicGesture,
                                   eps: float = DEGENERACY_EPS) -> bool:
    """True when the two shape encodings agree under i <-> -I."""
    c = complex_shape(bg, eps)
    m = clifford_shape(bg, eps)
    tol = 1e-12 * max(1.0, abs(c))
    return abs(m.s - c.real) <= tol and abs(m.i + c.imag) <= tol


__all__ = [
    "Vec2", "BasicGesture", "complex_of_vec", "vec_of_complex",
    "complex_quotient", "complex_shape", "clifford_shape", "lsd", "lsd_dot",
    "weighted_shape", "clifford_shape_matches_complex", "DEGENERACY_EPS",
]
