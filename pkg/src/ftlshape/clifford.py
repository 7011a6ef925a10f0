"""Arithmetic in the Clifford algebra of the Euclidean plane.

The algebra is four dimensional over the reals with basis {1, e1, e2, I},
where I = e1 e2.  The product is generated by the rule v v = v . v for
plane vectors, which forces

    e1 e1 = e2 e2 = 1,    e1 e2 = -e2 e1 = I,    I I = -1,
    e1 I = e2,            e2 I = -e1.

A general element is stored as the four coefficients (s, x, y, i) in that
fixed order: scalar, e1, e2, pseudoscalar.  All operations are pure
functions on immutable values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NotAVector, ZeroVector

# Relative threshold below which a vector counts as zero for inversion.
ZERO_EPS = 1e-12


@dataclass(frozen=True)
class Multivector:
    """Element s + x*e1 + y*e2 + i*I of the plane Clifford algebra."""

    s: float = 0.0
    x: float = 0.0
    y: float = 0.0
    i: float = 0.0

    @classmethod
    def scalar(cls, value: float) -> "Multivector":
        return cls(s=float(value))

    @classmethod
    def vector(cls, x: float, y: float) -> "Multivector":
        return cls(x=float(x), y=float(y))

    @classmethod
    def pseudoscalar(cls, value: float) -> "Multivector":
        return cls(i=float(value))

    def is_vector(self) -> bool:
        """Pure grade-1 element: no scalar and no pseudoscalar part."""
        return self.s == 0.0 and self.i == 0.0

    def is_even(self) -> bool:
        """Element of the even subalgebra (the complex-like ones)."""
        return self.x == 0.0 and self.y == 0.0

    def __add__(self, other: "Multivector") -> "Multivector":
        return Multivector(self.s + other.s, self.x + other.x,
                           self.y + other.y, self.i + other.i)

    def __sub__(self, other: "Multivector") -> "Multivector":
        return Multivector(self.s - other.s, self.x - other.x,
                           self.y - other.y, self.i - other.i)

    def __neg__(self) -> "Multivector":
        return Multivector(-self.s, -self.x, -self.y, -self.i)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        if isinstance(other, (int, float)):
            f = float(other)
            return Multivector(self.s * f, self.x * f, self.y * f, self.i * f)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return self.__mul__(other)
        return NotImplemented

    def to_json(self) -> dict:
        return {"s": self.s, "x": self.x, "y": self.y, "i": self.i}

    @classmethod
    def from_json(cls, obj: dict) -> "Multivector":
        return cls(float(obj["s"]), float(obj["x"]),
                   float(obj["y"]), float(obj["i"]))


ONE = Multivector.scalar(1.0)
E1 = Multivector.vector(1.0, 0.0)
E2 = Multivector.vector(0.0, 1.0)
I = Multivector.pseudoscalar(1.0)


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    """Full associative product, expanded from the basis product table.

    Grade parts: scalar  a.s b.s + a.x b.x + a.y b.y - a.i b.i,
                 vector  cross terms with e1 I = e2 and e2 I = -e1,
                 pseudo  wedge of the vector parts plus scalar/pseudo mixes.
    """
    return Multivector(
        a.s * b.s + a.x * b.x + a.y * b.y - a.i * b.i,
        a.s * b.x + a.x * b.s - a.y * b.i + a.i * b.y,
        a.s * b.y + a.y * b.s + a.x * b.i - a.i * b.x,
        a.s * b.i + a.i * b.s + a.x * b.y - a.y * b.x,
    )


def mv_dot(a: Multivector, b: Multivector) -> float:
    """Positive definite bilinear form: coefficient-wise dot product."""
    return a.s * b.s + a.x * b.x + a.y * b.y + a.i * b.i


def mv_norm(a: Multivector) -> float:
    """Euclidean norm sqrt(mv_dot(a, a)); on pure vectors the plane norm."""
    return math.hypot(a.s, a.x, a.y, a.i)


def wedge(u: Multivector, v: Multivector) -> Multivector:
    """Antisymmetric part (uv - vu)/2 of two pure vectors.

    The result is the pseudoscalar det[[u.x, u.y], [v.x, v.y]] * I.
    """
    if not (u.is_vector() and v.is_vector()):
        raise NotAVector("wedge requires pure vector multivectors")
    return Multivector.pseudoscalar(u.x * v.y - u.y * v.x)


def vector_inverse(v: Multivector, eps: float = ZERO_EPS,
                   scale: float | None = None) -> Multivector:
    """Inverse v / |v|^2 of a nonzero vector.

    `scale` sets the magnitude against which v counts as zero; by default
    the check degenerates to an exact-zero test.
    """
    if not v.is_vector():
        raise NotAVector("vector_inverse requires a pure vector")
    h = math.hypot(v.x, v.y)
    if h == 0.0 or (scale is not None and h <= eps * scale):
        raise ZeroVector("cannot invert a (near-)zero vector")
    # Divide by the norm twice; avoids underflow of |v|^2 for tiny v.
    return Multivector.vector((v.x / h) / h, (v.y / h) / h)


def vector_quotient(u: Multivector, v: Multivector,
                    eps: float = ZERO_EPS) -> Multivector:
    """Quotient u v^{-1}: the even element (u.v + u^v) / |v|^2.

    Raises ZeroVector when |v| is negligible relative to max(|u|, |v|).
    """
    if not (u.is_vector() and v.is_vector()):
        raise NotAVector("vector_quotient requires pure vectors")
    hv = math.hypot(v.x, v.y)
    hu = math.hypot(u.x, u.y)
    if hv == 0.0 or hv <= eps * max(hu, hv):
        raise ZeroVector("quotient denominator is (near-)zero")
    q = hv * hv
    dot = u.x * v.x + u.y * v.y
    wdg = u.x * v.y - u.y * v.x
    return Multivector(s=dot / q, i=wdg / q)
