"""
Planar vector algebra with the skew-orthogonal operator.

`tilde` rotates a vector by +pi/2 (the complex structure J), and
`skew(a, b) = dot(tilde(a), b)` is the signed area of the parallelogram
spanned by a and b. Everything else in the package is written in terms of
these two operations plus the ordinary scalar product.

Inputs are not validated here; callers reject non-finite values at the
package boundary.
"""

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class Vec2:
    x: float
    y: float

    def __add__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "Vec2":
        return Vec2(-self.x, -self.y)

    def __mul__(self, s: float) -> "Vec2":
        return Vec2(self.x * s, self.y * s)

    __rmul__ = __mul__

    def __truediv__(self, s: float) -> "Vec2":
        return Vec2(self.x / s, self.y / s)

    def as_tuple(self) -> tuple:
        return (self.x, self.y)


ZERO = Vec2(0.0, 0.0)


def tilde(a: Vec2) -> Vec2:
    """Skew-orthogonal complement (-a.y, a.x)."""
    return Vec2(-a.y, a.x)


def dot(a: Vec2, b: Vec2) -> float:
    return a.x * b.x + a.y * b.y


def skew(a: Vec2, b: Vec2) -> float:
    """Skew-scalar product a.x*b.y - a.y*b.x."""
    return a.x * b.y - a.y * b.x


def rotate(a: Vec2, alpha: float) -> Vec2:
    """Rotate `a` by `alpha` radians: cos(alpha)*a + sin(alpha)*tilde(a)."""
    ca = math.cos(alpha)
    sa = math.sin(alpha)
    return Vec2(ca * a.x - sa * a.y, ca * a.y + sa * a.x)


def norm(a: Vec2) -> float:
    return math.hypot(a.x, a.y)
