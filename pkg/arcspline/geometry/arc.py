"""
Single circular arc in endpoint parameterization.

An arc is the chord vector c (start -> end) plus the signed angular range
theta in (-2pi, 2pi). Positive theta sweeps counter-clockwise about the
center. Radius, center, points, length, segment area, bending energy and
tangents are all closed-form functions of (c, theta).

The per-segment measures are implemented once as numpy kernels
(`*_array`) so the same formulas drive scalar calls and the vectorised
objective scans in `arcspline.optimize`.
"""

import math
from typing import Union

import numpy as np

from arcspline.errors import ArcDomainError
from arcspline.geometry.symplectic2d import Vec2, dot, norm, rotate, skew, tilde
from arcspline.models.types import TWO_PI, ArcSeg, CenterParams

ArrayLike = Union[float, np.ndarray]

# Below this |theta| the removable singularity at 0 is replaced by its limit.
SMALL_THETA = 1e-7
# Below this |theta| theta - sin(theta) is summed as a series.
_SERIES_THETA = 0.1


def _check_theta(theta: float) -> None:
    if not abs(theta) < TWO_PI:
        raise ArcDomainError(f"theta {theta!r} outside (-2pi, 2pi)")


def radius(c_len: float, theta: float) -> float:
    """Signed radius R = c / (2 sin(theta/2)); shares the sign of theta."""
    if not c_len > 0.0:
        raise ArcDomainError("radius needs a positive chord length")
    _check_theta(theta)
    if theta == 0.0:
        raise ArcDomainError("theta = 0 is a straight line (infinite radius)")
    return c_len / (2.0 * math.sin(0.5 * theta))


def theta_from_radius(c_len: float, r: float, major: bool = False) -> float:
    """Invert `radius`; `major` selects the complementary arc over the same chord."""
    if not c_len > 0.0:
        raise ArcDomainError("theta_from_radius needs a positive chord length")
    if abs(r) < 0.5 * c_len:
        raise ArcDomainError(f"|r| = {abs(r)!r} below c/2 = {0.5 * c_len!r}: no such circle")
    ratio = min(1.0, c_len / (2.0 * abs(r)))
    minor = 2.0 * math.asin(ratio)
    theta = TWO_PI - minor if major else minor
    return math.copysign(theta, r)


def center_offset(c: Vec2, theta: float) -> Vec2:
    """Radius vector r0 from the center to the start point.

    The center itself is `start - r0`.
    """
    _check_theta(theta)
    if theta == 0.0:
        raise ArcDomainError("theta = 0 has no finite center")
    if norm(c) == 0.0:
        raise ArcDomainError("center_offset needs a non-zero chord")
    s = math.sin(0.5 * theta)
    k = math.cos(0.5 * theta)
    ct = tilde(c)
    return -(s * c + k * ct) / (2.0 * s)


def point_at(c: Vec2, theta: float, u: float) -> Vec2:
    """Point of the arc at parameter u, relative to the start point."""
    _check_theta(theta)
    if not 0.0 <= u <= 1.0:
        raise ArcDomainError(f"u = {u!r} outside [0, 1]")
    ct = tilde(c)
    if abs(theta) < SMALL_THETA:
        return u * (c - (0.5 * (1.0 - u) * theta) * ct)
    h = 0.5 * (1.0 - u) * theta
    scale = math.sin(0.5 * u * theta) / math.sin(0.5 * theta)
    return scale * (math.cos(h) * c - math.sin(h) * ct)


def sample_points(c: Vec2, theta: float, u: np.ndarray) -> np.ndarray:
    """Vectorised `point_at` over an array of parameters; returns shape (k, 2)."""
    _check_theta(theta)
    u = np.asarray(u, dtype=float)
    if u.size and (u.min() < 0.0 or u.max() > 1.0):
        raise ArcDomainError("u outside [0, 1]")
    cv = np.array([c.x, c.y])
    ctv = np.array([-c.y, c.x])
    if abs(theta) < SMALL_THETA:
        return u[:, None] * (cv[None, :] - (0.5 * (1.0 - u) * theta)[:, None] * ctv[None, :])
    h = 0.5 * (1.0 - u) * theta
    scale = np.sin(0.5 * u * theta) / math.sin(0.5 * theta)
    return scale[:, None] * (np.cos(h)[:, None] * cv[None, :] - np.sin(h)[:, None] * ctv[None, :])


def arc_length_array(c_len: ArrayLike, theta: ArrayLike) -> np.ndarray:
    c_len = np.asarray(c_len, dtype=float)
    theta = np.asarray(theta, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        exact = c_len * theta / (2.0 * np.sin(0.5 * theta))
    return np.where(np.abs(theta) < SMALL_THETA, c_len, exact)


def _theta_minus_sin(theta: np.ndarray) -> np.ndarray:
    t2 = theta * theta
    # theta^3/3! - theta^5/5! + ... up to theta^11
    series = theta * t2 * (1 / 6 - t2 * (1 / 120 - t2 * (1 / 5040 - t2 * (1 / 362880 - t2 / 39916800))))
    return np.where(np.abs(theta) < _SERIES_THETA, series, theta - np.sin(theta))


def segment_area_array(c_len: ArrayLike, theta: ArrayLike) -> np.ndarray:
    c_len = np.asarray(c_len, dtype=float)
    theta = np.asarray(theta, dtype=float)
    half = np.sin(0.5 * theta)
    with np.errstate(divide="ignore", invalid="ignore"):
        # 1 - cos(theta) written as 2 sin^2(theta/2)
        exact = 0.25 * c_len * c_len * _theta_minus_sin(theta) / (2.0 * half * half)
    return np.where(np.abs(theta) < SMALL_THETA, c_len * c_len * theta / 12.0, exact)


def bending_energy_array(c_len: ArrayLike, theta: ArrayLike, ei: float = 1.0) -> np.ndarray:
    c_len = np.asarray(c_len, dtype=float)
    theta = np.asarray(theta, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        energy = ei * theta * np.sin(0.5 * theta) / c_len
    return np.where(theta == 0.0, 0.0, energy)


def arc_length(c_len: float, theta: float, u: float = 1.0) -> float:
    """Arc length from the start up to parameter u; never negative."""
    _check_theta(theta)
    if c_len < 0.0:
        raise ArcDomainError("chord length must be non-negative")
    if not 0.0 <= u <= 1.0:
        raise ArcDomainError(f"u = {u!r} outside [0, 1]")
    return u * float(arc_length_array(c_len, theta))


def segment_area(c_len: float, theta: float) -> float:
    """Signed area between the arc and its chord; sign follows theta."""
    _check_theta(theta)
    if c_len < 0.0:
        raise ArcDomainError("chord length must be non-negative")
    return float(segment_area_array(c_len, theta))


def bending_energy(c_len: float, theta: float, ei: float = 1.0) -> float:
    """Strain energy EI*theta*sin(theta/2)/c of the arc bent from a straight beam."""
    _check_theta(theta)
    if not c_len > 0.0:
        raise ArcDomainError("bending energy needs a positive chord length")
    if not ei > 0.0:
        raise ArcDomainError("bending rigidity EI must be positive")
    return float(bending_energy_array(c_len, theta, ei))


def _unit_chord(c: Vec2) -> Vec2:
    c_len = norm(c)
    if c_len == 0.0:
        raise ArcDomainError("tangent of a zero chord is undefined")
    return c / c_len


def start_tangent(c: Vec2, theta: float) -> Vec2:
    """Unit tangent at the start point: unit chord rotated by -theta/2."""
    _check_theta(theta)
    return rotate(_unit_chord(c), -0.5 * theta)


def end_tangent(c: Vec2, theta: float) -> Vec2:
    """Unit tangent at the end point: unit chord rotated by +theta/2."""
    _check_theta(theta)
    return rotate(_unit_chord(c), 0.5 * theta)


def theta_from_tangent(t: Vec2, c: Vec2) -> float:
    """Arc angle over chord c that leaves the start point along t."""
    if norm(t) == 0.0 or norm(c) == 0.0:
        raise ArcDomainError("theta_from_tangent needs non-zero t and c")
    theta = 2.0 * math.atan2(skew(t, c), dot(t, c))
    if not abs(theta) < TWO_PI:
        raise ArcDomainError("tangent opposite to the chord gives a full circle")
    return theta


def to_center_params(arc: ArcSeg) -> CenterParams:
    c = arc.chord
    r0 = center_offset(c, arc.theta)
    return CenterParams(
        center=arc.a - r0,
        radius=abs(radius(norm(c), arc.theta)),
        theta0=math.atan2(r0.y, r0.x),
        theta=arc.theta,
    )


def from_center_params(cp: CenterParams) -> ArcSeg:
    if not cp.radius > 0.0:
        raise ArcDomainError("radius must be positive")
    _check_theta(cp.theta)
    start = cp.center + cp.radius * Vec2(math.cos(cp.theta0), math.sin(cp.theta0))
    end_angle = cp.theta0 + cp.theta
    end = cp.center + cp.radius * Vec2(math.cos(end_angle), math.sin(end_angle))
    return ArcSeg(start, end, cp.theta)
