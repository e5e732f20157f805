"""
Polyarcs and arc splines over polygonal curves.

A polyarc only shares join points between neighbouring arcs (G0). An arc
spline additionally shares tangents (G1); over a fixed polygon the arc
splines form a one-parameter family: fixing the angle of one segment fixes
all others through theta_i = -theta_{i-1} + 2*gamma_i, where gamma_i is the
exterior angle at the join.
"""

import logging
import math
from typing import List, Optional, Sequence

import numpy as np

from arcspline.errors import ArcDomainError
from arcspline.geometry.arc import (
    arc_length,
    bending_energy,
    end_tangent,
    sample_points,
    segment_area,
    start_tangent,
)
from arcspline.geometry.symplectic2d import Vec2, dot, norm, skew
from arcspline.models.types import TWO_PI, ArcSeg, Polyarc, SplineFamily

logger = logging.getLogger(__name__)

FOUR_PI = 4.0 * math.pi


def segments(pa: Polyarc) -> List[ArcSeg]:
    out: List[ArcSeg] = []
    for i, theta in enumerate(pa.thetas):
        a, b = pa.endpoints(i)
        out.append(ArcSeg(a, b, theta))
    return out


def total_length(pa: Polyarc) -> float:
    return sum(arc_length(norm(s.chord), s.theta, 1.0) for s in segments(pa))


def _shoelace(pa: Polyarc) -> float:
    # Open curves are closed by their chord p_n -> p_0.
    verts = pa.vertices
    n = len(verts)
    return 0.5 * sum(skew(verts[i], verts[(i + 1) % n]) for i in range(n))


def total_area(pa: Polyarc) -> float:
    """Signed area: polygon shoelace plus every arc segment area (CCW positive)."""
    return _shoelace(pa) + sum(segment_area(norm(s.chord), s.theta) for s in segments(pa))


def total_abs_area(pa: Polyarc) -> float:
    """Sum of |segment area|, i.e. the areal difference to the polygon."""
    return sum(abs(segment_area(norm(s.chord), s.theta)) for s in segments(pa))


def total_energy(pa: Polyarc, ei: float = 1.0) -> float:
    return sum(bending_energy(norm(s.chord), s.theta, ei) for s in segments(pa) if s.theta != 0.0)


def exterior_angle(c_prev: Vec2, c_next: Vec2) -> float:
    """Turning angle from c_prev to c_next in (-pi, pi]; a reversal maps to +pi."""
    if norm(c_prev) == 0.0 or norm(c_next) == 0.0:
        raise ArcDomainError("exterior angle of a zero edge is undefined")
    gamma = math.atan2(skew(c_prev, c_next), dot(c_prev, c_next))
    if gamma == -math.pi:
        gamma = math.pi
    return gamma


def complement_angle(theta: float) -> float:
    """Map theta into [-2pi, 2pi] by whole multiples of 4pi."""
    if abs(theta) < TWO_PI:
        return theta
    return math.remainder(theta, FOUR_PI)


def make_family(vertices: Sequence[Vec2], closed: bool = False) -> SplineFamily:
    verts = tuple(vertices)
    if len(verts) < 2:
        raise ArcDomainError("a spline family needs at least two vertices")
    n = len(verts)
    seg_count = n if closed else n - 1
    edges = [verts[(i + 1) % n] - verts[i] for i in range(seg_count)]
    for i, e in enumerate(edges):
        if norm(e) == 0.0:
            raise ArcDomainError(f"repeated consecutive vertex at index {(i + 1) % n}")
    gammas = tuple(exterior_angle(edges[i - 1], edges[i]) for i in range(1, seg_count))
    closing = exterior_angle(edges[-1], edges[0]) if closed else None
    return SplineFamily(vertices=verts, closed=closed, gammas=gammas, closing_gamma=closing)


def _normalized(theta: float, index: int) -> float:
    out = complement_angle(theta)
    if out != theta:
        logger.debug("segment %d: complement %.17g -> %.17g", index, theta, out)
    if not abs(out) < TWO_PI:
        raise ArcDomainError(f"segment {index}: propagated angle is a degenerate full circle")
    return out


def propagate(family: SplineFamily, theta0: float, anchor: int = 0) -> Polyarc:
    """Arc spline of the family whose segment `anchor` has angle `theta0`."""
    n = family.segment_count
    if not abs(theta0) < TWO_PI:
        raise ArcDomainError(f"theta0 {theta0!r} outside (-2pi, 2pi)")
    if not 0 <= anchor < n:
        raise ArcDomainError(f"anchor {anchor} outside 0..{n - 1}")
    thetas = [0.0] * n
    thetas[anchor] = theta0
    # gammas[i-1] sits between segments i-1 and i
    for i in range(anchor + 1, n):
        thetas[i] = _normalized(-thetas[i - 1] + 2.0 * family.gammas[i - 1], i)
    for i in range(anchor - 1, -1, -1):
        thetas[i] = _normalized(-thetas[i + 1] + 2.0 * family.gammas[i], i)
    return Polyarc(family.vertices, tuple(thetas), family.closed)


def _join_defect(prev: ArcSeg, nxt: ArcSeg) -> float:
    return norm(end_tangent(prev.chord, prev.theta) - start_tangent(nxt.chord, nxt.theta))


def g1_defect(pa: Polyarc) -> float:
    """Largest tangent mismatch over interior joins; 0 when there are none.

    The closing join of a closed curve is excluded, see `closing_g1_defect`.
    """
    segs = segments(pa)
    return max((_join_defect(segs[i - 1], segs[i]) for i in range(1, len(segs))), default=0.0)


def closing_g1_defect(pa: Polyarc) -> Optional[float]:
    if not pa.closed or pa.segment_count < 2:
        return None
    segs = segments(pa)
    return _join_defect(segs[-1], segs[0])


def sample(pa: Polyarc, points_per_segment: int) -> List[Vec2]:
    """Points along the curve, uniform in arc length per segment."""
    if points_per_segment < 2:
        raise ArcDomainError("points_per_segment must be at least 2")
    u = np.linspace(0.0, 1.0, points_per_segment)
    out: List[Vec2] = [pa.vertices[0]]
    for seg in segments(pa):
        rel = sample_points(seg.chord, seg.theta, u[1:-1])
        out.extend(Vec2(seg.a.x + float(x), seg.a.y + float(y)) for x, y in rel)
        out.append(seg.b)
    return out
