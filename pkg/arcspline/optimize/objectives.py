"""
Smoothing criteria for the arc-spline family of a polygon.

The family parameter is the first segment's angle theta0. Three criteria
pick one member: total length, areal difference to the polygon (sum of
|segment area|) and total bending energy. Start angles outside
(-2pi, 2pi) are complement-normalized first; a start angle that lands on a
degenerate full circle scores +inf so the search simply moves away from it.
"""

import logging
import math
from typing import Optional

import numpy as np

from arcspline.errors import ArcDomainError
from arcspline.geometry.arc import arc_length_array, bending_energy_array, segment_area_array
from arcspline.geometry.polycurve import (
    complement_angle,
    propagate,
    total_abs_area,
    total_energy,
    total_length,
)
from arcspline.geometry.symplectic2d import norm
from arcspline.models.types import (
    TWO_PI,
    GssConfig,
    Objective,
    Polyarc,
    SmoothResult,
    SplineFamily,
    SplineMetrics,
)
from arcspline.optimize.golden import gss_run

logger = logging.getLogger(__name__)

FOUR_PI = 4.0 * math.pi


def spline_metrics(pa: Polyarc, ei: float = 1.0) -> SplineMetrics:
    return SplineMetrics(length=total_length(pa), area=total_abs_area(pa), energy=total_energy(pa, ei))


def evaluate(pa: Polyarc, obj: Objective, ei: float = 1.0) -> float:
    if obj is Objective.LENGTH:
        return total_length(pa)
    if obj is Objective.AREA:
        return total_abs_area(pa)
    return total_energy(pa, ei)


def objective_value(family: SplineFamily, theta0: float, obj: Objective, ei: float = 1.0) -> float:
    try:
        spline = propagate(family, complement_angle(theta0))
    except ArcDomainError:
        return math.inf
    return evaluate(spline, obj, ei)


def _complement_array(theta: np.ndarray) -> np.ndarray:
    wrapped = theta - FOUR_PI * np.round(theta / FOUR_PI)
    return np.where(np.abs(theta) < TWO_PI, theta, wrapped)


def scan_objective(family: SplineFamily, obj: Objective, theta0s: np.ndarray, ei: float = 1.0) -> np.ndarray:
    """Objective values for every theta0 in `theta0s` (vectorised over the grid)."""
    if not ei > 0.0:
        raise ArcDomainError("bending rigidity EI must be positive")
    theta0s = np.asarray(theta0s, dtype=float)
    n = family.segment_count
    thetas = np.empty((n, theta0s.size))
    thetas[0] = _complement_array(theta0s)
    for i in range(1, n):
        thetas[i] = _complement_array(-thetas[i - 1] + 2.0 * family.gammas[i - 1])
    degenerate = np.any(np.abs(thetas) >= TWO_PI, axis=0)
    verts = family.vertices
    c_len = np.array([norm(verts[(i + 1) % len(verts)] - verts[i]) for i in range(n)])[:, None]
    if obj is Objective.LENGTH:
        terms = arc_length_array(c_len, thetas)
    elif obj is Objective.AREA:
        terms = np.abs(segment_area_array(c_len, thetas))
    else:
        terms = bending_energy_array(c_len, thetas, ei)
    values = terms.sum(axis=0)
    return np.where(degenerate, np.inf, values)


def smooth(
    family: SplineFamily,
    obj: Objective,
    cfg: Optional[GssConfig] = None,
    ei: float = 1.0,
) -> SmoothResult:
    """Pick the family member that minimizes `obj` by golden-section search on theta0."""
    if family.segment_count < 2:
        raise ArcDomainError("smoothing needs a polygon with at least two segments")
    cfg = cfg or GssConfig()
    search = gss_run(lambda t: objective_value(family, t, obj, ei), cfg)
    theta0 = complement_angle(search.x)
    spline = propagate(family, theta0)
    report = spline_metrics(spline, ei)
    logger.info(
        "smooth[%s]: theta0=%.6g rad, L=%.6g, A=%.6g, U=%.6g",
        obj.value, theta0, report.length, report.area, report.energy,
    )
    return SmoothResult(objective=obj, theta0=theta0, spline=spline, report=report, search=search)
