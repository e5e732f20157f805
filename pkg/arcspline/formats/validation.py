import math
from typing import List, Sequence

from arcspline.formats.schemas import PointModel
from arcspline.models.types import TWO_PI, ValidationIssue, ValidationReport


def _point_checks(idx: int, p: PointModel, theta: float) -> List[ValidationIssue]:
    issues: List[ValidationIssue] = []
    for name, value in (("x", p.x), ("y", p.y), ("theta", theta)):
        if not math.isfinite(value):
            issues.append(ValidationIssue("NON_FINITE", f"vertex {idx}: {name} is not finite ({value!r})"))
    if math.isfinite(theta) and not abs(theta) < TWO_PI:
        issues.append(ValidationIssue("THETA_RANGE", f"vertex {idx}: theta {theta!r} rad outside (-2pi, 2pi)"))
    return issues


def validate_points(points: Sequence[PointModel], thetas: Sequence[float], *, closed: bool) -> ValidationReport:
    """Rule checks on document points.

    `thetas` are the segment angles in radians after unit conversion, one per
    segment (so one fewer than points for open curves).
    """
    issues: List[ValidationIssue] = []
    if not points:
        issues.append(ValidationIssue("EMPTY_DOCUMENT", "document has no points"))
        return ValidationReport(status="invalid", issues=issues)

    n = len(points)
    for idx, p in enumerate(points):
        # an open curve's trailing theta has no segment; only its finiteness is checked
        theta = thetas[idx] if idx < len(thetas) else (0.0 if math.isfinite(p.theta) else p.theta)
        issues.extend(_point_checks(idx, p, theta))

    for idx, theta in enumerate(thetas):
        a, b = points[idx], points[(idx + 1) % n]
        if theta != 0.0 and a.x == b.x and a.y == b.y:
            issues.append(
                ValidationIssue("COINCIDENT_ARC", f"vertex {idx}: coincident with vertex {(idx + 1) % n} but theta != 0")
            )

    return ValidationReport(status="valid" if not issues else "invalid", issues=issues)
