"""
Polyarc JSON documents.

A document is either the bare triple list

    [ {"x": x1, "y": y1, "theta": t1}, ..., {"x": xn, "y": yn, "theta": tn} ]

(open curve, radians) or an object carrying metadata:

    {"closed": true, "angle_unit": "degrees", "units": "mm", "points": [...]}

theta on point i belongs to the arc from point i to point i+1. A closed
curve's last theta belongs to the closing arc back to the first point; on an
open curve it has no segment and is ignored.
"""

import json
import logging
import math
from typing import Optional, Union

from pydantic import ValidationError

from arcspline.errors import ParseError, PolyarcValidationError
from arcspline.formats.schemas import PolyarcDocument
from arcspline.formats.validation import validate_points
from arcspline.geometry.symplectic2d import Vec2
from arcspline.models.types import Polyarc, ValidationIssue

logger = logging.getLogger(__name__)


def load_document(text: Union[str, bytes]) -> PolyarcDocument:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ParseError(f"document is not UTF-8: {e}") from e
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, e.colno) from e

    if isinstance(payload, list):
        payload = {"points": payload}
    if not isinstance(payload, dict):
        raise PolyarcValidationError(
            [ValidationIssue("SCHEMA", "top level must be an object or an array of points")]
        )
    try:
        return PolyarcDocument.model_validate(payload)
    except ValidationError as e:
        issues = [
            ValidationIssue("SCHEMA", f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}")
            for err in e.errors()
        ]
        raise PolyarcValidationError(issues) from e


def parse_polyarc(
    text: Union[str, bytes],
    *,
    degrees: Optional[bool] = None,
    closed: Optional[bool] = None,
) -> Polyarc:
    """Parse and validate a polyarc document.

    `degrees` and `closed` override the document's own flags when given.
    """
    doc = load_document(text)
    is_closed = doc.closed if closed is None else closed
    in_degrees = (doc.angle_unit == "degrees") if degrees is None else degrees

    raw = [p.theta for p in doc.points]
    if in_degrees:
        raw = [math.radians(t) for t in raw]
    seg_count = len(raw) if is_closed else max(len(raw) - 1, 0)
    thetas = raw[:seg_count]
    if not is_closed and raw and raw[-1] != 0.0:
        logger.warning("open polyarc: ignoring theta=%r on the last point (no segment follows it)", doc.points[-1].theta)

    report = validate_points(doc.points, thetas, closed=is_closed)
    if report.issues:
        raise PolyarcValidationError(report.issues)

    return Polyarc(tuple(Vec2(p.x, p.y) for p in doc.points), tuple(thetas), is_closed, doc.units)


def emit_polyarc(pa: Polyarc, angle_unit: str = "radians", units: Optional[str] = None) -> str:
    if angle_unit not in ("radians", "degrees"):
        raise ValueError(f"unknown angle unit: {angle_unit!r}")
    units = units if units is not None else pa.units
    convert = math.degrees if angle_unit == "degrees" else float
    thetas = list(pa.thetas)
    if not pa.closed:
        thetas.append(0.0)
    doc = {
        "closed": pa.closed,
        "angle_unit": angle_unit,
        "points": [{"x": v.x, "y": v.y, "theta": convert(t)} for v, t in zip(pa.vertices, thetas)],
    }
    if units is not None:
        doc["units"] = units
    # json writes floats with the shortest repr that round-trips exactly
    return json.dumps(doc, indent=2) + "\n"
