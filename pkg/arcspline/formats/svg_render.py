"""
SVG rendering of polyarcs.

Geometry is written in mathematical (y-up) coordinates inside a group that
flips the y axis, so arc flags are computed in the same frame the curve is
defined in. Arcs become elliptical-arc commands with rx = ry = |R|; the sweep
flag is picked by checking which of the two candidate arcs passes through
the segment midpoint.
"""

import math
from dataclasses import dataclass
from typing import Any, List, Mapping, Optional, Sequence, Tuple

import numpy as np
import svgwrite

from arcspline.config import load_config
from arcspline.geometry.arc import point_at, radius
from arcspline.geometry.polycurve import sample, segments
from arcspline.geometry.symplectic2d import Vec2, norm
from arcspline.models.types import TWO_PI, ArcSeg, Polyarc

# Below this |theta| a segment is drawn as a straight line.
LINE_THETA = 1e-6
# Above this |theta| a segment is split into two half-arcs.
NEAR_FULL_THETA = TWO_PI - 0.01


@dataclass(frozen=True)
class RenderOptions:
    stroke_width: float = 1.5
    padding: float = 0.05
    samples_per_arc: int = 48
    canvas_width: int = 800
    stroke: str = "black"
    use_arc_commands: bool = True
    y_up: bool = True

    def __post_init__(self) -> None:
        if not self.stroke_width > 0.0:
            raise ValueError("stroke_width must be positive")
        if not self.padding > 0.0:
            raise ValueError("padding must be positive")
        if self.samples_per_arc < 2:
            raise ValueError("samples_per_arc must be at least 2")
        if self.canvas_width <= 0:
            raise ValueError("canvas_width must be positive")

    @classmethod
    def from_mapping(cls, cfg: Mapping[str, Any]) -> "RenderOptions":
        return cls(
            stroke_width=float(cfg.get("stroke_width", 1.5)),
            padding=float(cfg.get("padding", 0.05)),
            samples_per_arc=int(cfg.get("samples_per_arc", 48)),
            canvas_width=int(cfg.get("canvas_width", 800)),
            stroke=str(cfg.get("stroke", "black")),
            use_arc_commands=bool(cfg.get("use_arc_commands", True)),
        )

    @classmethod
    def from_config(cls, path: Optional[str] = None) -> "RenderOptions":
        return cls.from_mapping(load_config("render", path))


def _num(v: float) -> str:
    # shortest repr that round-trips; keeps output byte-stable
    v = float(v)
    return "0" if v == 0.0 else repr(v)


def svg_arc_center(p1: Vec2, p2: Vec2, r: float, large: bool, sweep: bool) -> Tuple[Vec2, float, float]:
    """Endpoint-to-center conversion of an SVG arc (circle, no rotation).

    Returns (center, start angle, signed sweep) in the local frame. An
    undersized radius is scaled up the way SVG user agents do.
    """
    hx, hy = 0.5 * (p1.x - p2.x), 0.5 * (p1.y - p2.y)
    d2 = hx * hx + hy * hy
    if d2 == 0.0:
        raise ValueError("arc endpoints coincide")
    r = abs(r)
    if d2 > r * r:
        r = math.sqrt(d2)
    coef = math.sqrt(max(0.0, (r * r - d2) / d2))
    if large == sweep:
        coef = -coef
    cx, cy = coef * hy, -coef * hx
    center = Vec2(cx + 0.5 * (p1.x + p2.x), cy + 0.5 * (p1.y + p2.y))
    start = math.atan2((hy - cy) / r, (hx - cx) / r)
    end = math.atan2((-hy - cy) / r, (-hx - cx) / r)
    delta = math.fmod(end - start, TWO_PI)
    if sweep and delta < 0.0:
        delta += TWO_PI
    elif not sweep and delta > 0.0:
        delta -= TWO_PI
    return center, start, delta


def svg_arc_midpoint(p1: Vec2, p2: Vec2, r: float, large: bool, sweep: bool) -> Vec2:
    center, start, delta = svg_arc_center(p1, p2, r, large, sweep)
    rr = norm(p1 - center)
    mid = start + 0.5 * delta
    return center + rr * Vec2(math.cos(mid), math.sin(mid))


def _arc_commands(seg: ArcSeg) -> List[str]:
    c = seg.chord
    if abs(seg.theta) < LINE_THETA or norm(c) == 0.0:
        return [f"L {_num(seg.b.x)} {_num(seg.b.y)}"]
    if abs(seg.theta) > NEAR_FULL_THETA:
        mid = seg.a + point_at(c, seg.theta, 0.5)
        half = 0.5 * seg.theta
        return _arc_commands(ArcSeg(seg.a, mid, half)) + _arc_commands(ArcSeg(mid, seg.b, half))

    r = abs(radius(norm(c), seg.theta))
    large = abs(seg.theta) > math.pi
    target = seg.a + point_at(c, seg.theta, 0.5)
    sweep = min(
        (False, True),
        key=lambda s: norm(svg_arc_midpoint(seg.a, seg.b, r, large, s) - target),
    )
    return [f"A {_num(r)} {_num(r)} 0 {int(large)} {int(sweep)} {_num(seg.b.x)} {_num(seg.b.y)}"]


def path_data(pa: Polyarc, opts: RenderOptions) -> str:
    """The `d` attribute drawing `pa` as one subpath."""
    start = pa.vertices[0]
    cmds = [f"M {_num(start.x)} {_num(start.y)}"]
    if opts.use_arc_commands:
        for seg in segments(pa):
            cmds.extend(_arc_commands(seg))
    else:
        pts = sample(pa, opts.samples_per_arc) if pa.segment_count else [start]
        cmds.extend(f"L {_num(p.x)} {_num(p.y)}" for p in pts[1:])
    if pa.closed and pa.segment_count:
        cmds.append("Z")
    return " ".join(cmds)


def _bounds(curves: Sequence[Polyarc], polygon: Optional[Sequence[Vec2]], samples: int) -> np.ndarray:
    pts: List[Tuple[float, float]] = []
    for pa in curves:
        drawn = sample(pa, samples) if pa.segment_count else list(pa.vertices)
        pts.extend(p.as_tuple() for p in drawn)
    if polygon:
        pts.extend(p.as_tuple() for p in polygon)
    arr = np.asarray(pts, dtype=float)
    return np.array([arr.min(axis=0), arr.max(axis=0)])


def render_family_svg(
    curves: Sequence[Polyarc],
    opts: Optional[RenderOptions] = None,
    polygon: Optional[Sequence[Vec2]] = None,
) -> str:
    """One SVG document with a path per curve, plus an optional dashed base polygon."""
    opts = opts or RenderOptions()
    if not curves:
        raise ValueError("nothing to render")

    (xmin, ymin), (xmax, ymax) = _bounds(curves, polygon, opts.samples_per_arc)
    extent = max(xmax - xmin, ymax - ymin) or 1.0
    pad = opts.padding * extent
    vb_w = (xmax - xmin) + 2.0 * pad
    vb_h = (ymax - ymin) + 2.0 * pad
    vb_x = xmin - pad
    vb_y = -(ymax + pad) if opts.y_up else ymin - pad

    height = max(1, int(round(opts.canvas_width * vb_h / vb_w)))
    dwg = svgwrite.Drawing(size=(opts.canvas_width, height), profile="full", debug=False)
    dwg.attribs["viewBox"] = f"{_num(vb_x)} {_num(vb_y)} {_num(vb_w)} {_num(vb_h)}"

    g = dwg.g(id="polyarcs", fill="none")
    if opts.y_up:
        g.scale(1, -1)
    if polygon:
        g.add(
            dwg.polyline(
                points=[p.as_tuple() for p in polygon],
                stroke="gray",
                stroke_width=opts.stroke_width,
                stroke_dasharray="4 3",
                vector_effect="non-scaling-stroke",
            )
        )
    for pa in curves:
        g.add(
            dwg.path(
                d=path_data(pa, opts),
                stroke=opts.stroke,
                stroke_width=opts.stroke_width,
                stroke_linejoin="round",
                vector_effect="non-scaling-stroke",
            )
        )
    dwg.add(g)
    return dwg.tostring()


def render_svg(pa: Polyarc, opts: Optional[RenderOptions] = None) -> str:
    return render_family_svg([pa], opts)
