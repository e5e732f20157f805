import math
import re
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from arcspline.formats.svg_render import RenderOptions, path_data, render_family_svg, render_svg
from arcspline.geometry.arc import point_at
from arcspline.geometry.symplectic2d import Vec2, norm, tilde
from arcspline.models.types import Polyarc

PI = math.pi
SVG_NS = "{http://www.w3.org/2000/svg}"
SQUARE = (Vec2(0, 0), Vec2(1, 0), Vec2(1, 1), Vec2(0, 1))


def parse_commands(d: str):
    """[(letter, [numbers...]), ...] for a path string of M, L, A and Z commands."""
    out = []
    for letter, body in re.findall(r"([MLAZ])([^MLAZ]*)", d):
        out.append((letter, [float(t) for t in body.split()]))
    return out


def arc_pieces(d: str):
    """(start, r, large, sweep, end) for every A command, tracking the current point."""
    pieces = []
    current = None
    for letter, nums in parse_commands(d):
        if letter in "ML":
            current = Vec2(nums[0], nums[1])
        elif letter == "A":
            end = Vec2(nums[5], nums[6])
            pieces.append((current, nums[0], bool(nums[3]), bool(nums[4]), end))
            current = end
    return pieces


def on_arc(p: Vec2, start: Vec2, r: float, large: bool, sweep: bool, end: Vec2) -> bool:
    """Whether p lies on the SVG arc (circle, y-up local frame) within 1e-6 r."""
    chord = end - start
    d = norm(chord)
    h = math.sqrt(max(0.0, r * r - 0.25 * d * d))
    # centre left of the chord iff the flags differ
    side = 1.0 if large != sweep else -1.0
    center = 0.5 * (start + end) + (side * h / d) * tilde(chord)
    if abs(norm(p - center) - r) > 1e-6 * r:
        return False
    minor = 2.0 * math.asin(min(1.0, d / (2.0 * r)))
    extent = 2.0 * PI - minor if large else minor
    a0 = math.atan2(start.y - center.y, start.x - center.x)
    ap = math.atan2(p.y - center.y, p.x - center.x)
    offset = (ap - a0) % (2.0 * PI) if sweep else (a0 - ap) % (2.0 * PI)
    return offset <= extent + 1e-9 or offset >= 2.0 * PI - 1e-9


class TestRenderOptions:
    def test_defaults(self):
        opts = RenderOptions()
        assert opts.stroke_width == 1.5
        assert opts.padding == 0.05
        assert opts.samples_per_arc == 48
        assert opts.use_arc_commands

    @pytest.mark.parametrize(
        "kwargs",
        [{"stroke_width": 0.0}, {"padding": -0.1}, {"padding": 0.0}, {"samples_per_arc": 1}, {"canvas_width": 0}],
    )
    def test_validation(self, kwargs):
        with pytest.raises(ValueError):
            RenderOptions(**kwargs)

    def test_from_mapping(self):
        opts = RenderOptions.from_mapping({"stroke_width": 2, "use_arc_commands": False, "samples_per_arc": 8})
        assert opts.stroke_width == 2.0
        assert not opts.use_arc_commands
        assert opts.samples_per_arc == 8
        assert opts.padding == 0.05


class TestPathData:
    def test_semicircle_single_arc(self):
        d = path_data(Polyarc((Vec2(-1, 0), Vec2(1, 0)), (PI,)), RenderOptions())
        cmds = parse_commands(d)
        assert [c[0] for c in cmds] == ["M", "A"]
        r, _, _, large, _, x, y = cmds[1][1]
        assert r == pytest.approx(1.0, rel=1e-12)
        assert large == 0
        assert (x, y) == (1.0, 0.0)
        (piece,) = arc_pieces(d)
        assert on_arc(Vec2(0, -1), *piece)
        assert not on_arc(Vec2(0, 1), *piece)

    def test_square_is_lines_only(self):
        d = path_data(Polyarc.from_polygon(SQUARE, closed=True), RenderOptions())
        letters = [c[0] for c in parse_commands(d)]
        assert letters == ["M", "L", "L", "L", "L", "Z"]

    def test_large_arc_flag(self):
        d = path_data(Polyarc((Vec2(0, 0), Vec2(1, 0)), (1.5 * PI,)), RenderOptions())
        (piece,) = arc_pieces(d)
        assert piece[2] is True

    def test_tiny_angle_is_a_line(self):
        d = path_data(Polyarc((Vec2(0, 0), Vec2(1, 0)), (5e-7,)), RenderOptions())
        assert [c[0] for c in parse_commands(d)] == ["M", "L"]

    def test_near_full_circle_is_split(self):
        theta = 2 * PI - 0.005
        d = path_data(Polyarc((Vec2(0, 0), Vec2(1, 0)), (theta,)), RenderOptions())
        pieces = arc_pieces(d)
        assert len(pieces) == 2
        assert all(not large for _, _, large, _, _ in pieces)

    def test_fallback_uses_samples(self):
        pa = Polyarc((Vec2(-1, 0), Vec2(1, 0), Vec2(2, 1)), (PI, 0.5))
        d = path_data(pa, RenderOptions(use_arc_commands=False, samples_per_arc=5))
        cmds = parse_commands(d)
        assert [c[0] for c in cmds] == ["M"] + ["L"] * 8
        assert cmds[2][1] == pytest.approx([0.0, -1.0], abs=1e-12)

    def test_single_vertex(self):
        assert path_data(Polyarc((Vec2(3, 4),), ()), RenderOptions()) == "M 3.0 4.0"


def test_flags_select_the_right_arc():
    rng = np.random.default_rng(314)
    for _ in range(1000):
        length = rng.uniform(0.1, 100.0)
        direction = rng.uniform(-PI, PI)
        a = Vec2(*rng.uniform(-50.0, 50.0, 2))
        c = Vec2(length * math.cos(direction), length * math.sin(direction))
        theta = rng.uniform(1e-6, 2 * PI - 0.01) * rng.choice([-1.0, 1.0])
        pa = Polyarc((a, a + c), (float(theta),))
        pieces = arc_pieces(path_data(pa, RenderOptions()))
        assert pieces
        for u in (0.25, 0.5, 0.75):
            p = a + point_at(c, float(theta), u)
            assert any(on_arc(p, *piece) for piece in pieces), (theta, u)


class TestDocument:
    def test_flip_and_viewbox(self):
        svg = render_svg(Polyarc.from_polygon(SQUARE, closed=True))
        root = ET.fromstring(svg)
        assert root.tag == f"{SVG_NS}svg"
        vb = [float(v) for v in root.attrib["viewBox"].split()]
        # unit square padded by 5% of the extent, y flipped
        assert vb == pytest.approx([-0.05, -1.05, 1.1, 1.1], abs=1e-12)
        group = root.find(f"{SVG_NS}g")
        assert group.attrib["transform"].replace(" ", "") == "scale(1,-1)"
        assert group.attrib["fill"] == "none"
        paths = group.findall(f"{SVG_NS}path")
        assert len(paths) == 1
        assert paths[0].attrib["vector-effect"] == "non-scaling-stroke"

    def test_family_one_path_per_curve_plus_polygon(self):
        curves = [Polyarc((Vec2(0, 0), Vec2(1, 0)), (t,)) for t in (-1.0, 0.0, 1.0)]
        svg = render_family_svg(curves, RenderOptions(), polygon=[Vec2(0, 0), Vec2(1, 0)])
        root = ET.fromstring(svg)
        group = root.find(f"{SVG_NS}g")
        assert len(group.findall(f"{SVG_NS}path")) == 3
        polyline = group.find(f"{SVG_NS}polyline")
        assert polyline is not None
        assert "stroke-dasharray" in polyline.attrib

    def test_y_down_option(self):
        svg = render_svg(Polyarc.from_polygon(SQUARE, closed=True), RenderOptions(y_up=False))
        root = ET.fromstring(svg)
        assert "transform" not in root.find(f"{SVG_NS}g").attrib
        vb = [float(v) for v in root.attrib["viewBox"].split()]
        assert vb[1] == pytest.approx(-0.05, abs=1e-12)

    def test_deterministic(self):
        pa = Polyarc(SQUARE, (0.3, -0.2, 1.0, 0.0), closed=True)
        assert render_svg(pa) == render_svg(pa)

    def test_empty_family(self):
        with pytest.raises(ValueError):
            render_family_svg([])
