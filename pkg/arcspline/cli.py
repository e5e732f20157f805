"""
Command-line interface.

    arcspline info FILE
    arcspline spline FILE --theta0 ANGLE [--anchor K]
    arcspline family FILE --from A --to B --step D
    arcspline smooth FILE --objective length|area|energy|all [--lo --up --tol --ei --svg PATH --scan N]
    arcspline sample FILE -n N

Angles on the command line and in written documents are radians unless
--degrees is given. Exit codes: 0 ok, 1 bad input, 2 search failure or usage.
"""

import functools
import logging
import math
from typing import Any, Callable, Dict, List, Optional

import click
import numpy as np

from arcspline.config import load_config
from arcspline.errors import ArcDomainError, GssIterationError, ParseError, PolyarcValidationError
from arcspline.formats.polyarc_json import emit_polyarc, parse_polyarc
from arcspline.formats.svg_render import RenderOptions, render_family_svg, render_svg
from arcspline.geometry.arc import arc_length, bending_energy, radius, segment_area
from arcspline.geometry.polycurve import (
    closing_g1_defect,
    complement_angle,
    g1_defect,
    make_family,
    propagate,
    sample,
    segments,
    total_abs_area,
    total_area,
    total_energy,
    total_length,
)
from arcspline.geometry.symplectic2d import norm
from arcspline.models.types import Objective, Polyarc
from arcspline.optimize.objectives import scan_objective
from arcspline.workflow.smoothing_workflow import SmoothingWorkflow

logger = logging.getLogger(__name__)


def _fmt(v: float) -> str:
    return f"{v:.12g}"


def _common_options(fn: Callable) -> Callable:
    options = [
        click.option("--degrees", is_flag=True, help="Angles on the command line and in written files are degrees."),
        click.option("--closed", "force_closed", is_flag=True, help="Treat the input as a closed curve."),
        click.option("--open", "force_open", is_flag=True, help="Treat the input as an open curve."),
        click.option("-o", "--output", type=click.Path(dir_okay=False), default=None, help="Write the result here."),
        click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None, help="YAML config file."),
        click.option("-v", "--verbose", is_flag=True, help="Debug logging."),
    ]
    for option in reversed(options):
        fn = option(fn)
    return fn


def _handle_errors(fn: Callable) -> Callable:
    @functools.wraps(fn)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        ctx = click.get_current_context()
        try:
            return fn(*args, **kwargs)
        except (ParseError, PolyarcValidationError, ArcDomainError) as e:
            click.echo(f"error: {e}", err=True)
            ctx.exit(1)
        except GssIterationError as e:
            click.echo(f"error: {e}", err=True)
            ctx.exit(2)

    return wrapper


def _setup_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )


def _closed_override(force_closed: bool, force_open: bool) -> Optional[bool]:
    if force_closed and force_open:
        raise click.UsageError("--closed and --open are mutually exclusive")
    if force_closed:
        return True
    if force_open:
        return False
    return None


def _read(stream, degrees: bool, force_closed: bool, force_open: bool) -> Polyarc:
    # --degrees only forces the unit; otherwise the document decides
    return parse_polyarc(
        stream.read(),
        degrees=True if degrees else None,
        closed=_closed_override(force_closed, force_open),
    )


def _write(output: Optional[str], text: str) -> None:
    if output is None:
        click.echo(text, nl=False)
        return
    with open(output, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)


def _angle_in(value: float, degrees: bool) -> float:
    return math.radians(value) if degrees else value


def _angle_out(value: float, degrees: bool) -> float:
    return math.degrees(value) if degrees else value


def _unit(degrees: bool) -> str:
    return "degrees" if degrees else "radians"


@click.group()
def cli() -> None:
    """Circular arcs, polyarcs and smoothest arc splines over polygons."""


@cli.command()
@click.argument("file", type=click.File("rb"))
@_common_options
@_handle_errors
def info(file, degrees, force_closed, force_open, output, config_path, verbose) -> None:
    """Totals and a per-segment table of a polyarc."""
    _setup_logging(verbose)
    ei = float(load_config("smoothing", config_path).get("ei", 1.0))
    pa = _read(file, degrees, force_closed, force_open)

    lines = [
        f"segments        {pa.segment_count}",
        f"closed          {str(pa.closed).lower()}",
        f"total_length    {_fmt(total_length(pa))}",
        f"total_area      {_fmt(total_area(pa))}",
        f"total_abs_area  {_fmt(total_abs_area(pa))}",
        f"total_energy    {_fmt(total_energy(pa, ei))}",
        "",
        "\t".join(["i", "c", "theta", "R", "L", "A", "U"]),
    ]
    for i, seg in enumerate(segments(pa)):
        c_len = norm(seg.chord)
        if seg.theta == 0.0:
            r_text, energy = "inf", 0.0
        else:
            r_text, energy = _fmt(radius(c_len, seg.theta)), bending_energy(c_len, seg.theta, ei)
        row = [
            str(i),
            _fmt(c_len),
            _fmt(_angle_out(seg.theta, degrees)),
            r_text,
            _fmt(arc_length(c_len, seg.theta)),
            _fmt(segment_area(c_len, seg.theta)),
            _fmt(energy),
        ]
        lines.append("\t".join(row))
    _write(output, "\n".join(lines) + "\n")


@cli.command()
@click.argument("file", type=click.File("rb"))
@click.option("--theta0", type=float, required=True, help="Angle of the anchor segment.")
@click.option("--anchor", type=int, default=0, show_default=True, help="Index of the segment --theta0 applies to.")
@_common_options
@_handle_errors
def spline(file, theta0, anchor, degrees, force_closed, force_open, output, config_path, verbose) -> None:
    """The arc spline over the document's vertices with one segment angle fixed."""
    _setup_logging(verbose)
    pa = _read(file, degrees, force_closed, force_open)
    family = make_family(pa.vertices, pa.closed)
    result = propagate(family, _angle_in(theta0, degrees), anchor=anchor)
    doc = emit_polyarc(result, angle_unit=_unit(degrees), units=pa.units)

    report = f"g1_defect {_fmt(g1_defect(result))}"
    closing = closing_g1_defect(result)
    if closing is not None:
        report += f"\nclosing_g1_defect {_fmt(closing)}"
    if output is None:
        click.echo(doc, nl=False)
        click.echo(report, err=True)
    else:
        _write(output, doc)
        click.echo(report)


@cli.command()
@click.argument("file", type=click.File("rb"))
@click.option("--from", "from_", type=float, required=True, help="First theta0.")
@click.option("--to", "to", type=float, required=True, help="Last theta0.")
@click.option("--step", type=float, required=True, help="Spacing of theta0 values.")
@_common_options
@_handle_errors
def family(file, from_, to, step, degrees, force_closed, force_open, output, config_path, verbose) -> None:
    """One SVG with the family member for every theta0 in the range."""
    _setup_logging(verbose)
    if not step > 0.0:
        raise click.BadParameter("must be positive", param_hint="--step")
    if to < from_:
        raise click.BadParameter("must not be below --from", param_hint="--to")
    pa = _read(file, degrees, force_closed, force_open)
    fam = make_family(pa.vertices, pa.closed)

    count = int(round((to - from_) / step)) + 1
    curves: List[Polyarc] = []
    for k in range(count):
        theta0 = _angle_in(from_ + k * step, degrees)
        try:
            curves.append(propagate(fam, complement_angle(theta0)))
        except ArcDomainError as e:
            logger.warning("skipping theta0=%s: %s", _fmt(from_ + k * step), e)
    if not curves:
        raise ArcDomainError("no family member in the requested range is drawable")

    polygon = list(pa.vertices) + ([pa.vertices[0]] if pa.closed else [])
    opts = RenderOptions.from_config(config_path)
    _write(output, render_family_svg(curves, opts, polygon=polygon))


@cli.command()
@click.argument("file", type=click.File("rb"))
@click.option(
    "--objective",
    type=click.Choice([o.value for o in Objective] + ["all"]),
    default="length",
    show_default=True,
)
@click.option("--lo", type=float, default=None, help="Lower search bound (config default -344 deg).")
@click.option("--up", type=float, default=None, help="Upper search bound (config default 344 deg).")
@click.option("--tol", type=float, default=None, help="Bracket width to stop at (config default 0.6 deg).")
@click.option("--ei", type=float, default=None, help="Bending rigidity for the energy criterion.")
@click.option("--svg", "svg_path", type=click.Path(dir_okay=False), default=None, help="Also draw the result.")
@click.option("--scan", type=int, default=None, help="Print the objective on N grid points instead of searching.")
@_common_options
@_handle_errors
def smooth(
    file, objective, lo, up, tol, ei, svg_path, scan, degrees, force_closed, force_open, output, config_path, verbose
) -> None:
    """Smoothest arc spline over the document's vertices."""
    _setup_logging(verbose)
    objectives = list(Objective) if objective == "all" else [Objective(objective)]
    if output is not None and len(objectives) > 1:
        raise click.UsageError("-o writes a single spline; pick one --objective")

    cfg: Dict[str, Any] = dict(load_config("smoothing", config_path))
    for key, value in (("lo_deg", lo), ("up_deg", up), ("tol_deg", tol)):
        if value is not None:
            cfg[key] = value if degrees else math.degrees(value)
    if ei is not None:
        cfg["ei"] = ei
    try:
        workflow = SmoothingWorkflow(config=cfg)
    except ArcDomainError:
        raise
    except ValueError as e:
        raise click.UsageError(str(e)) from e

    pa = _read(file, degrees, force_closed, force_open)
    fam = make_family(pa.vertices, pa.closed)

    if scan is not None:
        if scan < 2:
            raise click.BadParameter("must be at least 2", param_hint="--scan")
        grid = np.linspace(workflow.search.lo, workflow.search.up, scan)
        columns = [scan_objective(fam, obj, grid, workflow.ei) for obj in objectives]
        lines = ["\t".join(["theta0"] + [o.value for o in objectives])]
        for k, theta0 in enumerate(grid):
            lines.append("\t".join([_fmt(_angle_out(float(theta0), degrees))] + [_fmt(float(c[k])) for c in columns]))
        click.echo("\n".join(lines))
        return

    out = workflow.run(fam, objectives)
    lines = ["\t".join(["criterion", "theta0", "L", "A", "U"])]
    for row in out["rows"]:
        lines.append(
            "\t".join(
                [
                    row["objective"],
                    _fmt(_angle_out(row["theta0"], degrees)),
                    _fmt(row["length"]),
                    _fmt(row["area"]),
                    _fmt(row["energy"]),
                ]
            )
        )
    click.echo("\n".join(lines))

    results = [out["results"][obj.value] for obj in objectives]
    if output is not None:
        _write(output, emit_polyarc(results[0].spline, angle_unit=_unit(degrees), units=pa.units))
    if svg_path is not None:
        opts = RenderOptions.from_config(config_path)
        if len(results) == 1:
            text = render_svg(results[0].spline, opts)
        else:
            polygon = list(pa.vertices) + ([pa.vertices[0]] if pa.closed else [])
            text = render_family_svg([r.spline for r in results], opts, polygon=polygon)
        _write(svg_path, text)


@cli.command("sample")
@click.argument("file", type=click.File("rb"))
@click.option("-n", "points", type=int, default=16, show_default=True, help="Points per segment, ends included.")
@_common_options
@_handle_errors
def sample_cmd(file, points, degrees, force_closed, force_open, output, config_path, verbose) -> None:
    """Points along the polyarc, uniform in arc length per segment."""
    _setup_logging(verbose)
    pa = _read(file, degrees, force_closed, force_open)
    pts = sample(pa, points)
    _write(output, "".join(f"{p.x!r} {p.y!r}\n" for p in pts))


def main() -> None:
    cli(prog_name="arcspline")


if __name__ == "__main__":
    main()
