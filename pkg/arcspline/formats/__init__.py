from .polyarc_json import emit_polyarc, load_document, parse_polyarc  # noqa: F401
from .schemas import PointModel, PolyarcDocument  # noqa: F401
from .svg_render import RenderOptions, path_data, render_family_svg, render_svg  # noqa: F401
from .validation import validate_points  # noqa: F401
