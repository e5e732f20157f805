from .golden import INV_RATIO, gss, gss_run  # noqa: F401
from .objectives import objective_value, scan_objective, smooth, spline_metrics  # noqa: F401
