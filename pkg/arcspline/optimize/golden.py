"""
Golden-section search for the minimum of a scalar function on [lo, up].

Each step places two interior points at up - delta*INV_RATIO and
lo + delta*INV_RATIO and keeps [lo, inner_up] when f(inner_lo) < f(inner_up),
otherwise [inner_lo, up]; ties keep the upper sub-interval. The search stops
as soon as the bracket width is <= tol and returns the bracket midpoint. Both
interior points are evaluated on every step, so evaluations == 2 * reductions.
"""

import logging
import math
from typing import Callable

from arcspline.errors import GssIterationError
from arcspline.models.types import GssConfig, GssResult

logger = logging.getLogger(__name__)

INV_RATIO = (math.sqrt(5.0) - 1.0) / 2.0


def gss_run(f: Callable[[float], float], cfg: GssConfig) -> GssResult:
    lo, up = cfg.lo, cfg.up
    reductions = 0
    evaluations = 0
    while up - lo > cfg.tol:
        if reductions >= cfg.max_iter:
            raise GssIterationError(
                f"golden-section search did not reach tol={cfg.tol!r} within {cfg.max_iter} steps "
                f"(bracket [{lo!r}, {up!r}])"
            )
        delta = up - lo
        inner_lo = up - delta * INV_RATIO
        inner_up = lo + delta * INV_RATIO
        if f(inner_lo) < f(inner_up):
            up = inner_up
        else:
            lo = inner_lo
        evaluations += 2
        reductions += 1
    x = 0.5 * (up + lo)
    logger.debug("gss: x=%.17g after %d reductions, %d evaluations", x, reductions, evaluations)
    return GssResult(x=x, lo=lo, up=up, reductions=reductions, evaluations=evaluations)


def gss(f: Callable[[float], float], cfg: GssConfig) -> float:
    return gss_run(f, cfg).x
