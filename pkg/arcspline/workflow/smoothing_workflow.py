import logging
import math
import time
from typing import Any, Dict, List, Optional, Sequence

from arcspline.config import load_config
from arcspline.errors import ArcDomainError
from arcspline.models.types import GssConfig, Objective, SmoothResult, SplineFamily
from arcspline.optimize.objectives import smooth

logger = logging.getLogger(__name__)


class SmoothingWorkflow:
    """Runs one or more smoothing criteria over a spline family.

    The output mirrors a comparison table: one row per criterion with the
    optimal start angle and the length, areal difference and bending energy of
    the chosen spline, plus per-criterion search statistics and timings.
    """

    def __init__(self, config: Optional[Dict[str, Any]] = None) -> None:
        self.cfg = config if config is not None else load_config("smoothing")
        self.search = GssConfig.from_mapping(self.cfg)
        self.ei = float(self.cfg.get("ei", 1.0))
        if not self.ei > 0.0:
            raise ArcDomainError(f"bending rigidity EI must be positive, got {self.ei!r}")

    def run(self, family: SplineFamily, objectives: Sequence[Objective] = tuple(Objective)) -> Dict[str, Any]:
        t0 = time.time()
        results: Dict[str, SmoothResult] = {}
        rows: List[Dict[str, Any]] = []
        metadata: Dict[str, Any] = {"timings": {}, "reductions": {}, "evaluations": {}}

        for obj in objectives:
            s0 = time.time()
            res = smooth(family, obj, self.search, self.ei)
            metadata["timings"][obj.value] = int((time.time() - s0) * 1000)
            metadata["reductions"][obj.value] = res.search.reductions
            metadata["evaluations"][obj.value] = res.search.evaluations
            results[obj.value] = res
            rows.append(
                {
                    "objective": obj.value,
                    "theta0": res.theta0,
                    "theta0_deg": math.degrees(res.theta0),
                    "length": res.report.length,
                    "area": res.report.area,
                    "energy": res.report.energy,
                }
            )

        total_ms = int((time.time() - t0) * 1000)
        logger.info("smoothing workflow: %d criteria in %d ms", len(rows), total_ms)
        return {
            "results": results,
            "rows": rows,
            "metadata": {
                **metadata,
                "latency_ms": total_ms,
                "segments": family.segment_count,
                "ei": self.ei,
                "search": {"lo": self.search.lo, "up": self.search.up, "tol": self.search.tol},
            },
        }
