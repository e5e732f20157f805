from .types import (  # noqa: F401
    ArcSeg,
    CenterParams,
    GssConfig,
    GssResult,
    Objective,
    Polyarc,
    SmoothResult,
    SplineFamily,
    SplineMetrics,
    ValidationIssue,
    ValidationReport,
)
