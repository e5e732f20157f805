"""arcspline package initializer."""

__all__ = [
    "formats",
    "geometry",
    "models",
    "optimize",
    "workflow",
]
