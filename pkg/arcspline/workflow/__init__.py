from .smoothing_workflow import SmoothingWorkflow  # noqa: F401
