"""Ball counting and growth-rate brackets."""

from .engine import KERNEL_AVAILABLE, ball_sizes, resolve_workers
from .table import (
    CSV_HEADER,
    GrowthBrackets,
    GrowthTable,
    growth_brackets,
    theta_ratio,
)

__all__ = [
    "CSV_HEADER",
    "GrowthBrackets",
    "GrowthTable",
    "KERNEL_AVAILABLE",
    "ball_sizes",
    "growth_brackets",
    "resolve_workers",
    "theta_ratio",
]
