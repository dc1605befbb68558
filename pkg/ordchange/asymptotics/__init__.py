"""Asymptotic Delta-functional and Monte-Carlo pair distributions"""

from .delta import (
    DELTA_SCHEMA,
    DeltaQuery,
    default_theta_grid,
    delta,
    delta_grid,
    delta_max,
)
from .montecarlo import (
    delta_table,
    mc_pair_distribution,
    mc_pattern_distribution,
)

__all__ = [
    "DELTA_SCHEMA",
    "DeltaQuery",
    "default_theta_grid",
    "delta",
    "delta_grid",
    "delta_max",
    "delta_table",
    "mc_pair_distribution",
    "mc_pattern_distribution",
]
