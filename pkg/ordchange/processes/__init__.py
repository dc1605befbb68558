"""Seeded generators for piecewise stationary test processes"""

from .generators import (
    NORMAL_METHOD,
    ProcessKind,
    ProcessSpec,
    SimulatedSeries,
    gen_ar,
    gen_nl,
    simulate,
)
from .placement import random_change_points

__all__ = [
    "NORMAL_METHOD",
    "ProcessKind",
    "ProcessSpec",
    "SimulatedSeries",
    "gen_ar",
    "gen_nl",
    "random_change_points",
    "simulate",
]
