"""Pydantic models for config files and service requests"""

from .schemas import (
    BenchmarkPlanModel,
    DeltaRequest,
    DetectRequest,
    DetectionConfigModel,
    PairSourceModel,
    ProcessSpecModel,
    ProfileRequest,
    SegmentModel,
    SimulateRequest,
    parse_config,
)

__all__ = [
    "BenchmarkPlanModel",
    "DeltaRequest",
    "DetectRequest",
    "DetectionConfigModel",
    "PairSourceModel",
    "ProcessSpecModel",
    "ProfileRequest",
    "SegmentModel",
    "SimulateRequest",
    "parse_config",
]
