"""Single and multiple change-point detection with bootstrap thresholds"""

from .bootstrap import (
    block_shuffle,
    bootstrap_maxima,
    n_bootstrap,
    replicate_rng,
    threshold_decision,
    threshold_rank,
)
from .engine import (
    BDCorrStatistic,
    BDExpStatistic,
    CEofOPStatistic,
    ChangePointDetector,
    DetectionConfig,
    SegmentStatistic,
    SegmentStep,
    SegmentTest,
    StatisticKind,
    build_statistic,
    minimal_segment_length,
)
from .segmentation import (
    DetectionReport,
    binary_segmentation,
    check_series_length,
    detect_multiple,
    detect_series,
    detect_single,
    map_to_series_time,
)

__all__ = [
    "BDCorrStatistic",
    "BDExpStatistic",
    "CEofOPStatistic",
    "ChangePointDetector",
    "DetectionConfig",
    "DetectionReport",
    "SegmentStatistic",
    "SegmentStep",
    "SegmentTest",
    "StatisticKind",
    "binary_segmentation",
    "block_shuffle",
    "bootstrap_maxima",
    "build_statistic",
    "check_series_length",
    "detect_multiple",
    "detect_series",
    "detect_single",
    "map_to_series_time",
    "minimal_segment_length",
    "n_bootstrap",
    "replicate_rng",
    "threshold_decision",
    "threshold_rank",
]
