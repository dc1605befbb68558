"""
ordchange: change-point detection from the ordinal structure of time series

The CEofOP statistic (conditional entropy of ordinal patterns), bootstrap
calibrated single and multiple change-point detection, Brodsky-Darkhovsky
baselines, piecewise-stationary process simulators, the asymptotic
Delta-functional and a benchmark harness.
"""

import logging

__version__ = "1.0.0"

logging.getLogger(__name__).addHandler(logging.NullHandler())

from .errors import (  # noqa: E402
    ConfigError,
    InvalidInputError,
    OrdchangeError,
    SeriesFileError,
    SeriesTooShortError,
)
from .ordinal import (  # noqa: E402
    OrdinalPattern,
    PairCounts,
    PatternSequence,
    count_range,
    decode_pattern,
    encode_pattern,
    extract_sequence,
)
from .entropy import PairDistribution, ece, entropy_h  # noqa: E402
from .statistics import StatProfile, ceofop_at, ceofop_profile  # noqa: E402
from .detection import (  # noqa: E402
    ChangePointDetector,
    DetectionConfig,
    DetectionReport,
    detect_multiple,
    detect_single,
)

__all__ = [
    "__version__",
    "ChangePointDetector",
    "ConfigError",
    "DetectionConfig",
    "DetectionReport",
    "InvalidInputError",
    "OrdchangeError",
    "OrdinalPattern",
    "PairCounts",
    "PairDistribution",
    "PatternSequence",
    "SeriesFileError",
    "SeriesTooShortError",
    "StatProfile",
    "ceofop_at",
    "ceofop_profile",
    "count_range",
    "decode_pattern",
    "detect_multiple",
    "detect_single",
    "ece",
    "encode_pattern",
    "entropy_h",
    "extract_sequence",
]
