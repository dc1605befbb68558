"""Multiple change-points: binary segmentation followed by boundary verification"""

import logging
from dataclasses import dataclass, field, replace
from typing import Any, Dict, List, Optional, Tuple

from ..errors import ConfigError, SeriesTooShortError
from ..ordinal.patterns import PatternSequence
from .engine import (
    ChangePointDetector,
    DetectionConfig,
    SegmentStep,
    SegmentTest,
    build_statistic,
)

logger = logging.getLogger(__name__)

REPORT_SCHEMA = "ordchange.report/1"


def map_to_series_time(pattern_time: int, order: int) -> int:
    """
    Series index reported for a change-point found at pattern time t

    The patterns pi(t+1) .. pi(t+d-1) straddle the change; the pattern time
    itself is taken as the estimate, so the mapping is the identity.
    """
    return int(pattern_time)


@dataclass
class DetectionReport:
    """Change-points found in one series and how they were decided"""
    statistic: str
    config: DetectionConfig
    change_points: List[int] = field(default_factory=list)
    tests: List[SegmentTest] = field(default_factory=list)
    series_length: Optional[int] = None

    def __post_init__(self):
        if any(b <= a for a, b in zip(self.change_points, self.change_points[1:])):
            raise ValueError("change_points must be strictly increasing")

    @property
    def n_segments(self) -> int:
        return len(self.change_points) + 1

    @property
    def thresholds(self) -> List[Dict[str, Any]]:
        return [
            {"segment": [test.t_start, test.t_end], "threshold": test.threshold, "n_boot": test.n_boot}
            for test in self.tests if not test.too_short
        ]

    @property
    def decisions(self) -> List[str]:
        return [test.describe() for test in self.tests]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": REPORT_SCHEMA,
            "statistic": self.statistic,
            "config": self.config.to_dict(),
            "series_length": self.series_length,
            "change_points": list(self.change_points),
            "n_segments": self.n_segments,
            "thresholds": self.thresholds,
            "decisions": self.decisions,
            "tests": [test.to_dict() for test in self.tests],
        }


def binary_segmentation(detector: ChangePointDetector,
                        alpha: Optional[float] = None) -> Tuple[List[int], List[SegmentTest]]:
    """
    Boundaries of stationary segments and the tests that placed them

    Step 1 splits segments left to right with level 2 alpha, re-testing the
    left part after each detection, until no segment yields a change. Step 2
    re-tests every interior boundary with level alpha on the union of its two
    neighbouring segments, moving it to the new estimate or deleting it.
    Boundaries b_k split the data so that segment k is [b_k + gap, b_{k+1}].
    """
    alpha = detector.config.alpha if alpha is None else alpha
    if not 0.0 < alpha < 0.5:
        raise ConfigError(
            f"multiple detection tests at level 2 alpha first, so alpha must lie in (0, 0.5), got {alpha}"
        )
    first, last = detector.statistic.domain()
    gap = detector.statistic.gap
    boundaries = [first - gap, last]
    tests: List[SegmentTest] = []

    # preliminary estimation
    k = 0
    while k < len(boundaries) - 1:
        test = detector.test_segment(boundaries[k] + gap, boundaries[k + 1],
                                     2 * alpha, SegmentStep.PRELIMINARY)
        tests.append(test)
        if test.detected:
            boundaries.insert(k + 1, test.candidate)
        else:
            k += 1
    logger.debug("Preliminary boundaries: %s", boundaries[1:-1])

    # verification
    k = 0
    while k < len(boundaries) - 2:
        test = detector.test_segment(boundaries[k] + gap, boundaries[k + 2],
                                     alpha, SegmentStep.VERIFICATION)
        tests.append(test)
        if test.detected:
            boundaries[k + 1] = test.candidate
            k += 1
        else:
            del boundaries[k + 1]
    logger.debug("Verified boundaries: %s", boundaries[1:-1])

    return boundaries[1:-1], tests


def detect_single(seq: PatternSequence, alpha: Optional[float] = None, seed: Optional[int] = None,
                  config: Optional[DetectionConfig] = None) -> Optional[int]:
    """At most one change-point in a whole pattern sequence, or None"""
    detector = ChangePointDetector.for_sequence(seq, _with_seed(config, seq.order, seed))
    candidate = detector.detect_single(alpha=alpha)
    return None if candidate is None else map_to_series_time(candidate, seq.order)


def detect_multiple(seq: PatternSequence, alpha: Optional[float] = None, seed: Optional[int] = None,
                    config: Optional[DetectionConfig] = None) -> DetectionReport:
    """All change-points of a pattern sequence"""
    detector = ChangePointDetector.for_sequence(seq, _with_seed(config, seq.order, seed))
    return _report(detector, alpha, multi=True, series_length=seq.end_time + 1)


def check_series_length(values, config: DetectionConfig) -> int:
    """Number of values, or SeriesTooShortError below 2 T_min + 1"""
    n_values = len(values)
    if n_values < config.minimum_series_length:
        raise SeriesTooShortError(n_values, config.order, config.minimum_series_length)
    return n_values


def detect_series(values, config: DetectionConfig, multi: bool = True) -> DetectionReport:
    """Detect change-points in a raw series x(0..L) with the configured statistic"""
    n_values = check_series_length(values, config)
    statistic = build_statistic(config.statistic, values, config.order, config.delta)
    detector = ChangePointDetector(statistic, config)
    return _report(detector, None, multi=multi, series_length=n_values)


def _report(detector: ChangePointDetector, alpha: Optional[float], multi: bool,
            series_length: Optional[int]) -> DetectionReport:
    order = detector.config.order
    if multi:
        boundaries, tests = binary_segmentation(detector, alpha)
    else:
        first, last = detector.statistic.domain()
        test = detector.test_segment(first, last, alpha, SegmentStep.SINGLE)
        tests = [test]
        boundaries = [] if test.change_point is None else [test.change_point]
    return DetectionReport(
        statistic=detector.statistic.name,
        config=detector.config,
        change_points=[map_to_series_time(t, order) for t in boundaries],
        tests=tests,
        series_length=series_length,
    )


def _with_seed(config: Optional[DetectionConfig], order: int, seed: Optional[int]) -> DetectionConfig:
    if config is None:
        config = DetectionConfig(order=order)
    if seed is not None and seed != config.master_seed:
        config = replace(config, master_seed=seed)
    return config
