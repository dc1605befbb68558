"""Single change-point testing with bootstrap thresholds"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from math import factorial
from typing import Any, Callable, Dict, Optional, Tuple

import numpy as np

from ..errors import ConfigError, InvalidInputError
from ..ordinal.patterns import MAX_ORDER, PatternSequence, extract_sequence
from ..statistics.brodsky_darkhovsky import bd_exp_profile, correlation_series
from ..statistics.ceofop import ceofop_profile
from ..statistics.profile import StatProfile
from .bootstrap import (
    block_shuffle,
    bootstrap_maxima,
    check_alpha,
    n_bootstrap,
    threshold_decision,
)

logger = logging.getLogger(__name__)

MAX_SEED = 2 ** 64


def minimal_segment_length(order: int) -> int:
    """T_min = (d+1)!(d+1), the number of distinct pattern pairs"""
    return factorial(order + 1) * (order + 1)


class StatisticKind(Enum):
    """Statistics a detector can be built on"""
    CEOFOP = "ceofop"
    BD_EXP = "bd_exp"
    BD_CORR = "bd_corr"

    @classmethod
    def _missing_(cls, value):
        # accept "bdexp", "BD-exp", ...
        if isinstance(value, str):
            key = value.lower().replace("-", "").replace("_", "")
            for member in cls:
                if member.value.replace("_", "") == key:
                    return member
        return None


class SegmentStep(Enum):
    """Which stage of detection ran a segment test"""
    SINGLE = "single"
    PRELIMINARY = "preliminary"
    VERIFICATION = "verification"


@dataclass
class DetectionConfig:
    """Settings shared by single and multiple change-point detection"""
    order: int = 3
    alpha: float = 0.05
    t_min: Optional[int] = None
    n_boot_override: Optional[int] = None
    master_seed: int = 0
    threads: int = 1
    statistic: StatisticKind = StatisticKind.CEOFOP
    delta: float = 0.0

    def __post_init__(self):
        if isinstance(self.statistic, str):
            try:
                self.statistic = StatisticKind(self.statistic)
            except ValueError:
                raise ConfigError(f"unknown statistic {self.statistic!r}") from None
        if not 1 <= self.order <= MAX_ORDER:
            raise ConfigError(f"order must be between 1 and {MAX_ORDER}, got {self.order}")
        check_alpha(self.alpha)
        if self.t_min is None:
            self.t_min = minimal_segment_length(self.order)
        if self.t_min < 1:
            raise ConfigError(f"t_min must be at least 1, got {self.t_min}")
        if self.n_boot_override is not None and self.n_boot_override < 1:
            raise ConfigError(f"n_boot_override must be positive, got {self.n_boot_override}")
        if not 0 <= self.master_seed < MAX_SEED:
            raise ConfigError("master_seed must be a 64-bit nonnegative integer")
        if self.threads < 1:
            raise ConfigError(f"threads must be at least 1, got {self.threads}")
        if not 0.0 <= self.delta <= 1.0:
            raise ConfigError(f"delta must lie in [0, 1], got {self.delta}")

    @property
    def minimum_series_length(self) -> int:
        """Fewest series values x(0..L) with L > 2 T_min"""
        return 2 * self.t_min + 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            "order": self.order,
            "alpha": self.alpha,
            "t_min": self.t_min,
            "n_boot_override": self.n_boot_override,
            "master_seed": self.master_seed,
            "statistic": self.statistic.value,
            "delta": self.delta,
        }


class SegmentStatistic(ABC):
    """
    A change-point statistic evaluated on segments [t_start, t_end]

    Features:
    - Profile over the split times at least t_min from both segment ends
    - Surrogate profile maxima from a block-shuffled copy of the segment
    - gap: offset between a boundary and the start of the segment after it
    """

    name: str = ""

    def __init__(self, order: int):
        self.order = order

    @property
    @abstractmethod
    def gap(self) -> int:
        """Times after a boundary that belong to neither adjacent segment"""

    @abstractmethod
    def domain(self) -> Tuple[int, int]:
        """First and last time of the whole data"""

    @abstractmethod
    def profile(self, t_start: int, t_end: int, t_min: int) -> StatProfile:
        """Statistic at t_start + t_min <= t <= t_end - t_min"""

    @abstractmethod
    def surrogate_maximum(self, t_start: int, t_end: int, t_min: int,
                          rng: np.random.Generator) -> float:
        """Profile maximum of one block-shuffled surrogate of the segment"""

    @property
    def block_length(self) -> int:
        return self.order + 1


class CEofOPStatistic(SegmentStatistic):
    """CEofOP over a pattern sequence; surrogates shuffle blocks of pattern codes"""

    name = StatisticKind.CEOFOP.value

    def __init__(self, sequence: PatternSequence):
        super().__init__(sequence.order)
        self.sequence = sequence

    @property
    def gap(self) -> int:
        return self.order

    def domain(self) -> Tuple[int, int]:
        return self.sequence.start_time, self.sequence.end_time

    def profile(self, t_start: int, t_end: int, t_min: int) -> StatProfile:
        return ceofop_profile(self.sequence.sub_sequence(t_start, t_end), t_min)

    def surrogate_maximum(self, t_start, t_end, t_min, rng) -> float:
        segment = self.sequence.sub_sequence(t_start, t_end)
        shuffled = segment.with_codes(block_shuffle(segment.codes, self.block_length, rng))
        result = ceofop_profile(shuffled, t_min)
        return -np.inf if result.is_empty else result.max_value


class BrodskyDarkhovskyStatistic(SegmentStatistic):
    """
    BD statistic over a raw series x(0..L)

    On [t_start, t_end] the vector x(t_start+1 .. t_end) is tested; split t
    compares x(t_start+1 .. t) with x(t+1 .. t_end). Surrogates shuffle blocks
    of d+1 values of the (transformed) vector.
    """

    transform: Callable[[np.ndarray], np.ndarray] = staticmethod(lambda v: v)

    def __init__(self, values, order: int, delta: float = 0.0):
        super().__init__(order)
        values = np.asarray(values, dtype=float)
        if values.ndim != 1 or not np.all(np.isfinite(values)):
            raise InvalidInputError("series must be a finite one-dimensional vector")
        self.values = values
        self.delta = delta

    @property
    def gap(self) -> int:
        return 0

    def domain(self) -> Tuple[int, int]:
        return 0, self.values.size - 1

    def _segment(self, t_start: int, t_end: int) -> np.ndarray:
        return self.transform(self.values[t_start + 1:t_end + 1])

    def _profile_of(self, vector, t_start, t_end, t_min) -> StatProfile:
        full = bd_exp_profile(vector, self.delta, time_offset=t_start, statistic=self.name)
        return full.restrict(t_start + t_min, t_end - t_min)

    def profile(self, t_start: int, t_end: int, t_min: int) -> StatProfile:
        return self._profile_of(self._segment(t_start, t_end), t_start, t_end, t_min)

    def surrogate_maximum(self, t_start, t_end, t_min, rng) -> float:
        shuffled = block_shuffle(self._segment(t_start, t_end), self.block_length, rng)
        result = self._profile_of(shuffled, t_start, t_end, t_min)
        return -np.inf if result.is_empty else result.max_value


class BDExpStatistic(BrodskyDarkhovskyStatistic):
    """Changes in the mean of the series"""
    name = StatisticKind.BD_EXP.value


class BDCorrStatistic(BrodskyDarkhovskyStatistic):
    """Changes in the mean of lag-one products x(t) x(t+1)"""
    name = StatisticKind.BD_CORR.value
    transform = staticmethod(correlation_series)


def build_statistic(kind, values, order: int, delta: float = 0.0) -> SegmentStatistic:
    """Statistic of the given kind over a raw series"""
    kind = StatisticKind(kind)
    if kind is StatisticKind.CEOFOP:
        return CEofOPStatistic(extract_sequence(values, order))
    if kind is StatisticKind.BD_EXP:
        return BDExpStatistic(values, order, delta)
    return BDCorrStatistic(values, order, delta)


@dataclass
class SegmentTest:
    """Outcome of one bootstrap test on a segment"""
    t_start: int
    t_end: int
    alpha: float
    step: SegmentStep
    too_short: bool = False
    candidate: Optional[int] = None
    statistic_value: Optional[float] = None
    threshold: Optional[float] = None
    threshold_rank: Optional[int] = None
    n_boot: int = 0
    detected: bool = False
    profile: Optional[StatProfile] = field(default=None, repr=False)

    @property
    def change_point(self) -> Optional[int]:
        return self.candidate if self.detected else None

    def describe(self) -> str:
        where = f"[{self.t_start}, {self.t_end}] ({self.step.value}, alpha={self.alpha:g})"
        if self.too_short:
            return f"{where}: too short, no change-point can be detected"
        verdict = "detected" if self.detected else "rejected"
        return (f"{where}: candidate {self.candidate} with {self.statistic_value:.6g} "
                f"vs threshold {self.threshold:.6g} -> {verdict}")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "t_start": self.t_start,
            "t_end": self.t_end,
            "alpha": self.alpha,
            "step": self.step.value,
            "too_short": self.too_short,
            "candidate": self.candidate,
            "statistic_value": self.statistic_value,
            "threshold": self.threshold,
            "threshold_rank": self.threshold_rank,
            "n_boot": self.n_boot,
            "detected": self.detected,
            "profile": self.profile.to_dict() if self.profile is not None else None,
        }


class ChangePointDetector:
    """
    Detects at most one change-point per segment

    Features:
    - Argmax of the statistic at least T_min from both segment ends
    - Threshold from floor(5 / alpha) block-bootstrap replicates
    - Replicate streams derived from the master seed and the segment, so
      results do not depend on thread count or call order
    """

    def __init__(self, statistic: SegmentStatistic, config: Optional[DetectionConfig] = None):
        self.statistic = statistic
        self.config = config or DetectionConfig(order=statistic.order)
        if self.config.order != statistic.order:
            raise ConfigError(
                f"config order {self.config.order} does not match statistic order {statistic.order}"
            )

    @classmethod
    def for_sequence(cls, sequence: PatternSequence,
                     config: Optional[DetectionConfig] = None) -> "ChangePointDetector":
        config = config or DetectionConfig(order=sequence.order)
        return cls(CEofOPStatistic(sequence), config)

    def test_segment(self, t_start: int, t_end: int, alpha: Optional[float] = None,
                     step: SegmentStep = SegmentStep.SINGLE) -> SegmentTest:
        """Run the bootstrap test on [t_start, t_end]"""
        alpha = self.config.alpha if alpha is None else alpha
        check_alpha(alpha)
        first, last = self.statistic.domain()
        if not first <= t_start <= t_end <= last:
            raise InvalidInputError(f"segment [{t_start}, {t_end}] outside [{first}, {last}]")

        t_min = self.config.t_min
        result = SegmentTest(t_start=t_start, t_end=t_end, alpha=alpha, step=step)
        if t_end - t_start < 2 * t_min:
            result.too_short = True
            logger.debug(result.describe())
            return result

        profile = self.statistic.profile(t_start, t_end, t_min)
        if profile.is_empty:
            # with t_min <= d the statistic's own range can be empty
            result.too_short = True
            logger.debug(result.describe())
            return result
        result.profile = profile
        result.candidate = profile.argmax_t
        result.statistic_value = profile.max_value

        n_boot = n_bootstrap(alpha, self.config.n_boot_override)
        maxima = bootstrap_maxima(
            lambda rng: self.statistic.surrogate_maximum(t_start, t_end, t_min, rng),
            n_boot,
            self.config.master_seed,
            (t_start, t_end),
            self.config.threads,
        )
        threshold, rank, detected = threshold_decision(profile.max_value, maxima, alpha)
        result.threshold = threshold
        result.threshold_rank = rank
        result.n_boot = n_boot
        result.detected = detected
        logger.debug(result.describe())
        return result

    def detect_single(self, t_start: Optional[int] = None, t_end: Optional[int] = None,
                      alpha: Optional[float] = None) -> Optional[int]:
        """Estimated change-point in [t_start, t_end], or None"""
        first, last = self.statistic.domain()
        t_start = first if t_start is None else t_start
        t_end = last if t_end is None else t_end
        return self.test_segment(t_start, t_end, alpha).change_point

    def estimate(self, t_min: Optional[int] = None) -> StatProfile:
        """Profile over the whole data, for argmax estimation without a threshold"""
        first, last = self.statistic.domain()
        return self.statistic.profile(first, last, self.config.t_min if t_min is None else t_min)
