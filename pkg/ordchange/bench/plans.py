"""Built-in benchmark plans for common experiment protocols"""

from dataclasses import dataclass, replace
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..config import BENCH_CONFIG
from ..detection.engine import StatisticKind
from ..errors import ConfigError
from ..processes.generators import ProcessKind, ProcessSpec


class BenchMode(Enum):
    """Experiment protocols"""
    SINGLE = "single"    # raw argmax estimate of one change
    MULTI = "multi"      # full detection with bootstrap thresholds
    SWEEP = "sweep"      # single-change protocol over several lengths


@dataclass(frozen=True)
class BenchmarkPlan:
    """
    A declarative experiment

    Features:
    - Process family and per-segment parameters
    - Change-point centers as fractions of L, each drawn uniformly within
      +/- window of its center
    - Lengths as multiples of the window, ORDCHANGE_WINDOW unless given
    """
    name: str
    description: str
    mode: BenchMode
    kind: ProcessKind
    segment_params: Tuple[Tuple[float, ...], ...]
    centers: Tuple[float, ...]
    length_windows: Tuple[int, ...]
    statistics: Tuple[StatisticKind, ...]
    window: Optional[int] = None
    order: int = 3
    alpha: float = 0.05
    delta: float = 0.0
    max_error: Optional[int] = None
    default_trials: Optional[int] = None

    def __post_init__(self):
        if self.window is None:
            object.__setattr__(self, "window", BENCH_CONFIG["window"])
        errors = []
        if len(self.segment_params) != len(self.centers) + 1:
            errors.append("segment_params: need one more segment than centers")
        if not self.length_windows:
            errors.append("length_windows: at least one length is required")
        if self.mode is not BenchMode.SWEEP and len(self.length_windows) != 1:
            errors.append("length_windows: only sweep plans take several lengths")
        if self.mode is BenchMode.SINGLE and len(self.centers) != 1:
            errors.append("centers: single-change plans take exactly one center")
        if any(not 0.0 < c < 1.0 for c in self.centers):
            errors.append("centers: fractions must lie in (0, 1)")
        if not self.statistics:
            errors.append("statistics: at least one statistic is required")
        if self.window < 1:
            errors.append("window: must be positive")
        if errors:
            raise ConfigError(f"invalid benchmark plan {self.name!r}", errors)

    @property
    def lengths(self) -> List[int]:
        return [w * self.window for w in self.length_windows]

    @property
    def satisfactory_error(self) -> int:
        return self.window if self.max_error is None else self.max_error

    @property
    def trials(self) -> int:
        if self.default_trials is not None:
            return self.default_trials
        key = "multi_trials" if self.mode is BenchMode.MULTI else "single_trials"
        return BENCH_CONFIG[key]

    def center_times(self, length: int) -> List[int]:
        return [int(round(c * length)) for c in self.centers]

    def spec(self, change_points: Sequence[int], length: int) -> ProcessSpec:
        return ProcessSpec(self.kind, self.segment_params, tuple(change_points), length)

    def with_overrides(self, **changes) -> "BenchmarkPlan":
        return replace(self, **changes)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "description": self.description,
            "mode": self.mode.value,
            "kind": self.kind.value,
            "segment_params": [list(p) for p in self.segment_params],
            "centers": list(self.centers),
            "length_windows": list(self.length_windows),
            "statistics": [s.value for s in self.statistics],
            "window": self.window,
            "order": self.order,
            "alpha": self.alpha,
            "delta": self.delta,
            "max_error": self.satisfactory_error,
        }


ALL_STATISTICS = (StatisticKind.CEOFOP, StatisticKind.BD_EXP, StatisticKind.BD_CORR)
THRESHOLDED_STATISTICS = (StatisticKind.CEOFOP, StatisticKind.BD_CORR)
SWEEP_WINDOWS = tuple(range(24, 121, 4))


def _single_change(name: str, description: str, kind: ProcessKind,
                   params: Tuple[Tuple[float, ...], ...]) -> BenchmarkPlan:
    return BenchmarkPlan(
        name=name,
        description=description,
        mode=BenchMode.SINGLE,
        kind=kind,
        segment_params=params,
        centers=(0.25,),
        length_windows=(80,),
        statistics=ALL_STATISTICS,
    )


def _four_segments(name: str, description: str, kind: ProcessKind,
                   params: Tuple[Tuple[float, ...], ...]) -> BenchmarkPlan:
    return BenchmarkPlan(
        name=name,
        description=description,
        mode=BenchMode.MULTI,
        kind=kind,
        segment_params=params,
        centers=(0.3, 0.7, 0.9),
        length_windows=(100,),
        statistics=THRESHOLDED_STATISTICS,
    )


def _length_sweep(name: str, description: str, kind: ProcessKind,
                  params: Tuple[Tuple[float, ...], ...]) -> BenchmarkPlan:
    return BenchmarkPlan(
        name=name,
        description=description,
        mode=BenchMode.SWEEP,
        kind=kind,
        segment_params=params,
        centers=(0.25,),
        length_windows=SWEEP_WINDOWS,
        statistics=ALL_STATISTICS,
    )


BENCHMARK_PLANS: Dict[str, BenchmarkPlan] = {
    plan.name: plan
    for plan in (
        _single_change("nl-3.95-to-3.98", "NL, r 3.95 -> 3.98, sigma 0.2, L = 80W",
                       ProcessKind.NL, ((3.95, 0.2), (3.98, 0.2))),
        _single_change("nl-3.95-to-3.80", "NL, r 3.95 -> 3.80, sigma 0.3, L = 80W",
                       ProcessKind.NL, ((3.95, 0.3), (3.80, 0.3))),
        _single_change("nl-3.95-to-4.00", "NL, r 3.95 -> 4.00, sigma 0.2, L = 80W",
                       ProcessKind.NL, ((3.95, 0.2), (4.00, 0.2))),
        _single_change("ar-0.1-to-0.3", "AR, phi 0.1 -> 0.3, L = 80W",
                       ProcessKind.AR, ((0.1,), (0.3,))),
        _single_change("ar-0.1-to-0.4", "AR, phi 0.1 -> 0.4, L = 80W",
                       ProcessKind.AR, ((0.1,), (0.4,))),
        _single_change("ar-0.1-to-0.5", "AR, phi 0.1 -> 0.5, L = 80W",
                       ProcessKind.AR, ((0.1,), (0.5,))),
        _four_segments("nl-four-segments",
                       "NL, r (3.98, 4, 3.95, 3.8), sigma (0.2, 0.2, 0.2, 0.3), "
                       "changes near 0.3L, 0.7L, 0.9L, L = 100W",
                       ProcessKind.NL, ((3.98, 0.2), (4.0, 0.2), (3.95, 0.2), (3.8, 0.3))),
        _four_segments("ar-four-segments",
                       "AR, phi (0.3, 0.5, 0.1, 0.4), changes near 0.3L, 0.7L, 0.9L, L = 100W",
                       ProcessKind.AR, ((0.3,), (0.5,), (0.1,), (0.4,))),
        _length_sweep("nl-length-sweep", "NL, r 3.95 -> 3.98, sigma 0.2, L = 24W .. 120W",
                      ProcessKind.NL, ((3.95, 0.2), (3.98, 0.2))),
        _length_sweep("ar-length-sweep", "AR, phi 0.1 -> 0.4, L = 24W .. 120W",
                      ProcessKind.AR, ((0.1,), (0.4,))),
    )
}


def get_benchmark_plan(name: str) -> Optional[BenchmarkPlan]:
    """Get a built-in benchmark plan by name"""
    return BENCHMARK_PLANS.get(name)


def list_benchmark_plans() -> List[Dict[str, str]]:
    """List all built-in benchmark plans"""
    return [
        {"name": name, "description": plan.description, "mode": plan.mode.value}
        for name, plan in BENCHMARK_PLANS.items()
    ]
