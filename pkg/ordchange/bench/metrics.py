"""Accuracy measures for change-point estimates"""

from dataclasses import dataclass
from typing import Any, Dict, List, Sequence

import numpy as np

from ..errors import InvalidInputError

DEFAULT_MAX_ERROR = 256


@dataclass(frozen=True)
class SingleChangeMetrics:
    """Fraction of satisfactory estimates sE, bias B and RMSE"""
    satisfactory: float
    bias: float
    rmse: float
    n_trials: int

    def __post_init__(self):
        if not 0.0 <= self.satisfactory <= 1.0:
            raise ValueError(f"sE must lie in [0, 1], got {self.satisfactory}")
        # RMSE^2 = B^2 + variance
        if self.rmse + 1e-9 * max(1.0, self.rmse) < abs(self.bias):
            raise ValueError(f"RMSE {self.rmse} below |B| = {abs(self.bias)}")

    def to_dict(self) -> Dict[str, Any]:
        return {"sE": self.satisfactory, "B": self.bias, "RMSE": self.rmse, "n_trials": self.n_trials}


@dataclass(frozen=True)
class MultiChangeMetrics:
    """Per-change fractions sE_k and the average number of false change-points"""
    satisfactory: List[float]
    false_change_points: float
    n_trials: int

    @property
    def average_satisfactory(self) -> float:
        return float(np.mean(self.satisfactory)) if self.satisfactory else 0.0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "sE_k": list(self.satisfactory),
            "sE_average": self.average_satisfactory,
            "fCP": self.false_change_points,
            "n_trials": self.n_trials,
        }


def single_change_metrics(estimates: Sequence[int], truths: Sequence[int],
                          max_error: int = DEFAULT_MAX_ERROR) -> SingleChangeMetrics:
    """err_j = estimate_j - truth_j summarized over trials"""
    if len(estimates) == 0:
        raise InvalidInputError("no trial results to summarize")
    if len(estimates) != len(truths):
        raise InvalidInputError("estimates and truths must have one entry per trial")
    errors = np.asarray(estimates, dtype=float) - np.asarray(truths, dtype=float)
    return SingleChangeMetrics(
        satisfactory=float(np.mean(np.abs(errors) <= max_error)),
        bias=float(np.mean(errors)),
        rmse=float(np.sqrt(np.mean(errors ** 2))),
        n_trials=len(errors),
    )


def nearest_errors(detected: Sequence[int], truths: Sequence[int]) -> np.ndarray:
    """err_k = min over detections of |detection - truth_k|, inf without detections"""
    truths = np.asarray(truths, dtype=float)
    if len(detected) == 0:
        return np.full(truths.size, np.inf)
    detected = np.asarray(detected, dtype=float)
    return np.min(np.abs(detected[None, :] - truths[:, None]), axis=1)


def multi_change_metrics(detections: Sequence[Sequence[int]], truths: Sequence[Sequence[int]],
                         max_error: int = DEFAULT_MAX_ERROR) -> MultiChangeMetrics:
    """sE_k per true change and fCP = mean(#detected - #true changes matched)"""
    if len(detections) == 0:
        raise InvalidInputError("no trial results to summarize")
    if len(detections) != len(truths):
        raise InvalidInputError("detections and truths must have one entry per trial")
    n_changes = {len(t) for t in truths}
    if len(n_changes) != 1:
        raise InvalidInputError("every trial must have the same number of true change-points")

    matched = np.array([nearest_errors(d, t) <= max_error for d, t in zip(detections, truths)])
    false_counts = [len(d) - int(m.sum()) for d, m in zip(detections, matched)]
    return MultiChangeMetrics(
        satisfactory=[float(v) for v in matched.mean(axis=0)],
        false_change_points=float(np.mean(false_counts)),
        n_trials=len(detections),
    )
