"""
Benchmark runner: seeded trials, per-trial tables and summaries

Trial j of length L draws its randomness from three streams derived from the
master seed and (L, j): change-point placement, simulation and the bootstrap
master seed. Results therefore do not depend on the thread count.
"""

import json
import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
import pandas as pd

from ..detection.engine import (
    ChangePointDetector,
    DetectionConfig,
    StatisticKind,
    build_statistic,
)
from ..detection.segmentation import detect_series
from ..errors import ConfigError
from ..processes.generators import simulate
from ..processes.placement import random_change_points
from .metrics import multi_change_metrics, nearest_errors, single_change_metrics
from .plans import BenchMode, BenchmarkPlan

logger = logging.getLogger(__name__)

TRIALS_SCHEMA = "ordchange.trials/1"
SUMMARY_SCHEMA = "ordchange.summary/1"

TRIAL_COLUMNS = [
    "schema", "plan", "length", "trial", "statistic",
    "true_change_points", "estimates", "errors",
]

# spawn keys of the per-trial streams
_PLACEMENT, _SIMULATION, _BOOTSTRAP = 0, 1, 2


@dataclass
class TrialResult:
    """True change-points of one realization and each statistic's estimates"""
    plan: str
    length: int
    trial: int
    true_change_points: List[int]
    estimates: Dict[str, List[int]] = field(default_factory=dict)

    def errors(self, statistic: str, multi: bool) -> List[float]:
        """Signed errors in single-change mode, nearest absolute errors otherwise"""
        estimates = self.estimates[statistic]
        if multi:
            return [float(e) for e in nearest_errors(estimates, self.true_change_points)]
        return [float(estimates[0] - self.true_change_points[0])]


@dataclass
class BenchmarkSummary:
    """Metrics of every statistic at one series length"""
    plan: BenchmarkPlan
    length: int
    n_trials: int
    metrics: Dict[str, Dict[str, Any]]
    seed: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": SUMMARY_SCHEMA,
            "plan": self.plan.name,
            "mode": self.plan.mode.value,
            "length": self.length,
            "n_trials": self.n_trials,
            "seed": self.seed,
            "metrics": self.metrics,
        }


@dataclass
class BenchmarkRun:
    """Everything one benchmark invocation produced"""
    plan: BenchmarkPlan
    seed: int
    n_trials: int
    frame: pd.DataFrame = field(repr=False)
    summaries: List[BenchmarkSummary]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": SUMMARY_SCHEMA,
            "config": self.plan.to_dict(),
            "seed": self.seed,
            "n_trials": self.n_trials,
            "summaries": [s.to_dict() for s in self.summaries],
        }


def _stream(master_seed: int, length: int, trial: int, purpose: int) -> np.random.SeedSequence:
    return np.random.SeedSequence(master_seed, spawn_key=(length, trial, purpose))


def _estimate(plan: BenchmarkPlan, kind: StatisticKind, values: np.ndarray,
              bootstrap_seed: int) -> List[int]:
    config = DetectionConfig(order=plan.order, alpha=plan.alpha, master_seed=bootstrap_seed,
                             statistic=kind, delta=plan.delta)
    if plan.mode is BenchMode.MULTI:
        return detect_series(values, config, multi=True).change_points

    # raw argmax, no threshold
    detector = ChangePointDetector(build_statistic(kind, values, plan.order, plan.delta), config)
    t_min = config.t_min if kind is StatisticKind.CEOFOP else 0
    profile = detector.estimate(t_min)
    if profile.is_empty:
        raise ConfigError(f"series of length {values.size - 1} leaves no admissible split time")
    return [int(profile.argmax_t)]


def run_trial(plan: BenchmarkPlan, length: int, trial: int, master_seed: int) -> TrialResult:
    """Simulate one realization of the plan and estimate its change-points"""
    placement_rng = np.random.default_rng(_stream(master_seed, length, trial, _PLACEMENT))
    change_points = random_change_points(plan.center_times(length), plan.window,
                                         placement_rng, length)
    series = simulate(plan.spec(change_points, length),
                      _stream(master_seed, length, trial, _SIMULATION))
    bootstrap_seed = int(_stream(master_seed, length, trial, _BOOTSTRAP)
                         .generate_state(1, dtype=np.uint64)[0])

    result = TrialResult(plan.name, length, trial, change_points)
    for kind in plan.statistics:
        result.estimates[kind.value] = _estimate(plan, kind, series.values, bootstrap_seed)
    logger.debug("Trial %d (L=%d): truth %s, estimates %s", trial, length, change_points, result.estimates)
    return result


def _join(values) -> str:
    return ";".join(repr(v) if isinstance(v, float) else str(v) for v in values)


def _split(text) -> List[float]:
    text = "" if text is None else str(text)
    return [float(v) for v in text.split(";") if v != ""]


def trials_frame(plan: BenchmarkPlan, results: List[TrialResult]) -> pd.DataFrame:
    """Long-format table: one row per trial and statistic"""
    multi = plan.mode is BenchMode.MULTI
    rows = [
        {
            "schema": TRIALS_SCHEMA,
            "plan": result.plan,
            "length": result.length,
            "trial": result.trial,
            "statistic": kind.value,
            "true_change_points": _join(result.true_change_points),
            "estimates": _join(result.estimates[kind.value]),
            "errors": _join(result.errors(kind.value, multi)),
        }
        for result in results
        for kind in plan.statistics
    ]
    return pd.DataFrame(rows, columns=TRIAL_COLUMNS)


def load_trials(path: str) -> pd.DataFrame:
    """Read a trials CSV keeping list columns as text"""
    text_columns = {"true_change_points": str, "estimates": str, "errors": str}
    return pd.read_csv(path, dtype=text_columns, keep_default_na=False)


def summarize(frame: pd.DataFrame, plan: BenchmarkPlan,
              seed: Optional[int] = None) -> List[BenchmarkSummary]:
    """One summary per length, computed from the per-trial table alone"""
    if frame.empty:
        raise ConfigError("no trial results to summarize")
    summaries = []
    for length, by_length in frame.groupby("length", sort=True):
        metrics: Dict[str, Dict[str, Any]] = {}
        n_trials = 0
        for kind in plan.statistics:
            rows = by_length[by_length["statistic"] == kind.value].sort_values("trial")
            truths = [[int(v) for v in _split(t)] for t in rows["true_change_points"]]
            estimates = [[int(v) for v in _split(e)] for e in rows["estimates"]]
            n_trials = len(rows)
            if plan.mode is BenchMode.MULTI:
                result = multi_change_metrics(estimates, truths, plan.satisfactory_error)
            else:
                result = single_change_metrics([e[0] for e in estimates], [t[0] for t in truths],
                                               plan.satisfactory_error)
            metrics[kind.value] = result.to_dict()
        summaries.append(BenchmarkSummary(plan, int(length), n_trials, metrics, seed))
    return summaries


def run_benchmark(plan: BenchmarkPlan, n_trials: Optional[int] = None, seed: int = 0,
                  threads: int = 1) -> BenchmarkRun:
    """Run N seeded trials at every length of the plan"""
    n_trials = plan.trials if n_trials is None else n_trials
    if n_trials < 1:
        raise ConfigError(f"trial count must be positive, got {n_trials}")
    if threads < 1:
        raise ConfigError(f"threads must be at least 1, got {threads}")

    jobs: List[Tuple[int, int]] = [(length, j) for length in plan.lengths for j in range(n_trials)]
    logger.info("Running plan %s: %d trials at %d length(s)", plan.name, n_trials, len(plan.lengths))
    with ThreadPoolExecutor(max_workers=threads) as executor:
        results = list(executor.map(lambda job: run_trial(plan, job[0], job[1], seed), jobs))

    frame = trials_frame(plan, results)
    summaries = summarize(frame, plan, seed)
    logger.info("Finished plan %s", plan.name)
    return BenchmarkRun(plan, seed, n_trials, frame, summaries)


def write_outputs(run: BenchmarkRun, out_dir: str) -> Tuple[str, str]:
    """Write <plan>-trials.csv and <plan>-summary.json, returning their paths"""
    os.makedirs(out_dir, exist_ok=True)
    trials_path = os.path.join(out_dir, f"{run.plan.name}-trials.csv")
    summary_path = os.path.join(out_dir, f"{run.plan.name}-summary.json")
    run.frame.to_csv(trials_path, index=False, lineterminator="\n")
    with open(summary_path, "w", encoding="utf-8") as f:
        json.dump(run.to_dict(), f, sort_keys=True, indent=2)
        f.write("\n")
    return trials_path, summary_path
