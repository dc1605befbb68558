"""Experiment harness: accuracy metrics, benchmark plans and the trial runner"""

from .metrics import (
    DEFAULT_MAX_ERROR,
    MultiChangeMetrics,
    SingleChangeMetrics,
    multi_change_metrics,
    nearest_errors,
    single_change_metrics,
)
from .plans import (
    BENCHMARK_PLANS,
    BenchMode,
    BenchmarkPlan,
    get_benchmark_plan,
    list_benchmark_plans,
)
from .runner import (
    SUMMARY_SCHEMA,
    TRIALS_SCHEMA,
    BenchmarkRun,
    BenchmarkSummary,
    TrialResult,
    load_trials,
    run_benchmark,
    run_trial,
    summarize,
    trials_frame,
    write_outputs,
)

__all__ = [
    "DEFAULT_MAX_ERROR",
    "MultiChangeMetrics",
    "SingleChangeMetrics",
    "multi_change_metrics",
    "nearest_errors",
    "single_change_metrics",
    "BENCHMARK_PLANS",
    "BenchMode",
    "BenchmarkPlan",
    "get_benchmark_plan",
    "list_benchmark_plans",
    "SUMMARY_SCHEMA",
    "TRIALS_SCHEMA",
    "BenchmarkRun",
    "BenchmarkSummary",
    "TrialResult",
    "load_trials",
    "run_benchmark",
    "run_trial",
    "summarize",
    "trials_frame",
    "write_outputs",
]
